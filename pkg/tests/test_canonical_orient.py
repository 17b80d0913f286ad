from collections import Counter

import pytest

from dangul.canonical_orient import (ddm_orient, NotADAngulation, NotAnnular, even_weight_check,
                                     pseudo_ddm_orient, boundary_weight_sum, is_non_separated,
                                     has_separating_cycle, decompose, glue, marked_code,
                                     DegreeMismatch)
from dangul.generate import generate_maps
from dangul.map_core import polygon, girth
from dangul.orientation import (WeightedBiorientation, is_minimal, is_admissible, is_accessible,
                                class_of, vertex_weight, edge_weight, edge_kind)
from dangul.verify import annular_maps, suite_ddm_iff

from helpers import tetrahedron, cube


def test_triangle_orientation():
    m = polygon(3)
    b = ddm_orient(m, 3)
    for h in m.faces[m.root_face]:
        # clockwise around the root face: h is the ingoing half
        assert edge_kind(b, h) == 1 and b.weight[h] == 1 and b.weight[m.alpha[h]] == 0


def test_tetrahedron_orientation():
    m = tetrahedron().face_rooted()
    b = ddm_orient(m, 3)
    outer = set(m.outer_vertices())
    inner = [v for v in range(m.n_vertices) if v not in outer]
    assert [vertex_weight(b, v) for v in inner] == [3]
    outer_edges = set(m.outer_edges())
    inner_edges = [h for h, _ in m.edges() if h not in outer_edges]
    assert len(inner_edges) == 3 and all(edge_weight(b, h) == 1 for h in inner_edges)
    assert "B~" in class_of(b)


def test_low_girth_has_no_orientation():
    for d in (3, 4):
        m = next(x for x in generate_maps(d, d, 4) if girth(x) < d)
        assert ddm_orient(m.face_rooted(), d) is None


def test_not_a_d_angulation():
    with pytest.raises(NotADAngulation):
        ddm_orient(polygon(4), 3)


def test_cube_weights_even():
    b = ddm_orient(cube().face_rooted(), 4)
    m = b.map
    outer = set(m.faces[m.root_face]) | {m.alpha[h] for h in m.faces[m.root_face]}
    assert {b.weight[h] for h in range(m.n_half) if h not in outer} <= {0, 2}
    assert even_weight_check(b)
    # the outer edges carry weight 1 by definition
    assert not even_weight_check(b, include_outer=True)


def test_odd_weight_detected():
    b = ddm_orient(cube().face_rooted(), 4)
    m = b.map
    h = next(h for h in range(m.n_half) if b.weight[h] == 2)
    w = list(b.weight)
    w[h] -= 1
    w[m.alpha[h]] += 1
    assert not even_weight_check(WeightedBiorientation.from_weights(m, w))


def test_iff_girth_small_exhaustive():
    for d, n in ((3, 5), (4, 3), (5, 3)):
        assert suite_ddm_iff(d, n)["status"] == "pass"


@pytest.mark.parametrize("d", [3, 4, 5])
def test_produced_orientations_are_canonical(d):
    for m in generate_maps(d, d, 4, min_girth=d):
        if girth(m) != d:
            continue
        b = ddm_orient(m.face_rooted(), d)
        assert is_minimal(b) and is_admissible(b)
        assert all(is_accessible(b, v) for v in b.map.outer_vertices())
        if d % 2 == 0:
            assert even_weight_check(b)


@pytest.mark.parametrize("p,d,n", [(3, 3, 3), (4, 4, 2), (5, 3, 3), (6, 4, 2), (6, 5, 1),
                                   (4, 3, 3)])
def test_pseudo_orientations(p, d, n):
    maps = annular_maps(p, d, n)
    assert maps
    for a in maps:
        b = pseudo_ddm_orient(a, p, d)
        assert b is not None and is_minimal(b)
        assert boundary_weight_sum(b) == d * p - p - d
        fb = a.face_of[a.marked_face]
        assert all(is_accessible(b, v) for v in set(a.face_vertices(fb)))
        if d % 2 == 0:
            assert all(w % 2 == 0 for h, w in enumerate(b.weight)
                       if a.face_of[h] != fb and a.face_of[a.alpha[h]] != fb)


def test_pseudo_boundary_sum_p6_d5():
    a = annular_maps(6, 5, 1)[0]
    assert boundary_weight_sum(pseudo_ddm_orient(a, 6, 5)) == 19


def test_pseudo_low_girth_is_none():
    for m in generate_maps(4, 4, 4):
        if girth(m) < 4 and m.n_faces >= 3:
            a = m.with_root("face", m.faces[1][0])
            try:
                assert pseudo_ddm_orient(a, 4, 4) is None
            except NotAnnular:
                continue
            return
    pytest.fail("no low-girth annular map found")


def test_pseudo_requires_distinct_root():
    m = polygon(4)
    a = m.with_marks(m.faces[m.root_face][0])
    with pytest.raises(NotAnnular):
        pseudo_ddm_orient(a, 4, 4)


def test_p_equals_d_quadrangle():
    # a plain 4-cycle with the outer face as boundary: the root contour is the
    # only 4-cycle, hence non-separated
    m = polygon(4)
    a = m.with_root("face", m.faces[1][0]).with_marks(m.faces[0][0])
    b = pseudo_ddm_orient(a, 4, 4)
    assert b is not None and is_non_separated(a, 4, 4)
    assert boundary_weight_sum(b) == 4 * 4 - 4 - 4


@pytest.mark.parametrize("p,d,n", [(3, 3, 3), (4, 4, 2), (5, 3, 3), (6, 4, 2), (4, 3, 3)])
def test_separation_criteria_agree_and_glue_roundtrip(p, d, n):
    for a in annular_maps(p, d, n):
        ns = is_non_separated(a, d, p, check=False)
        assert ns == (not has_separating_cycle(a, d))
        first, second = decompose(a, d)
        assert is_non_separated(first, d, p)
        assert marked_code(glue(first, second)) == marked_code(a)
        if ns:
            assert second.n_faces == 2


def test_glued_map_is_separated():
    for a in annular_maps(4, 3, 3):
        first, second = decompose(a, 3)
        if second.n_faces > 2:
            g = glue(first, second)
            assert not is_non_separated(g, 3, 4)
            again = decompose(g, 3)
            assert marked_code(again[0]) == marked_code(first)
            assert marked_code(again[1]) == marked_code(second)
            return
    pytest.fail("no separated instance found")


def test_glue_degree_mismatch():
    a = annular_maps(4, 4, 0)[0]
    b = annular_maps(3, 3, 0)[0]
    with pytest.raises(DegreeMismatch):
        glue(a, b)


def test_decomposition_counts_multiply():
    p, d, N = 4, 3, 3
    total = Counter(a.n_faces - 2 for a in annular_maps(p, d, N))
    good = Counter(a.n_faces - 2 for a in annular_maps(p, d, N) if is_non_separated(a, d, p))
    trivial = Counter(a.n_faces - 2 for a in annular_maps(d, d, N))
    for n in range(N + 1):
        assert total[n] == sum(good[i] * trivial[n - i] for i in range(n + 1))
