"""Small fixtures and random generators shared by the test modules."""
import itertools
import random
from functools import lru_cache

from dangul.bijections import _dense_mobile
from dangul.generate import generate_maps
from dangul.map_core import PlanarMap, RootSpec
from dangul.mobiles import BLACK, WHITE
from dangul.orientation import (ConstraintSpec, WeightedBiorientation, feasible, construct,
                                minimize, in_class_B, in_class_B0, in_class_B_tilde,
                                orientation_code)


def single_edge():
    return PlanarMap([1, 0], [0, 1], RootSpec("face", 0))


def loop_map():
    return PlanarMap([1, 0], [1, 0], RootSpec("face", 0))


def two_edge_path():
    return PlanarMap([1, 0, 3, 2], [0, 2, 1, 3], RootSpec("face", 0))


def double_edge():
    return PlanarMap([1, 0, 3, 2], [2, 3, 0, 1], RootSpec("face", 0))


@lru_cache(maxsize=None)
def tetrahedron():
    return next(m for m in generate_maps(3, 3, 4, min_girth=3) if m.n_vertices == 4)


@lru_cache(maxsize=None)
def cube():
    return next(m for m in generate_maps(4, 4, 6, min_girth=4) if m.n_vertices == 8)


@lru_cache(maxsize=None)
def small_maps():
    return tuple(generate_maps(3, 3, 5) + generate_maps(4, 4, 4) + generate_maps(3, 4, 4)
                 + generate_maps(2, 3, 4))


def random_orientation(rng, m, ordinary=False, zero_vertex=None):
    """Some alpha/beta-orientation of m for random feasible weights, or None."""
    edges = m.edges()
    beta = [1 if ordinary else rng.choice([0, 1, 1, 2, 2, 3]) for _ in edges]
    total = sum(beta)
    keys = [v for v in range(m.n_vertices) if v != zero_vertex]
    cuts = sorted(rng.randint(0, total) for _ in range(len(keys) - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    alpha = dict(zip(keys, parts))
    if zero_vertex is not None:
        alpha[zero_vertex] = 0
    spec = ConstraintSpec(alpha, {h: x for (h, _), x in zip(edges, beta)})
    if not feasible(m, spec):
        return None
    return construct(m, spec)


def random_class_B(seed, count, ordinary=False):
    """Biorientations in class B obtained by minimizing random feasible orientations."""
    rng = random.Random(seed)
    maps = small_maps()
    out = []
    for _ in range(200 * count):
        if len(out) >= count:
            break
        m = rng.choice(maps).face_rooted()
        b = random_orientation(rng, m, ordinary)
        if b is None:
            continue
        b = minimize(b)
        if in_class_B(b):
            out.append(b)
    return out


def random_class_B0(seed, count):
    rng = random.Random(seed)
    maps = small_maps()
    out = []
    for _ in range(200 * count):
        if len(out) >= count:
            break
        m = rng.choice(maps)
        m = m.with_root("vertex", m.root.anchor)
        v0 = m.root_vertex
        b = random_orientation(rng, m, rng.random() < 0.5, zero_vertex=v0)
        if b is None:
            continue
        b = minimize(b, m.corner_face(m.vertices[v0][0]))
        if in_class_B0(b):
            out.append(b)
    return out


def random_mobile(rng, n_edges, delta, black_root=True):
    """Random properly bicolored mobile with the given excess, or None if impossible."""
    rot = {0: []}
    color = {0: black_root}
    partner = {}
    for i in range(1, n_edges + 1):
        u = rng.randrange(len(rot))
        rot[i] = [("c", i)]
        color[i] = not color[u]
        rot[u].insert(rng.randint(0, len(rot[u])), ("p", i))
        partner[("c", i)], partner[("p", i)] = ("p", i), ("c", i)
    n_buds = n_edges - delta
    blacks = [v for v in rot if color[v]]
    if n_buds < 0 or (n_buds and not blacks):
        return None
    for j in range(n_buds):
        v = rng.choice(blacks)
        rot[v].insert(rng.randint(0, len(rot[v])), ("b", j))
        partner[("b", j)] = None
    vs = [v for v in rot if rot[v]]
    if not vs:
        return None
    mob, _ = _dense_mobile([rot[v] for v in vs], [BLACK if color[v] else WHITE for v in vs],
                           partner)
    return mob


def dyck_words(k):
    if k == 0:
        yield ""
        return
    for i in range(k):
        for inner in dyck_words(i):
            for rest in dyck_words(k - 1 - i):
                yield "(" + inner + ")" + rest


def all_bicolored_mobiles(k, delta):
    """Every corner-rooted properly bicolored mobile with k edges and excess delta.

    Trees come from Dyck words; the buds are spread over the black corners in
    every possible way.  Isomorphic mobiles may repeat.
    """
    n_buds = k - delta
    if k < 1 or n_buds < 0:
        return
    for word in dyck_words(k):
        rot = {0: []}
        depth = {0: 0}
        partner = {}
        stack = [0]
        for c in word:
            if c == "(":
                v = len(rot)
                rot[v] = [("c", v)]
                depth[v] = depth[stack[-1]] + 1
                rot[stack[-1]].append(("p", v))
                partner[("c", v)], partner[("p", v)] = ("p", v), ("c", v)
                stack.append(v)
            else:
                stack.pop()
        for root_black in (True, False):
            black = {v: (depth[v] % 2 == 0) == root_black for v in rot}
            corners = [(v, j) for v in rot if black[v] for j in range(len(rot[v]))]
            for placed in itertools.combinations_with_replacement(range(len(corners)), n_buds):
                extra = {}
                for i, c in enumerate(placed):
                    extra.setdefault(corners[c], []).append(("b", i))
                    partner[("b", i)] = None
                rotations = []
                for v in rot:
                    r = []
                    for j, key in enumerate(rot[v]):
                        r.append(key)
                        r.extend(extra.get((v, j), []))
                    rotations.append(r)
                colors = [BLACK if black[v] else WHITE for v in rot]
                mob, _ = _dense_mobile(rotations, colors, partner)
                yield mob


def admissible_instances(max_edges, max_weight):
    """Every admissible biorientation of the small generated maps with bounded inner weights.

    Admissibility fixes the outer edges (clockwise, weight 1), so only the
    inner edges are enumerated.
    """
    splits = [(x, y) for x in range(max_weight + 1) for y in range(max_weight + 1 - x)]
    seen = set()
    for m in small_maps():
        if m.n_edges > max_edges:
            continue
        for f in range(m.n_faces):
            r = m.with_root("face", m.faces[f][0])
            outer = set(r.faces[f])
            outer_edges = {r.edge_id(h) for h in outer}
            inner = [(h, a) for h, a in r.edges() if h not in outer_edges]
            for choice in itertools.product(splits, repeat=len(inner)):
                w = [1 if h in outer else 0 for h in range(r.n_half)]
                for (h, a), (x, y) in zip(inner, choice):
                    w[h], w[a] = x, y
                b = WeightedBiorientation.from_weights(r, w)
                if in_class_B_tilde(b):
                    code = orientation_code(b)
                    if code not in seen:
                        seen.add(code)
                        yield b
