"""Cross-validation harness.

Each suite returns one record (a dict); ``verify`` runs the suites for given
parameters and returns them ordered by suite name.  Records are meant to be
written one JSON object per line.
"""
import json

from .bijections import (phi_minus, phi_plus, exposed_buds, mark_exposed_bud,
                         phi_minus_inverse_rooted, mu)
from .canonical_orient import (ddm_orient, ddm_spec, even_weight_check, boundary_corner,
                               pseudo_ddm_orient, is_non_separated, boundary_weight_sum,
                               decompose, glue, marked_code)
from .counting import F_d, M_pd, brown_t, brown_q, ParityViolation
from .generate import generate_maps
from .map_core import girth, canonical_code, canonical_labels, is_simple_face
from .mobiles import (enumerate_d_branching_budrooted, enumerate_pd_branching_marked,
                      excess, is_d_branching, is_pd_branching)
from .orientation import (WeightedBiorientation, dual, orientation_code, is_minimal,
                          vertex_weight, edge_weight)


def _record(suite, params, instances, failures, **extra):
    rec = {"suite": suite, "params": params, "instances": instances,
           "status": "fail" if failures else "pass", "failures": failures[:20]}
    rec.update(extra)
    return rec


def canonical_mobile(t):
    """Mobile relabeled in BFS order from its root."""
    label, _ = canonical_labels(t.alpha, t.sigma, t.root)
    return t.relabel([label[h] for h in range(t.n_half)])


def girth_d_maps(d, n_max):
    """Corner-rooted d-angulations of girth d with at most n_max inner faces."""
    return [m for m in generate_maps(d, d, n_max + 1, min_girth=d) if girth(m) == d]


def annular_maps(p, d, n_max):
    """p-annular d-angulations of girth d with the boundary corner marked.

    n counts the faces other than the boundary and the root face.  Each
    generated map (boundary = face 0, simple) is rooted at every other face.
    """
    out = []
    for m in generate_maps(p, d, n_max + 2, min_girth=d):
        if girth(m) != d or not is_simple_face(m, 0):
            continue
        corner = m.root.anchor
        for f in range(1, m.n_faces):
            a = m.with_root("face", m.faces[f][0]).with_marks(0, corner)
            a = a.with_marks(0, boundary_corner(a, a.vertex_of[corner]))
            out.append(a)
    return out


# suites ---------------------------------------------------------------------------

def suite_census(d, n_max):
    """Corner-rooted girth-d d-angulations: series, mobile census, map census, closed form."""
    F = F_d(d, n_max)
    maps = girth_d_maps(d, n_max)
    by_map = [0] * (n_max + 1)
    for m in maps:
        by_map[m.n_faces - 1] += 1
    by_mobile = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        for t in enumerate_d_branching_budrooted(d, n):
            if t.root in exposed_buds(t):
                by_mobile[n] += 1
    closed = None
    if d == 3:
        closed = [brown_t(3, (n - 1) // 2) if n % 2 else 0 for n in range(n_max + 1)]
        closed[0] = 0
    elif d == 4:
        closed = [brown_q(2, n - 1) if n else 0 for n in range(n_max + 1)]
    failures = []
    for n in range(1, n_max + 1):
        values = [F[n], by_mobile[n], by_map[n]] + ([closed[n]] if closed else [])
        if len(set(values)) != 1:
            failures.append("n=%d: series/mobiles/maps/closed = %s" % (n, values))
    return _record("census", {"d": d, "n_max": n_max}, len(maps), failures,
                   series=[F[n] for n in range(n_max + 1)], maps=by_map, mobiles=by_mobile)


def suite_ddm_iff(d, n_max):
    """ddm_orient succeeds exactly on the girth-d d-angulations."""
    maps = generate_maps(d, d, n_max + 1)
    failures = []
    for m in maps:
        ok = ddm_orient(m.face_rooted(), d) is not None
        if ok != (girth(m) == d):
            failures.append("map %s: orientation %s, girth %s"
                            % (canonical_code(m).hex()[:16], ok, girth(m)))
    return _record("ddm_iff", {"d": d, "n_max": n_max}, len(maps), failures)


def suite_roundtrip(d, n_max):
    """Maps to mobiles and back, and enumerated mobiles to maps and back."""
    failures = []
    count = 0
    for m in girth_d_maps(d, n_max):
        count += 1
        b = ddm_orient(m.face_rooted(), d)
        t = mark_exposed_bud(b, m.root.anchor)
        if not is_d_branching(t, d) or excess(t) != -d:
            failures.append("image is not d-branching")
            continue
        if len(t.black_vertices()) != m.n_faces - 1:
            failures.append("black vertices differ from inner faces")
        _, back = phi_minus_inverse_rooted(t)
        if canonical_code(back) != canonical_code(m):
            failures.append("map not recovered")
    codes = set()
    for n in range(1, n_max + 1):
        for t in enumerate_d_branching_budrooted(d, n):
            if t.root not in exposed_buds(t):
                continue
            count += 1
            _, m = phi_minus_inverse_rooted(t)
            if girth(m) != d or m.n_faces - 1 != n:
                failures.append("closure has wrong girth or size")
            codes.add(canonical_code(m))
            b = ddm_orient(m.face_rooted(), d)
            again = canonical_mobile(mark_exposed_bud(b, m.root.anchor))
            if again.to_dict() != canonical_mobile(t).to_dict():
                failures.append("mobile not recovered")
    return _record("roundtrip", {"d": d, "n_max": n_max}, count, failures,
                   distinct_maps=len(codes))


def suite_invariants(d, n_max):
    """Parity for even d, dual twice = reverse, and the theta route for phi_minus."""
    failures = []
    count = 0
    for m in girth_d_maps(d, n_max):
        count += 1
        b = ddm_orient(m.face_rooted(), d)
        if d % 2 == 0 and not even_weight_check(b):
            failures.append("parity: odd weight in a d/(d-2)-orientation")
        if d % 2 == 0 and not even_weight_check(phi_minus(b)):
            failures.append("parity: odd weight in a d-branching mobile")
        o = mu(b)[0]
        twice = dual(dual(o))
        renamed = twice.relabel(list(twice.map.alpha))
        if orientation_code(renamed) != orientation_code(o.reversed()):
            failures.append("duality: dual of dual is not the reverse")
    return _record("invariants", {"d": d, "n_max": n_max}, count, failures)


def suite_annular(p, d, n_max):
    """(p,d)-branching census against M_pd, pseudo orientations and Delta round trips."""
    params = {"p": p, "d": d, "n_max": n_max}
    try:
        M = M_pd(p, d, n_max)
    except ParityViolation:
        return _record("annular", params, 0, [], skipped="parity")
    failures = []
    by_mobile = [0] * (n_max + 1)
    for n in range(n_max + 1):
        for t in enumerate_pd_branching_marked(p, d, n):
            by_mobile[n] += 1
            if excess(t) != d or not is_pd_branching(t, p, d):
                failures.append("enumerated mobile is not (p,d)-branching")
    by_map = [0] * (n_max + 1)
    maps = annular_maps(p, d, n_max)
    for a in maps:
        b = pseudo_ddm_orient(a, p, d)
        if boundary_weight_sum(b) != d * p - p - d:
            failures.append("boundary weight sum")
        if not is_non_separated(a, d, p):
            first, second = decompose(a, d)
            if marked_code(glue(first, second)) != marked_code(a):
                failures.append("decomposition does not glue back")
            continue
        by_map[a.n_faces - 2] += 1
        t = phi_plus(b)
        if not is_pd_branching(t, p, d):
            failures.append("image is not (p,d)-branching")
    for n in range(n_max + 1):
        if not M[n] == by_mobile[n] == by_map[n]:
            failures.append("n=%d: series/mobiles/maps = %s"
                            % (n, [M[n], by_mobile[n], by_map[n]]))
    return _record("annular", params, len(maps), failures,
                   series=list(M), mobiles=by_mobile, maps=by_map)


def check_orientation_fixture(data):
    """Check a stored d/(d-2)-orientation; the record names every violated invariant."""
    d = data["d"]
    b = WeightedBiorientation.from_dict(data["orientation"])
    m = b.map
    spec = ddm_spec(m, d)
    failures = []
    if any(b.ingoing[h] != (b.weight[h] > 0) for h in range(m.n_half)):
        failures.append("consistency: ingoing exactly where the weight is positive")
    if any(vertex_weight(b, v) != spec.alpha[v] for v in range(m.n_vertices)):
        failures.append("vertex_weight: vertex weights differ from the prescribed ones")
    if any(edge_weight(b, h) != spec.beta[h] for h, _ in m.edges()):
        failures.append("edge_weight: edge weights differ from the prescribed ones")
    if not failures and not is_minimal(b):
        failures.append("minimality: a counterclockwise circuit exists")
    return _record("fixture", {"d": d}, 1, failures)


def verify(d, p=None, n_max=4):
    records = [suite_census(d, n_max), suite_ddm_iff(d, n_max), suite_roundtrip(d, n_max),
               suite_invariants(d, n_max)]
    if p is not None:
        records.append(suite_annular(p, d, n_max))
    return sorted(records, key=lambda r: r["suite"])


def report_lines(records):
    return [json.dumps(r, sort_keys=True) for r in records]


def all_passed(records):
    return all(r["status"] == "pass" for r in records)
