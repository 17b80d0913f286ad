"""Acceptance criteria 1-7.  Each test prints one PASS/FAIL line.

Run ``python tests/test_acceptance.py`` to get just the seven lines.
"""
import contextlib
import io
import time
from collections import Counter

import pytest

from dangul.bijections import (phi_minus, phi_plus, phi_minus_inverse, phi_minus_inverse_rooted,
                               mark_exposed_bud, exposed_buds, theta_inverse, unrooted_code)
from dangul.canonical_orient import (ddm_orient, pseudo_ddm_orient, boundary_weight_sum,
                                     even_weight_check, is_non_separated, decompose, glue,
                                     marked_code)
from dangul.cli import main
from dangul.counting import (TruncatedSeries, F_d, F_d_prime, F_pd_prime, M_pd, brown_t, brown_q, solve_W,
                             T_p_series, Q_p_series)
from dangul.map_core import canonical_code, girth, is_d_angulation
from dangul.mobiles import (excess, is_d_branching, is_pd_branching,
                            enumerate_d_branching_budrooted, enumerate_pd_branching_marked)
from dangul.orientation import dual, orientation_code
from dangul.verify import annular_maps, canonical_mobile, girth_d_maps, suite_ddm_iff

from helpers import random_class_B, admissible_instances


def report(n, ok, detail, capsys=None):
    line = "CRITERION %d %s: %s" % (n, "PASS" if ok else "FAIL", detail)
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def _cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue().split()


# 1 -------------------------------------------------------------------------------

def criterion_1():
    start = time.perf_counter()
    code5, out5 = _cli(["series", "--d", "5", "--order", "10"])
    code6, out6 = _cli(["series", "--d", "6", "--order", "6"])
    elapsed = time.perf_counter() - start
    ok = (code5 == code6 == 0
          and [int(c) for c in out5] == [0, 1, 0, 5, 0, 121, 0, 4690, 0, 228065, 0]
          and [int(c) for c in out6] == [0, 1, 3, 17, 128, 1131, 11070]
          and elapsed < 1.0)
    return ok, "F_5 and F_6 golden coefficients from the CLI in %.3fs" % elapsed


# 2 -------------------------------------------------------------------------------

def criterion_2():
    start = time.perf_counter()
    bad = []
    for p in (3, 4, 5):
        T = T_p_series(p, 8)
        F = F_pd_prime(p, 3, 2 * 8 + p)
        for n in range(9):
            if not (2 * n + p - 2) * brown_t(p, n) == T[n] == F[2 * n + p - 3]:
                bad.append(("t", p, n))
    for p in (2, 3, 4):
        Q = Q_p_series(p, 8)
        F = F_pd_prime(2 * p, 4, 8 + p)
        for n in range(9):
            if not (n + p - 1) * brown_q(p, n) == Q[n] == F[n + p - 2]:
                bad.append(("q", p, n))
    elapsed = time.perf_counter() - start
    return (not bad and elapsed < 1.0,
            "54 closed-form/u-equation/series triples, %d mismatches, %.3fs" % (len(bad), elapsed))


# 3 -------------------------------------------------------------------------------

def criterion_3():
    start = time.perf_counter()
    # n_max counts inner faces: 7 -> at most 8 faces, 5 -> at most 6 faces
    r3, r4 = suite_ddm_iff(3, 7), suite_ddm_iff(4, 5)
    elapsed = time.perf_counter() - start
    ok = r3["status"] == r4["status"] == "pass" and elapsed < 120
    return ok, ("%d triangulations (<=8 faces) and %d quadrangulations (<=6 faces), "
                "%d disagreements, %.1fs"
                % (r3["instances"], r4["instances"],
                   len(r3["failures"]) + len(r4["failures"]), elapsed))


# 4 -------------------------------------------------------------------------------

def criterion_4():
    start = time.perf_counter()
    bad = []
    sizes = {}
    for d in (3, 4, 5):
        W = solve_W(d, 4)
        F = F_d(d, 4)
        for n in range(1, 5):
            non_exposed_series = sum((W[i] * W[d - 2 - i] for i in range(d - 2)),
                                     TruncatedSeries.zero(4))[n]
            exposed = non_exposed = 0
            codes = set()
            for t in enumerate_d_branching_budrooted(d, n):
                if t.root not in exposed_buds(t):
                    non_exposed += 1
                    # the unrooted closure still gives a girth-d d-angulation
                    b = phi_minus_inverse(t)
                    if not (is_d_angulation(b.map, d) and girth(b.map) == d):
                        bad.append((d, n, "non-exposed closure"))
                    continue
                exposed += 1
                _, m = phi_minus_inverse_rooted(t)
                if not (is_d_angulation(m, d) and girth(m) == d and m.n_faces - 1 == n
                        and m.root.kind == "corner"):
                    bad.append((d, n, "closure"))
                codes.add(canonical_code(m))
                again = mark_exposed_bud(ddm_orient(m.face_rooted(), d), m.root.anchor)
                if canonical_mobile(again).to_dict() != canonical_mobile(t).to_dict():
                    bad.append((d, n, "round trip"))
            if len(codes) != exposed:
                bad.append((d, n, "codes not distinct"))
            if exposed != F[n] or non_exposed != non_exposed_series:
                bad.append((d, n, "census %d/%d vs %d/%d"
                            % (exposed, non_exposed, F[n], non_exposed_series)))
            sizes[(d, n)] = exposed
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    return ok, ("%d corner-rooted closures for d=3,4,5 and n<=4, %d problems %s, %.1fs"
                % (sum(sizes.values()), len(bad), bad[:3], elapsed))


# 5 -------------------------------------------------------------------------------

def criterion_5():
    start = time.perf_counter()
    counts = Counter()
    bad = []
    for d in (3, 4, 5, 6):
        for n in range(1, 5 if d < 6 else 4):
            for t in enumerate_d_branching_budrooted(d, n):
                counts["d-branching excess"] += 1
                if excess(t) != -d or not is_d_branching(t, d):
                    bad.append("d-branching excess")
                if d % 2 == 0 and not even_weight_check(t):
                    bad.append("mobile parity")
    for p, d in ((3, 3), (4, 3), (5, 3), (4, 4), (6, 4), (5, 5), (6, 5)):
        for n in range(4):
            for t in enumerate_pd_branching_marked(p, d, n):
                counts["(p,d)-branching excess"] += 1
                if excess(t) != d or not is_pd_branching(t, p, d):
                    bad.append("(p,d)-branching excess")
    for d in (4, 6):
        for m in girth_d_maps(d, 4 if d == 4 else 3):
            counts["orientation parity"] += 1
            if not even_weight_check(ddm_orient(m.face_rooted(), d)):
                bad.append("orientation parity")
    for p, d, n in ((3, 3, 3), (4, 3, 3), (5, 3, 2), (4, 4, 2), (6, 4, 2), (5, 5, 2), (6, 5, 1)):
        for a in annular_maps(p, d, n):
            b = pseudo_ddm_orient(a, p, d)
            counts["boundary weight sum"] += 1
            if boundary_weight_sum(b) != d * p - p - d:
                bad.append("boundary weight sum")
            if d % 2 == 0 and not all(w % 2 == 0 for w in b.weight):
                bad.append("pseudo parity")
            if is_non_separated(a, d, p):
                # phi_plus asserts the full parameter table on every call
                phi_plus(b)
                counts["parameter table"] += 1
    for b in random_class_B(21, 60) + random_class_B(22, 60, ordinary=True):
        phi_plus(b)
        counts["parameter table"] += 1
        if b.is_ordinary():
            twice = dual(dual(b))
            counts["duality"] += 1
            if orientation_code(twice.relabel(list(twice.map.alpha))) != \
                    orientation_code(b.reversed()):
                bad.append("duality")
    for b in admissible_instances(6, 3):
        counts["theta route"] += 1
        if b.is_ordinary():
            twice = dual(dual(b))
            counts["duality"] += 1
            if orientation_code(twice.relabel(list(twice.map.alpha))) != \
                    orientation_code(b.reversed()):
                bad.append("duality")
        if unrooted_code(phi_minus(b)) != unrooted_code(theta_inverse(phi_plus(b))):
            bad.append("theta route")
    elapsed = time.perf_counter() - start
    detail = ", ".join("%s %d" % kv for kv in sorted(counts.items()))
    return not bad, "%s; %d violations, %.1fs" % (detail, len(bad), elapsed)


# 6 -------------------------------------------------------------------------------

def criterion_6():
    bad = [d for d in range(3, 8) if F_d(d, 20).derivative() != F_d_prime(d, 19)]
    return not bad, "d/dx F_d = (1+W_0)^d to order 19 for d=3..7, failing d: %s" % bad


# 7 -------------------------------------------------------------------------------

ROUNDTRIP_ORDER = {(4, 3): 5, (5, 3): 4, (6, 4): 3, (5, 5): 4, (6, 5): 3}


def criterion_7():
    start = time.perf_counter()
    bad = []
    glued = 0
    for (p, d), limit in sorted(ROUNDTRIP_ORDER.items()):
        maps = annular_maps(p, d, 6)
        by_size = Counter(a.n_faces - 2 for a in maps)
        product = M_pd(p, d, 6) * F_d_prime(d, 6)
        if [by_size[n] for n in range(7)] != list(product):
            bad.append((p, d, "A != M F'"))
        good = Counter()
        for a in maps:
            if a.n_faces - 2 > limit:
                continue
            first, second = decompose(a, d)
            glued += 1
            if marked_code(glue(first, second)) != marked_code(a):
                bad.append((p, d, "glue"))
            if is_non_separated(a, d, p):
                good[a.n_faces - 2] += 1
        M = M_pd(p, d, limit)
        if [good[n] for n in range(limit + 1)] != list(M):
            bad.append((p, d, "non-separated != M"))
    elapsed = time.perf_counter() - start
    return not bad, ("A_pd = M_pd F_d' to order 6 by map census for 5 pairs, "
                     "%d glue/decompose round trips, problems %s, %.1fs"
                     % (glued, bad, elapsed))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7]


@pytest.mark.parametrize("n", range(1, 8))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    assert report(n, ok, detail, capsys)


if __name__ == "__main__":
    for i, fn in enumerate(CRITERIA, 1):
        report(i, *fn())
