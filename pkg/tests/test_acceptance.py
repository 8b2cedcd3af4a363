"""Acceptance criteria, one test each; every test records a PASS/FAIL line.

Run ``python tests/test_acceptance.py`` for the lines alone, or pytest, which
prints them in its terminal summary.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction
from math import comb

import pytest

from arbors.algebra import UniPoly
from arbors.algebra.summation import summing_1_lhs, summing_1_rhs, summing_2_lhs, summing_2_rhs
from arbors.arbor import halo, halo_rev, hochschild, parse_arbor, reverse_linear, type_a, type_b
from arbors.families import fuss as F
from arbors.families import typeb as B
from arbors.families.halo import halo_checks
from arbors.families.hochschild import hochschild_checks
from arbors.families.nc import nc_m_triangle
from arbors.golden import (
    LINEAR_PAIR,
    RUNNING,
    RUNNING_M_DISPLAY,
    TYPE_A3_M_DISPLAY,
    TYPE_A3_MBAR_DISPLAY,
    UNARY_BINARY,
    UNARY_BINARY_F_DISPLAY,
    running_laplace,
    running_refined_zeta,
)
from arbors.invariants import (
    ehrhart,
    f_vector,
    h_vector,
    m_triangle,
    num_elements,
    zeta,
    zeta_refined,
)
from arbors.poset import build_poset, chain_count, cubical_f_vector, maximal_chain_count, mobius_triangle
from arbors.polytope import vertices
from arbors.sweeps import ez_sweep, involution_sweep, oracle_sweep, roots_sweep, summary
from arbors.triangles import f_from_m, from_display, transmute
from arbors.volume import laplace_poly, volume, volume_function

RESULTS: dict[int, str] = {}

u = UniPoly.x("u")
X = UniPoly.x("X")
h = UniPoly.x("h")


def _p(high_first, var="u"):
    return UniPoly(list(reversed(high_first)), var)


def _verdict(checks: dict[str, bool]) -> tuple[bool, str]:
    bad = [k for k, ok in checks.items() if not ok]
    return not bad, (f"{len(checks)} checks" if not bad else "failed: " + ", ".join(bad))


def criterion_1():
    t = parse_arbor(RUNNING)
    P = build_poset(t)
    vf = volume_function(t)
    return _verdict({
        "elements": len(P) == 330,
        "cubical f-vector": cubical_f_vector(P) == _p([1, 24, 186, 654, 1152, 990, 330], "X"),
        "f-vector": f_vector(t) == _p([1, 24, 186, 654, 1152, 990, 330], "X"),
        "h-vector": h_vector(t) == _p([1, 18, 81, 130, 81, 18, 1], "X"),
        "vertices": len(vertices(t)) == 36,
        "ehrhart": ehrhart(t) == (2 * u + 1) * (u + 1) ** 3 * _p([83, 70, 12]) / 12,
        "volume": volume(t) == Fraction(83, 6),
        "zeta": zeta(t) == u * (2 * u - 1) * _p([802, -1369, 893, -266, 30]) / 90,
        "refined zeta": zeta_refined(t) == running_refined_zeta(),
        "M-triangle": m_triangle(t) == from_display(RUNNING_M_DISPLAY),
        "M by Moebius": mobius_triangle(P) == from_display(RUNNING_M_DISPLAY),
        "laplace": laplace_poly(t) == running_laplace(),
        "volume function [0,1]": vf.pieces[0] == h**5 / 120,
        "volume function [4,6]": vf.pieces[4] == vf.pieces[5] == 2 * h - Fraction(14, 3),
    })


def criterion_2():
    t = parse_arbor(LINEAR_PAIR)
    r = reverse_linear(t)
    common_h = _p([1, 23, 122, 209, 122, 23, 1], "X")
    return _verdict({
        "elements": num_elements(t) == num_elements(r) == len(build_poset(t)) == len(build_poset(r)) == 501,
        "E_t": ehrhart(t) == (u + 1) * _p([20167, 57230, 62225, 32170, 7848, 720]) / 720,
        "Z_t": zeta(t) == u * (2 * u - 1) * _p([898, -1611, 1002, -249, 20]) / 60,
        "E_Rev": ehrhart(r) == (u + 1) * (2 * u + 1) * _p([898, 1981, 1557, 514, 60]) / 60,
        "Z_Rev": zeta(r) == u * _p([20167, -43605, 34975, -12795, 2098, -120]) / 720,
        "maximal chains": (maximal_chain_count(build_poset(t)), maximal_chain_count(build_poset(r))) == (21552, 20167),
        "h-vectors": h_vector(t) == h_vector(r) == common_h,
    })


def criterion_3():
    t = type_a(3)
    m = m_triangle(t)
    return _verdict({
        "elements": num_elements(t) == len(build_poset(t)) == 14,
        "M-triangle": m == from_display(TYPE_A3_M_DISPLAY),
        "M by Moebius": mobius_triangle(build_poset(t)) == m,
        "transmuted": transmute(m) == from_display(TYPE_A3_MBAR_DISPLAY),
        "noncrossing partner": nc_m_triangle("A", 3) == transmute(m),
    })


def criterion_4():
    t = parse_arbor(UNARY_BINARY)
    return _verdict({
        "elements": num_elements(t) == len(build_poset(t)) == 33,
        "F-triangle": f_from_m(transmute(m_triangle(t)), 4) == from_display(UNARY_BINARY_F_DISPLAY),
    })


def criterion_5():
    s = summary(oracle_sweep(6))
    return s["passed"], f"{s['checked']} arbors, failed: {s['failed'] or 'none'}"


def criterion_6():
    roots = roots_sweep(8)
    checks = {
        "roots real in [-1,0)": all(r["roots_ok"] for r in roots),
        "coefficients positive": all(r["positive"] for r in roots),
        "EZ conjectures": summary(ez_sweep(8))["passed"],
        "involution": summary(involution_sweep(8))["passed"],
    }
    ok, detail = _verdict(checks)
    return ok, f"{len(roots)} arbors; {detail}"


def _fuss_grid():
    for m in range(1, 4):
        for x in range(1, 9):
            for y in range(0, x):
                if m * y < x:
                    yield F.FussParams(m, x, y)


def criterion_7():
    checks = {}
    fuss_zeta_ok = fuss_m_ok = fuss_rec_ok = eq_ok = True
    for p in _fuss_grid():
        P = F.fuss_elements(p)
        z = F.fuss_zeta(p)
        fuss_zeta_ok &= all(z(q) == chain_count(P, q) for q in (2, 3, 4))
        m = F.fuss_m_triangle(p)
        fuss_m_ok &= m == mobius_triangle(P)
        fuss_rec_ok &= m == F.m_recurrence(p)
        if p.y >= 1 and p.x == p.m * p.y + 1:
            eq_ok &= F.zeta_eq1_holds(p.m, p.y)
        elif p.x > p.m * p.y + 1:
            eq_ok &= F.zeta_eq2_holds(p.m, p.x, p.y)
    checks.update({
        "Fuss zeta": fuss_zeta_ok,
        "Fuss M": fuss_m_ok,
        "Fuss M recursion": fuss_rec_ok,
        "Fuss zeta recursions": eq_ok,
    })
    b_zeta = b_m = b_rec = True
    for n in range(1, 7):
        for k in range(0, 7):
            p = B.TypeBParams(n, k)
            P = B.typeb_elements(p)
            b_zeta &= all(B.typeb_zeta(p)(q) == chain_count(P, q) for q in (2, 3, 4))
            m = B.typeb_m_triangle(p)
            b_m &= m == mobius_triangle(P)
            b_rec &= m == B.m_recurrence(n, k)
    checks.update({"type B zeta": b_zeta, "type B M": b_m, "type B M recursion": b_rec})
    a_ok = nc_a = nc_b = True
    for n in range(1, 7):
        ma = m_triangle(type_a(n))
        a_ok &= ma == F.m_type_a(n) == F.fuss_m_triangle(F.FussParams(1, n + 2, n))
        nc_a &= transmute(ma) == nc_m_triangle("A", n)
        nc_b &= transmute(m_triangle(type_b(n))) == nc_m_triangle("B", n)
    checks.update({"type A M closed form": a_ok, "NC-A partner": nc_a, "NC-B partner": nc_b})
    return _verdict(checks)


def criterion_8():
    rep = halo_checks(8, 10)
    counts = all(
        r["count"] == r["count_rev"] == Fraction(3 * r["n"] - 1, r["n"]) * comb(2 * r["n"] - 2, r["n"] - 1)
        for r in rep["rows"]
    )
    checks = {
        "cardinalities": counts,
        "h-vectors": all(r["h_matches_rev"] and r["h_matches_closed"] for r in rep["rows"]),
        **{f"residual {k}": v for k, v in rep["residuals_vanish"].items()},
    }
    return _verdict(checks) if rep["passed"] else (False, "halo_checks reported failure")


def criterion_9():
    rep = hochschild_checks(8, 10)
    counts = all(r["count"] == 2 ** (r["n"] - 2) * (r["n"] + 3) for r in rep["rows"])
    hs = all(h_vector(hochschild(n)) == (X + 1) ** (n - 2) * (X**2 + (n + 1) * X + 1) for n in range(2, 9))
    guesses = ", ".join(
        f"{name} {'match' if g['matches'] else 'mismatch at n=' + str(g['mismatches'])}"
        for name, g in rep["guessed_series"].items()
    )
    ok = counts and hs and rep["passed"]
    return ok, f"counts {'ok' if counts else 'FAIL'}, h-vectors {'ok' if hs else 'FAIL'}; guessed series: {guesses}"


def criterion_10():
    grid = [(k, ell, x) for k in range(1, 7) for ell in range(1, 7) for x in range(2, 9)]
    s1 = [g for g in grid if summing_1_lhs(*g) != summing_1_rhs(*g)]
    s2 = [g for g in grid if summing_2_lhs(*g) != summing_2_rhs(*g)]
    return not s1 and not s2, f"{len(grid)} grid points, summing_1 failures {len(s1)}, summing_2 failures {len(s2)}"


CRITERIA = {
    1: ("running example", criterion_1),
    2: ("linear pair and reverse", criterion_2),
    3: ("type A, n = 3", criterion_3),
    4: ("unary-binary F-triangle", criterion_4),
    5: ("oracle sweep, size <= 6", criterion_5),
    6: ("conjecture sweeps, size <= 8", criterion_6),
    7: ("families closed forms and recursions", criterion_7),
    8: ("halohedra, n <= 8", criterion_8),
    9: ("Hochschild corollas, n <= 8", criterion_9),
    10: ("summation lemmas grid", criterion_10),
}


def evaluate(num: int) -> tuple[bool, str]:
    name, fn = CRITERIA[num]
    start = time.perf_counter()
    ok, detail = fn()
    line = f"AC{num:>2} {'PASS' if ok else 'FAIL'}  {name} ({detail}) [{time.perf_counter() - start:.1f}s]"
    RESULTS[num] = line
    return ok, line


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    ok, line = evaluate(num)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for num in sorted(CRITERIA):
        ok, line = evaluate(num)
        print(line, flush=True)
        failed += not ok
    sys.exit(1 if failed else 0)
