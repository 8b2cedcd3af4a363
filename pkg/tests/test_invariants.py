from fractions import Fraction

import pytest

from arbors.algebra import BiPoly, UniPoly
from arbors.arbor import enumerate_arbors, halo, parse_arbor, type_a, type_b
from arbors.invariants import (
    clear_cache,
    ehrhart,
    ehrhart_root_check,
    f_height_poly,
    f_vector,
    h_from_m_triangle,
    h_vector,
    k_poly,
    m_triangle,
    num_elements,
    transmuted_m_triangle,
    zeta,
    zeta_factorization,
    zeta_refined,
)
from arbors.poset import build_poset, chain_count, chain_count_by_top, cubical_f_vector, mobius_triangle
from arbors.polytope import count_points, height_histogram, lattice_points
from arbors.triangles import transmute

ARBORS = [t for n in range(1, 6) for t in enumerate_arbors(n)]
RUNNING = parse_arbor("(2 (2) (1) (1))")


@pytest.mark.parametrize("t", ARBORS, ids=str)
def test_height_polys_match_histograms(t):
    for m in (1, 2, 3):
        assert list(f_height_poly(t, m).coeffs) == height_histogram(lattice_points(t, m))


@pytest.mark.parametrize("t", ARBORS, ids=str)
def test_ehrhart_basics(t):
    e = ehrhart(t)
    assert e.degree == t.size
    assert e(0) == 1
    assert e(4) == count_points(t, 4)


@pytest.mark.parametrize("t", ARBORS, ids=str)
def test_zeta_against_multichains(t):
    P = build_poset(t)
    z = zeta(t)
    zr = zeta_refined(t)
    assert z(1) == 1
    assert z(2) == len(P) == num_elements(t)
    for q in (2, 3, 4):
        assert z(q) == chain_count(P, q)
        by_top = chain_count_by_top(P, q)
        assert [zr.slice(1, j)(q) for j in range(len(by_top))] == by_top


@pytest.mark.parametrize("t", ARBORS, ids=str)
def test_k_and_derived(t):
    P = build_poset(t)
    direct = {}
    for a, b in zip(P.nonzero_counts().tolist(), P.rank.tolist()):
        direct[(a, b)] = direct.get((a, b), 0) + 1
    assert k_poly(t) == BiPoly(direct)
    assert f_vector(t) == cubical_f_vector(P)
    assert h_vector(t)(1) == len(P)
    m = m_triangle(t)
    assert m == mobius_triangle(P)
    assert h_from_m_triangle(m) == h_vector(t)
    assert transmuted_m_triangle(t) == transmute(m)


def test_running_values():
    assert num_elements(RUNNING) == 330
    u = UniPoly.x("u")
    assert zeta(RUNNING) == u * (2 * u - 1) * UniPoly([30, -266, 893, -1369, 802], "u") / 90
    assert ehrhart(RUNNING).lead() == Fraction(83, 6)
    assert h_vector(RUNNING) == UniPoly([1, 18, 81, 130, 81, 18, 1], "X")


def test_root_check_report():
    rep = ehrhart_root_check(RUNNING)
    assert rep["passed"] and rep["roots_ok"] and rep["positive"]
    # (2u+1)(u+1)^3(83u^2+70u+12): roots -1/2, -1 and two irrational ones
    assert rep["degree"] == 6 and rep["distinct_roots"] == 4


def test_factorization_evidence():
    for n in range(1, 6):
        assert zeta_factorization(type_a(n))["splits"]
        assert zeta_factorization(type_b(n))["splits"]
        if n >= 2:
            assert zeta_factorization(halo(n))["splits"]
    rep = zeta_factorization(RUNNING)
    assert not rep["splits"]
    assert rep["rational_roots"] == {"0": 1, "1/2": 1}


def test_cache_clear_keeps_values():
    before = m_triangle(RUNNING)
    clear_cache()
    assert m_triangle(RUNNING) == before
