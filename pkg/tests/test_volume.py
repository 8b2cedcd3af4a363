from fractions import Fraction

import numpy as np
import pytest

from arbors.algebra import BiPoly, UniPoly
from arbors.arbor import enumerate_arbors, parse_arbor
from arbors.invariants import ehrhart
from arbors.polytope import contains
from arbors.volume import (
    LAPLACE_VARS,
    laplace_poly,
    laurent_at_zero,
    tail_vanishes,
    truncate,
    volume,
    volume_function,
)

h = UniPoly.x("h")
ARBORS = [t for n in range(1, 7) for t in enumerate_arbors(n)]


@pytest.mark.parametrize("t", ARBORS, ids=str)
def test_volume_is_ehrhart_leading_coefficient(t):
    f = volume_function(t)
    assert volume(t) == ehrhart(t).lead() == f.integral()
    assert f.is_continuous()
    assert tail_vanishes(t)
    assert all(q >= 0 for q in laurent_at_zero(laplace_poly(t)) if laurent_at_zero(laplace_poly(t))[q])


def test_single_vertex():
    t = parse_arbor("(1)")
    assert laplace_poly(t) == BiPoly({(0, 1): 1, (1, 1): -1}, LAPLACE_VARS)
    f = volume_function(t)
    assert f.pieces == (UniPoly([1], "h"),)
    assert f(Fraction(1, 2)) == 1 and f(2) == 0 and f(-1) == 0


def test_quadrilateral_volume_function():
    f = volume_function(parse_arbor("(1 (1))"))
    assert f.pieces == (h, UniPoly([1], "h"))
    assert f.integral() == Fraction(3, 2)
    assert f.to_json()[1]["interval"] == [1, 2]


def test_running_pieces():
    f = volume_function(parse_arbor("(2 (2) (1) (1))"))
    assert f.pieces[0] == h**5 / 120
    assert f.pieces[4] == f.pieces[5] == 2 * h - Fraction(14, 3)
    assert f.integral() == Fraction(83, 6)


def test_monte_carlo_volume():
    t = parse_arbor("(1 (1) (1))")
    rng = np.random.default_rng(11)
    n = t.size
    samples = rng.uniform(0, n, size=(400_000, n))
    est = contains(t, samples).mean() * n**n
    assert est == pytest.approx(float(volume(t)), rel=0.02)


def test_monte_carlo_slice_volume():
    # V(h) is the (n-1)-volume of the slice sum x = h, scaled by 1/sqrt(n); compare
    # the derivative of P(sum x <= h) with V at an interior point
    t = parse_arbor("(1 (2))")
    f = volume_function(t)
    rng = np.random.default_rng(5)
    pts = rng.uniform(0, 3, size=(600_000, 3))
    inside = contains(t, pts)
    s = pts.sum(axis=1)
    a, b = 1.4, 1.6
    est = (inside & (s > a) & (s <= b)).mean() * 27 / (b - a)
    assert est == pytest.approx(float(f(Fraction(3, 2))), rel=0.05)


def test_truncate_needs_v_factor():
    with pytest.raises(ValueError):
        truncate(BiPoly({(1, 0): 1}, LAPLACE_VARS), 2)


def test_truncation_drops_far_terms():
    p = BiPoly({(3, 1): 1}, LAPLACE_VARS)
    assert truncate(p, 2).is_zero()
