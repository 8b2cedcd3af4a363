"""Halohedra arbors: counts, h-vectors and the algebraic series behind them."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..algebra import DEFAULT_ORDER, TruncSeries, UniPoly
from ..arbor import halo, halo_rev
from ..invariants import h_vector, num_elements

_X = UniPoly.x("X")


def halo_count(n: int) -> int:
    """((3n - 1)/n) C(2n - 2, n - 1)."""
    v = Fraction(3 * n - 1, n) * comb(2 * n - 2, n - 1)
    assert v.denominator == 1
    return int(v)


def halo_h_closed(n: int) -> UniPoly:
    return UniPoly([comb(n - 1, j) * comb(n, j) + (comb(n - 1, j - 1) ** 2 if j else 0) for j in range(n + 1)], "X")


def halo_rev_h_closed(n: int) -> UniPoly:
    return UniPoly([comb(n - 1, j) ** 2 + (comb(n - 1, j - 1) * comb(n, j) if j else 0) for j in range(n + 1)], "X")


def series_a(order: int = DEFAULT_ORDER) -> TruncSeries:
    """sum_{n >= 1} sum_j C(n-1, j-1)^2 X^j s^n."""
    zero = UniPoly([], "X")
    cs = [zero] + [UniPoly([comb(n - 1, j - 1) ** 2 if j else 0 for j in range(n + 1)], "X") for n in range(1, order + 1)]
    return TruncSeries(cs, order, zero=zero)


def series_b(order: int = DEFAULT_ORDER) -> TruncSeries:
    """sum_{n >= 1} sum_j C(n-1, j) C(n, j) X^j s^n."""
    zero = UniPoly([], "X")
    cs = [zero] + [UniPoly([comb(n - 1, j) * comb(n, j) for j in range(n + 1)], "X") for n in range(1, order + 1)]
    return TruncSeries(cs, order, zero=zero)


def _s(order: int) -> TruncSeries:
    return TruncSeries.s(order, UniPoly([1], "X"))


def kernel_p(order: int) -> TruncSeries:
    """(X - 1)^2 s^2 - 2 (X + 1) s + 1."""
    s = _s(order)
    return s * s * (_X - 1) ** 2 - s * ((_X + 1) * 2) + UniPoly([1], "X")


def residual_a(order: int = DEFAULT_ORDER) -> TruncSeries:
    s = _s(order)
    a = series_a(order)
    return kernel_p(order) * a * a - s * s * _X ** 2


def residual_b(order: int = DEFAULT_ORDER) -> TruncSeries:
    b = series_b(order)
    return kernel_p(order) * (b + b * b) - _s(order)


def residual_h(order: int = DEFAULT_ORDER) -> TruncSeries:
    s = _s(order)
    h = series_a(order) + series_b(order)
    return kernel_p(order) * (h + h * h) - (s * s * _X + s * _X + s)


def halo_checks(n_max: int = 8, order: int = DEFAULT_ORDER) -> dict:
    if n_max > order:
        raise ValueError("n_max must not exceed the series order")
    rows = []
    h_series = series_a(order) + series_b(order)
    for n in range(2, n_max + 1):
        t, r = halo(n), halo_rev(n)
        h_t, h_r = h_vector(t), h_vector(r)
        row = {
            "n": n,
            "count": num_elements(t),
            "count_rev": num_elements(r),
            "count_expected": halo_count(n),
            "h": [str(c) for c in h_t.coeffs],
            "h_matches_rev": h_t == h_r,
            "h_matches_closed": h_t == halo_h_closed(n) == halo_rev_h_closed(n),
            "h_matches_series": h_t == h_series[n],
        }
        row["passed"] = (
            row["count"] == row["count_rev"] == row["count_expected"]
            and row["h_matches_rev"]
            and row["h_matches_closed"]
            and row["h_matches_series"]
        )
        rows.append(row)
    residuals = {
        "A": residual_a(order).is_zero(),
        "B": residual_b(order).is_zero(),
        "A+B": residual_h(order).is_zero(),
    }
    return {
        "check": "halo",
        "order": order,
        "rows": rows,
        "residuals_vanish": residuals,
        "passed": all(r["passed"] for r in rows) and all(residuals.values()),
    }
