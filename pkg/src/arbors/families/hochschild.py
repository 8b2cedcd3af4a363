"""Hochschild corollas: a root with one element and n - 1 single-element leaves."""

from __future__ import annotations

from ..algebra import DEFAULT_ORDER, BiPoly, TruncSeries, UniPoly
from ..arbor import hochschild
from ..invariants import ehrhart, h_vector, m_triangle, num_elements, zeta
from ..volume import LAPLACE_VARS, laplace_poly


def hochschild_count(n: int) -> int:
    """2^(n-2) (n + 3), n >= 2."""
    return 2 ** (n - 2) * (n + 3)


def hochschild_h_closed(n: int) -> UniPoly:
    x = UniPoly.x("X")
    return (x + 1) ** (n - 2) * (x * x + x * (n + 1) + 1)


def guessed_zeta(order: int) -> TruncSeries:
    """exp(integral of u / ((1 - us)(1 + s - us)) ds)."""
    u = UniPoly.x("u")
    one = UniPoly([1], "u")
    s = TruncSeries.s(order, one)
    den = (one - s * u) * (one + s - s * u)
    return (den.inverse() * u).integral().exp()


def guessed_m(order: int) -> TruncSeries:
    X, Y = BiPoly.gens()
    one = BiPoly.const(1)
    s = TruncSeries.s(order, one)
    num = (s * (X * Y - Y) - one) * (s * (X * Y) - one)
    den = (s * (2 * X * Y - Y) - one) * (s * (X * Y - Y + 1) - one)
    return num / den


def guessed_ehrhart(order: int) -> TruncSeries:
    """(1/2)(1 - s/(us + s - 1) - (s - 1)/(us + s - 1)^2)."""
    u = UniPoly.x("u")
    one = UniPoly([1], "u")
    s = TruncSeries.s(order, one)
    d = s * (u + 1) - one
    return (one - s / d - (s - one) / (d * d)) / 2


def guessed_laplace(order: int) -> TruncSeries:
    """V (s/(EVs - Vs + 1) + Es/(Es - 1))."""
    E, V = BiPoly.gens(LAPLACE_VARS)
    one = BiPoly.const(1, LAPLACE_VARS)
    s = TruncSeries.s(order, one)
    return (s / (s * (E * V - V) + one) + (s * E) / (s * E - one)) * V


def hochschild_checks(n_max: int = 8, order: int = DEFAULT_ORDER) -> dict:
    if n_max > order:
        raise ValueError("n_max must not exceed the series order")
    rows = []
    for n in range(2, n_max + 1):
        t = hochschild(n)
        count = num_elements(t)
        h = h_vector(t)
        rows.append({
            "n": n,
            "count": count,
            "count_expected": hochschild_count(n),
            "h_matches_closed": h == hochschild_h_closed(n),
            "passed": count == hochschild_count(n) and h == hochschild_h_closed(n),
        })
    # guessed series: conjectural, so mismatches are reported per coefficient
    series = {
        "zeta": (guessed_zeta(order), zeta),
        "m_triangle": (guessed_m(order), m_triangle),
        "ehrhart": (guessed_ehrhart(order), ehrhart),
        "laplace": (guessed_laplace(order), laplace_poly),
    }
    guesses = {}
    for name, (ser, fn) in series.items():
        mismatches = [n for n in range(1, n_max + 1) if ser[n] != fn(hochschild(n))]
        guesses[name] = {"checked_n": list(range(1, n_max + 1)), "mismatches": mismatches, "matches": not mismatches}
    return {
        "check": "hochschild",
        "order": order,
        "rows": rows,
        "guessed_series": guesses,
        "passed": all(r["passed"] for r in rows),
    }
