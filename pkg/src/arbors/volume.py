"""Volume of Q_t through the Laplace transform of its slice-volume function.

A Laplace polynomial is a BiPoly with slot 0 = E (standing for e^{-v}) and
slot 1 = V (standing for 1/v). The monomial V^{k+1} E^l is the transform of
h -> (h - l)^k / k! on h > l.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import BiPoly, UniPoly
from .arbor import Arbor

LAPLACE_VARS = ("E", "V")


def truncate(p: BiPoly, n: int) -> BiPoly:
    """Restrict the underlying function to [0, n], monomial by monomial."""
    out: dict[tuple[int, int], Fraction] = {}

    def add(key, c):
        out[key] = out.get(key, 0) + c

    for (ell, v), c in p.terms.items():
        if v < 1:
            raise ValueError(f"monomial E^{ell} V^{v} has no V factor")
        if ell >= n:
            continue
        k = v - 1
        add((ell, v), c)
        for j in range(k + 1):
            add((n, j + 1), -c * Fraction((n - ell) ** (k - j), factorial(k - j)))
    return BiPoly(out, LAPLACE_VARS)


_laplace_cache: dict[str, BiPoly] = {}


def laplace_poly(t: Arbor) -> BiPoly:
    key = t.encode()
    hit = _laplace_cache.get(key)
    if hit is not None:
        return hit
    n = t.size
    prod = truncate(BiPoly.monomial(0, t.mult, vars=LAPLACE_VARS), n)
    for c in t.children:
        prod = prod * laplace_poly(c)
    out = truncate(BiPoly(prod.terms, LAPLACE_VARS), n)
    _laplace_cache[key] = out
    return out


@dataclass(frozen=True)
class PiecewisePoly:
    """One polynomial in h per unit interval [k, k+1], k = 0..n-1; zero elsewhere."""

    pieces: tuple[UniPoly, ...]

    @property
    def n(self) -> int:
        return len(self.pieces)

    def __call__(self, h) -> Fraction:
        h = Fraction(h)
        if h < 0 or h > self.n:
            return Fraction(0)
        k = min(int(h), self.n - 1)
        return self.pieces[k](h)

    def is_continuous(self) -> bool:
        for k in range(1, self.n):
            if self.pieces[k - 1](k) != self.pieces[k](k):
                return False
        return True

    def integral(self) -> Fraction:
        total = Fraction(0)
        for k, p in enumerate(self.pieces):
            q = p.integral()
            total += q(k + 1) - q(k)
        return total

    def to_json(self) -> list[dict]:
        return [{"interval": [k, k + 1], "poly": p.to_json()} for k, p in enumerate(self.pieces)]


def _inverse_terms(lap: BiPoly, lo: int) -> UniPoly:
    """Sum of the inverse transforms of all monomials switched on at h >= lo."""
    h = UniPoly.x("h")
    out = UniPoly([], "h")
    for (ell, v), c in lap.terms.items():
        if ell <= lo:
            k = v - 1
            out = out + (h - ell) ** k * Fraction(c, factorial(k))
    return out


def volume_function(t: Arbor) -> PiecewisePoly:
    lap = laplace_poly(t)
    return PiecewisePoly(tuple(_inverse_terms(lap, k) for k in range(t.size)))


def tail_vanishes(t: Arbor) -> bool:
    """Beyond h = n all monomials are active and must cancel."""
    return _inverse_terms(laplace_poly(t), t.size).is_zero()


def laurent_at_zero(lap: BiPoly) -> dict[int, Fraction]:
    """Coefficients of v^q, q <= 0, in lap(e^{-v}, 1/v)."""
    out: dict[int, Fraction] = {}
    for (ell, v), c in lap.terms.items():
        # V^v E^ell = sum_p (-ell)^p v^(p - v) / p!, keep powers <= 0
        for p in range(v + 1):
            q = p - v
            out[q] = out.get(q, 0) + c * Fraction((-ell) ** p, factorial(p))
    return {q: c for q, c in sorted(out.items())}


def volume(t: Arbor) -> Fraction:
    """Integral of V_t over [0, n], cross-checked against the v -> 0 limit."""
    lap = laplace_poly(t)
    laurent = laurent_at_zero(lap)
    poles = {q: c for q, c in laurent.items() if q < 0 and c}
    if poles:
        raise ArithmeticError(f"Laplace polynomial has a pole at v = 0: {poles}")
    limit = laurent.get(0, Fraction(0))
    direct = sum(
        (c * Fraction((t.size - ell) ** v, factorial(v)) for (ell, v), c in lap.terms.items() if ell < t.size),
        Fraction(0),
    )
    if limit != direct:
        raise ArithmeticError(f"volume mismatch: limit {limit} vs integral {direct}")
    return direct
