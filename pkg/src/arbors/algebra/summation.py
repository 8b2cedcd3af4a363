"""Guarded partial products and the two hypergeometric summation identities they feed."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable


def guarded_product(alpha: Callable[[int], object], ell: int):
    """prod_{r=2}^{ell} alpha(r), with value 1 at ell = 1 and 1/alpha(1) at ell = 0.

    Below zero the same Gamma-quotient reading continues:
    ell < 0 gives 1 / prod_{r=ell+1}^{1} alpha(r). ``alpha`` may return
    scalars or polynomials, but the ell <= 0 branch needs invertible scalars.
    """
    if ell >= 1:
        out = Fraction(1)
        for r in range(2, ell + 1):
            out = out * alpha(r)
        return out
    den = Fraction(1)
    for r in range(ell + 1, 2):
        den = den * alpha(r)
    if den == 0:
        raise ZeroDivisionError(f"empty-range product undefined at ell={ell}")
    return Fraction(1) / den


def _inner(x: int, k: int, ell: int, j: int) -> Fraction:
    return guarded_product(lambda r: Fraction(x - r + k - j), ell - j)


def summing_1_lhs(k: int, ell: int, x: int) -> Fraction:
    return sum(
        (Fraction(1, factorial(k - j)) * _inner(x, k, ell, j) for j in range(k + 1)),
        Fraction(0),
    )


def summing_1_rhs(k: int, ell: int, x: int) -> Fraction:
    prod = Fraction(1)
    for r in range(1, ell + 1):
        prod *= x - r + k
    return prod / (factorial(k) * (x - 1))


def summing_2_lhs(k: int, ell: int, x: int) -> Fraction:
    return sum(
        (Fraction(ell - j, factorial(k - j)) * _inner(x, k, ell, j) for j in range(k + 1)),
        Fraction(0),
    )


def summing_2_rhs(k: int, ell: int, x: int) -> Fraction:
    prod = Fraction(1)
    for r in range(1, ell + 1):
        prod *= x - r + k
    return prod * Fraction(x * ell - k, x * (x - 1)) / factorial(k)
