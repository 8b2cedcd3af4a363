"""Fuss posets: words below a line of slope 1/m, ordered termwise."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from ..algebra import BiPoly, UniPoly, binom_poly
from ..algebra.summation import guarded_product
from ..poset import FinitePoset
from ..polytope import GuardError

_U = UniPoly.x("u")


@dataclass(frozen=True)
class FussParams:
    m: int
    x: int
    y: int

    def __post_init__(self):
        if self.m < 1 or self.x < 1 or self.y < 0:
            raise ValueError(f"need m >= 1, x >= 1, y >= 0: {self}")
        if self.m * self.y >= self.x:
            raise ValueError(f"need m*y < x: {self}")


def fuss_words(p: FussParams, guard: int = 200_000) -> list[tuple[int, ...]]:
    """Words (a_1..a_{x-1}) with m * (a_1 + .. + a_j) < j for all j and total <= y."""
    out: list[tuple[int, ...]] = []
    word: list[int] = []
    length = p.x - 1

    def grow(j: int, total: int):
        if j > length:
            if len(out) >= guard:
                raise GuardError(f"Fuss poset {p} exceeds guard {guard}")
            out.append(tuple(word))
            return
        # m * (total + a) < j  and  total + a <= y
        top = min(p.y - total, (j - 1) // p.m - total)
        for a in range(top + 1):
            word.append(a)
            grow(j + 1, total + a)
            word.pop()

    grow(1, 0)
    return out


def fuss_elements(p: FussParams, guard: int = 200_000) -> FinitePoset:
    words = fuss_words(p, guard)
    pts = np.array(words, dtype=np.int64).reshape(len(words), p.x - 1)
    return FinitePoset(pts)


def fuss_zeta(p: FussParams) -> UniPoly:
    m, x, y = p.m, p.x, p.y
    if y == 0:
        return UniPoly([1], "u")
    head = (_U - 1) * (x - m * y - 1) + 1
    prod = UniPoly([1], "u")
    for j in range(2, y + 1):
        prod = prod * ((_U - 1) * (x - 1) + j)
    return head * prod / factorial(y)


def fuss_m_triangle(p: FussParams) -> BiPoly:
    m, x, y = p.m, p.x, p.y
    if y == 0:
        return BiPoly.const(1)
    terms = {}
    for ell in range(y + 1):
        for k in range(ell + 1):
            c = Fraction(comb(ell, k) * (x - 1 - m * ell), factorial(ell))
            c *= guarded_product(lambda r: Fraction(x - r + k), ell)
            terms[(k, ell)] = terms.get((k, ell), 0) + c * (-1) ** (k + ell)
    return BiPoly(terms)


def zeta_eq1_holds(m: int, y: int) -> bool:
    """At x = m*y + 1 the last step is forced, so Z(m, x, y) = Z(m, x, y - 1)."""
    x = m * y + 1
    return fuss_zeta(FussParams(m, x, y)) == fuss_zeta(FussParams(m, x, y - 1))


def zeta_eq2_holds(m: int, x: int, y: int) -> bool:
    """For x > m*y + 1: Z(m,x,y) = sum_j Z(m,x-1,y-j) binom(j+u-2, j)."""
    rhs = UniPoly([], "u")
    for j in range(y + 1):
        rhs = rhs + fuss_zeta(FussParams(m, x - 1, y - j)) * binom_poly(_U - 1, j)
    return fuss_zeta(FussParams(m, x, y)) == rhs


def m_recurrence(p: FussParams) -> BiPoly:
    """M-triangle from the recursion on x (and on y at the boundary x = m*y + 1)."""
    m, x, y = p.m, p.x, p.y
    if y == 0:
        return BiPoly.const(1)
    if x == m * y + 1:
        return m_recurrence(FussParams(m, x, y - 1))
    X, Y = BiPoly.gens()
    out = m_recurrence(FussParams(m, x - 1, y))
    for j in range(1, y + 1):
        # (1 - 1/X) (XY)^j = (X - 1) X^(j-1) Y^j
        out = out + (X - 1) * BiPoly.monomial(j - 1, j) * m_recurrence(FussParams(m, x - 1, y - j))
    return out


def m_type_a(n: int) -> BiPoly:
    """sum ((n+1-l)/(n+k-l+1)) C(n+k, n) C(n, l-k) (-X)^k (-Y)^l."""
    terms = {}
    for ell in range(n + 1):
        for k in range(ell + 1):
            c = Fraction(n + 1 - ell, n + k - ell + 1) * comb(n + k, n) * comb(n, ell - k)
            if c:
                terms[(k, ell)] = c * (-1) ** (k + ell)
    return BiPoly(terms)


def type_a_coordinates(word: tuple[int, ...]) -> tuple[int, ...]:
    """Word of P^F(1, n+2, n) -> point of the linear arbor poset: drop a_1, reverse."""
    return tuple(reversed(word[1:]))
