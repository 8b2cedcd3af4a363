"""P^B(n, k): n-tuples of nonnegative integers with sum at most k."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from ..algebra import BiPoly, UniPoly, binom_poly
from ..poset import FinitePoset
from ..polytope import GuardError


@dataclass(frozen=True)
class TypeBParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 0:
            raise ValueError(f"need n >= 1, k >= 0: {self}")


def typeb_points(p: TypeBParams, guard: int = 200_000) -> np.ndarray:
    size = comb(p.n + p.k, p.n)
    if size > guard:
        raise GuardError(f"P^B{(p.n, p.k)} has {size} elements, guard {guard}")
    pts = [c for c in itertools.product(range(p.k + 1), repeat=p.n) if sum(c) <= p.k]
    return np.array(pts, dtype=np.int64).reshape(len(pts), p.n)


def typeb_elements(p: TypeBParams, guard: int = 200_000) -> FinitePoset:
    return FinitePoset(typeb_points(p, guard))


def typeb_zeta(p: TypeBParams) -> UniPoly:
    """binom(n(u-1) + k, k)."""
    u = UniPoly.x("u")
    return binom_poly((u - 1) * p.n + 1, p.k)


def typeb_m_triangle(p: TypeBParams) -> BiPoly:
    n, k = p.n, p.k
    terms = {}
    for r in range(min(k, n) + 1):
        for ell in range(k - r + 1):
            key = (ell, ell + r)
            terms[key] = terms.get(key, 0) + comb(ell + n - 1, n - 1) * comb(n, r) * (-1) ** r
    return BiPoly(terms)


def m_recurrence(n: int, k: int) -> BiPoly:
    """Split off the first coordinate: M(n,k) = M(n-1,k) + (1 - 1/X) sum_j (XY)^j M(n-1,k-j)."""
    if n == 0:
        return BiPoly.const(1)
    X, _Y = BiPoly.gens()
    out = m_recurrence(n - 1, k)
    for j in range(1, k + 1):
        out = out + (X - 1) * BiPoly.monomial(j - 1, j) * m_recurrence(n - 1, k - j)
    return out


def upper_ideal_isomorphic(p: TypeBParams, element) -> bool:
    """The up-set of ``element`` shifted down by it is exactly P^B(n, k - ht)."""
    e = np.asarray(element, dtype=np.int64)
    pts = typeb_points(p)
    above = pts[(pts >= e).all(axis=1)] - e
    target = typeb_points(TypeBParams(p.n, p.k - int(e.sum())))
    return {tuple(r) for r in above.tolist()} == {tuple(r) for r in target.tolist()}


def k_type_b(n: int) -> BiPoly:
    """sum_{0 <= j <= k <= n} C(n, j) C(k-1, k-j) X^j Y^k."""
    from ..algebra import ibinom

    terms = {}
    for k in range(n + 1):
        for j in range(k + 1):
            c = comb(n, j) * ibinom(k - 1, k - j)
            if c:
                terms[(j, k)] = c
    return BiPoly(terms)
