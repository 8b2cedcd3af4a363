"""Noncrossing partition lattices of types A and B through their F-triangles."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from ..algebra import BiPoly
from ..poset import FinitePoset
from ..triangles import dual, m_from_f


def f_triangle(kind: str, n: int) -> BiPoly:
    """F-triangle of the cluster complex of type A_n or B_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    terms = {}
    for k in range(n + 1):
        for ell in range(n + 1 - k):
            if kind == "A":
                c = Fraction(ell + 1, k + ell + 1) * comb(n, k + ell) * comb(n + k, n)
            elif kind == "B":
                c = comb(n, k + ell) * comb(n + k - 1, n - 1)
            else:
                raise ValueError(f"unknown type {kind!r}")
            terms[(k, ell)] = c
    return BiPoly(terms)


def nc_m_triangle(kind: str, n: int) -> BiPoly:
    return m_from_f(f_triangle(kind, n), n)


def is_self_dual(m: BiPoly, n: int) -> bool:
    return dual(m, n) == m


def _set_partitions(n: int):
    """Restricted growth strings of length n."""
    word = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(word)
            return
        for b in range(top + 2):
            word[i] = b
            yield from rec(i + 1, max(top, b))

    if n == 0:
        yield ()
        return
    yield from rec(1, 0)


def _noncrossing(word) -> bool:
    n = len(word)
    for a in range(n):
        for b in range(a + 1, n):
            if word[b] == word[a]:
                continue
            for c in range(b + 1, n):
                if word[c] != word[a]:
                    continue
                for d in range(c + 1, n):
                    if word[d] == word[b]:
                        return False
    return True


def nc_lattice(n: int) -> FinitePoset:
    """Noncrossing partitions of n + 1 points under refinement (brute force, small n)."""
    if n > 6:
        raise ValueError("brute-force NC lattice is limited to n <= 6")
    parts = [w for w in _set_partitions(n + 1) if _noncrossing(w)]
    blocks = [frozenset(frozenset(i for i in range(n + 1) if w[i] == b) for b in set(w)) for w in parts]
    size = len(blocks)
    leq = np.zeros((size, size), bool)
    for i, p in enumerate(blocks):
        for j, q in enumerate(blocks):
            leq[i, j] = all(any(bp <= bq for bq in q) for bp in p)
    rank = np.array([n + 1 - len(p) for p in blocks], dtype=np.int64)
    return FinitePoset.from_relation(size, rank, leq)
