"""Finite posets of integer vectors under the coordinatewise order, with brute-force oracles."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .algebra import BiPoly, UniPoly
from .arbor import Arbor
from .polytope import GuardError, lattice_points

DEFAULT_ELEMENT_GUARD = 200_000
# the dense order matrix is n^2 bytes; Moebius values need n^2 int64 on the numpy path
MOBIUS_GUARD = 6000
# a dense boolean order matrix beyond this many elements would not fit in memory
DENSE_GUARD = 30_000


class FinitePoset:
    """Integer vectors ordered coordinatewise, graded by coordinate sum.

    Elements are stored sorted by rank, then lexicographically, so index 0 is
    the minimum whenever one exists and every strict predecessor of an
    element has a smaller index.
    """

    def __init__(self, points, rank=None, leq=None):
        pts = np.asarray(points, dtype=np.int64)
        if pts.ndim != 2:
            raise ValueError("points must be a 2-d array")
        if rank is None:
            rank = pts.sum(axis=1)
        rank = np.asarray(rank, dtype=np.int64)
        order = np.lexsort(tuple(pts.T[::-1]) + (rank,))
        self.points = pts[order]
        self.rank = rank[order]
        self._leq = None if leq is None else np.asarray(leq, bool)[np.ix_(order, order)]

    @classmethod
    def from_relation(cls, n: int, rank, leq) -> "FinitePoset":
        """Abstract poset on 0..n-1 given its order matrix and rank function."""
        pts = np.arange(n, dtype=np.int64)[:, None]
        return cls(pts, rank, leq)

    def __len__(self):
        return int(self.points.shape[0])

    @property
    def leq(self) -> np.ndarray:
        if self._leq is None:
            _guard(self, DENSE_GUARD)
            self._leq = _kernels.leq_matrix(self.points)
        return self._leq

    @property
    def max_rank(self) -> int:
        return int(self.rank.max()) if len(self) else -1

    def rank_sizes(self) -> list[int]:
        return np.bincount(self.rank).tolist()

    def nonzero_counts(self) -> np.ndarray:
        return (self.points != 0).sum(axis=1)

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (a, b) with a < b and rank b = rank a + 1 (graded covers)."""
        leq = self.leq
        out = []
        for a in range(len(self)):
            for b in np.nonzero(leq[a] & (self.rank == self.rank[a] + 1))[0]:
                out.append((a, int(b)))
        return out

    def has_minimum(self) -> bool:
        return len(self) > 0 and bool(self.leq[0].all())

    def index(self, point) -> int:
        hit = np.nonzero((self.points == np.asarray(point)).all(axis=1))[0]
        if not hit.size:
            raise KeyError(tuple(point))
        return int(hit[0])

    def principal_ideal_size(self, b: int) -> int:
        return int(self.leq[:, b].sum())


def build_poset(t: Arbor, guard: int = DEFAULT_ELEMENT_GUARD) -> FinitePoset:
    return FinitePoset(lattice_points(t, 1, guard=guard))


def _guard(P: FinitePoset, limit: int):
    if len(P) > limit:
        raise GuardError(f"poset with {len(P)} elements exceeds guard {limit}")


def chain_count(P: FinitePoset, m: int) -> int:
    """Number of weak chains e_1 <= ... <= e_{m-1}; the Zeta polynomial at m."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return int(_kernels.multichain_histogram(P.leq, P.rank, m - 1).sum())


def chain_count_by_top(P: FinitePoset, m: int) -> list[int]:
    """Weak (m-1)-chains tallied by the rank of the top element."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return _kernels.multichain_histogram(P.leq, P.rank, m - 1).tolist()


def mobius_triangle(P: FinitePoset, guard: int = MOBIUS_GUARD) -> BiPoly:
    """sum_{a <= b} mu(a, b) X^{rank a} Y^{rank b} by the defining recursion."""
    _guard(P, guard)
    tri = _kernels.mobius_triangle(P.leq, P.rank)
    return BiPoly({(i, j): int(tri[i, j]) for i, j in zip(*np.nonzero(tri))})


def maximal_chain_count(P: FinitePoset) -> int:
    """Saturated chains from the minimum to elements of top rank."""
    if not P.has_minimum():
        raise ValueError("poset has no minimum")
    paths = _kernels.saturated_chain_counts(P.leq, P.rank)
    return int(paths[P.rank == P.max_rank].sum())


def cubical_f_vector(P: FinitePoset) -> UniPoly:
    """sum_b (1 + X)^{nz(b)}: the f-vector of the cubical complex on P."""
    hist = np.bincount(P.nonzero_counts())
    out = UniPoly([], "X")
    one_x = UniPoly([1, 1], "X")
    for k, c in enumerate(hist.tolist()):
        if c:
            out = out + one_x ** k * c
    return out


def rank_polynomial(P: FinitePoset) -> UniPoly:
    return UniPoly(P.rank_sizes(), "X")
