"""The lattice polytope Q_t of an arbor: layout, lattice points, vertices, Minkowski summands."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .arbor import Arbor


class GuardError(RuntimeError):
    """Raised instead of enumerating something larger than the configured ceiling."""


DEFAULT_POINT_GUARD = 2_000_000


@dataclass(frozen=True)
class VertexBlock:
    address: tuple[int, ...]
    mult: int
    own: tuple[int, int]  # index range of this vertex's own coordinates
    down: tuple[int, int]  # index range of the subtree's coordinates
    up: tuple[int, ...]  # indices on the root path, this vertex included


@dataclass(frozen=True)
class CoordinateLayout:
    """Preorder flattening: a vertex's own indices, then each child block in order."""

    n: int
    blocks: tuple[VertexBlock, ...]

    def block(self, address: tuple[int, ...]) -> VertexBlock:
        for b in self.blocks:
            if b.address == address:
                return b
        raise KeyError(address)

    def constraint_arrays(self, m: int = 1):
        """(anc, vend, vcap) arrays for the lattice point kernel at dilation m."""
        depth = max(len(b.address) for b in self.blocks) + 1
        anc = -np.ones((self.n, depth), np.int64)
        fill = np.zeros(self.n, np.int64)
        vend = np.zeros(len(self.blocks), np.int64)
        vcap = np.zeros(len(self.blocks), np.int64)
        for v, b in enumerate(self.blocks):
            s, e = b.down
            vend[v] = e
            vcap[v] = m * (e - s)
            for i in range(s, e):
                anc[i, fill[i]] = v
                fill[i] += 1
        return anc, vend, vcap

    def inequalities(self) -> tuple[np.ndarray, np.ndarray]:
        """Rows A, caps c of A x <= c for the subtree constraints (m = 1)."""
        a = np.zeros((len(self.blocks), self.n), np.int64)
        c = np.zeros(len(self.blocks), np.int64)
        for v, b in enumerate(self.blocks):
            s, e = b.down
            a[v, s:e] = 1
            c[v] = e - s
        return a, c


def layout(t: Arbor) -> CoordinateLayout:
    blocks: list[VertexBlock] = []

    def walk(node: Arbor, address: tuple[int, ...], start: int, up: tuple[int, ...]) -> int:
        own = (start, start + node.mult)
        here_up = up + tuple(range(*own))
        slot = len(blocks)
        blocks.append(None)  # type: ignore[arg-type]
        pos = own[1]
        for k, child in enumerate(node.children):
            pos = walk(child, address + (k,), pos, here_up)
        blocks[slot] = VertexBlock(address, node.mult, own, (start, pos), here_up)
        return pos

    n = walk(t, (), 0, ())
    return CoordinateLayout(n, tuple(blocks))


def _sorted_rows(pts: np.ndarray) -> np.ndarray:
    if pts.shape[0] == 0:
        return pts
    order = np.lexsort(pts.T[::-1])
    return pts[order]


def lattice_points(t: Arbor, m: int = 1, guard: int = DEFAULT_POINT_GUARD) -> np.ndarray:
    """Integer points of m*Q_t as rows, lexicographically sorted."""
    if m < 1:
        raise ValueError("dilation must be >= 1")
    lay = layout(t)
    arrays = lay.constraint_arrays(m)
    count = _kernels.count_lattice_points(*arrays)
    if count > guard:
        raise GuardError(f"{count} lattice points in {m}*Q_{t} exceeds guard {guard}")
    return _sorted_rows(_kernels.lattice_points(*arrays))


def count_points(t: Arbor, m: int = 1) -> int:
    return _kernels.count_lattice_points(*layout(t).constraint_arrays(m))


def height_histogram(points: np.ndarray) -> list[int]:
    if points.shape[0] == 0:
        return []
    return np.bincount(points.sum(axis=1)).tolist()


def defects(t: Arbor, z) -> dict[tuple[int, ...], int]:
    """Slack of each subtree inequality at the point z."""
    lay = layout(t)
    z = np.asarray(z)
    return {b.address: (b.down[1] - b.down[0]) - int(z[b.down[0]: b.down[1]].sum()) for b in lay.blocks}


# -- vertices --------------------------------------------------------------


def _vertices_rec(node: Arbor) -> list[tuple[int, ...]]:
    # local layout: own coordinates first, then the child blocks in order
    n = node.size
    r = node.mult
    child_sets = [_vertices_rec(c) for c in node.children]
    out = []
    for combo in itertools.product(*child_sets) if child_sets else [()]:
        tail = tuple(itertools.chain.from_iterable(combo))
        h = sum(tail)
        out.append((0,) * r + tail)
        for i in range(r):
            own = [0] * r
            own[i] = n - h
            out.append(tuple(own) + tail)
    return out


def vertices(t: Arbor) -> np.ndarray:
    """Vertices of Q_t from the fiber recursion: over each vertex of the product of
    the child polytopes, the root block is all-zero or a single coordinate that
    closes the root inequality."""
    pts = np.array(_vertices_rec(t), dtype=np.int64).reshape(-1, t.size)
    return _sorted_rows(pts)


def vertices_by_rank(t: Arbor) -> np.ndarray:
    """Independent vertex oracle: lattice points whose tight constraints have rank n."""
    lay = layout(t)
    a, c = lay.inequalities()
    pts = lattice_points(t, 1)
    keep = []
    for p in pts:
        rows = [a[v] for v in range(len(c)) if a[v] @ p == c[v]]
        rows += [np.eye(lay.n, dtype=np.int64)[i] for i in range(lay.n) if p[i] == 0]
        if rows and np.linalg.matrix_rank(np.array(rows, dtype=float)) == lay.n:
            keep.append(p)
    return np.array(keep, dtype=np.int64).reshape(-1, lay.n)


def contains(t: Arbor, pts: np.ndarray, m: int = 1) -> np.ndarray:
    a, c = layout(t).inequalities()
    pts = np.atleast_2d(pts)
    return (pts >= 0).all(axis=1) & ((pts @ a.T) <= m * c).all(axis=1)


def vertex_certificate(t: Arbor, z: np.ndarray) -> np.ndarray:
    """Sum of the outer normals of all constraints tight at z.

    At a vertex this lies in the interior of the normal cone, so z is the
    unique maximizer of the returned functional over Q_t.
    """
    lay = layout(t)
    a, c = lay.inequalities()
    w = np.zeros(lay.n, np.int64)
    for v in range(len(c)):
        if a[v] @ z == c[v]:
            w += a[v]
    for i in range(lay.n):
        if z[i] == 0:
            w[i] -= 1
    return w


# -- Minkowski decomposition ---------------------------------------------


@dataclass(frozen=True)
class MinkowskiSummand:
    address: tuple[int, ...]
    support: tuple[int, ...]
    scale: int

    def vertex_points(self, n: int) -> list[tuple[int, ...]]:
        out = [(0,) * n]
        for i in self.support:
            p = [0] * n
            p[i] = self.scale
            out.append(tuple(p))
        return out


def minkowski_summands(t: Arbor) -> list[MinkowskiSummand]:
    return [MinkowskiSummand(b.address, b.up, b.mult) for b in layout(t).blocks]


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: dict

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, **self.details}


def _express(z: np.ndarray, summands: list[MinkowskiSummand]) -> list[int] | None:
    """Choose one vertex per summand summing to z (DFS, partial sums stay <= z)."""
    n = len(z)
    choice: list[int] = []
    partial = np.zeros(n, np.int64)
    remaining = [sum(s.scale for s in summands[k:]) for k in range(len(summands) + 1)]

    def dfs(k: int) -> bool:
        # total height still to place must equal what the rest can supply at most
        gap = int(z.sum() - partial.sum())
        if gap < 0 or gap > remaining[k]:
            return False
        if k == len(summands):
            return gap == 0 and bool((partial == z).all())
        s = summands[k]
        for opt in range(len(s.support) + 1):
            if opt == 0:
                choice.append(0)
                if dfs(k + 1):
                    return True
                choice.pop()
                continue
            i = s.support[opt - 1]
            if partial[i] + s.scale > z[i]:
                continue
            partial[i] += s.scale
            choice.append(opt)
            if dfs(k + 1):
                return True
            choice.pop()
            partial[i] -= s.scale
        return False

    return list(choice) if dfs(0) else None


def check_minkowski(t: Arbor, max_tuples: int = 2_000_000) -> CheckReport:
    summands = minkowski_summands(t)
    n = t.size
    n_tuples = 1
    for s in summands:
        n_tuples *= len(s.support) + 1
    if n_tuples > max_tuples:
        raise GuardError(f"{n_tuples} summand-vertex tuples exceeds guard {max_tuples}")
    # (a) every sum of summand vertices satisfies the inequalities
    sums = np.zeros((1, n), np.int64)
    for s in summands:
        opts = np.array(s.vertex_points(n), dtype=np.int64)
        sums = (sums[:, None, :] + opts[None, :, :]).reshape(-1, n)
    inside = bool(contains(t, sums).all())
    # (b) every vertex of Q_t is such a sum
    missing = []
    for z in vertices(t):
        if _express(z, summands) is None:
            missing.append(z.tolist())
    return CheckReport(
        "minkowski",
        inside and not missing,
        {"arbor": t.encode(), "tuples": n_tuples, "sums_inside": inside, "vertices_missing": missing},
    )


def newton_exponents(t: Arbor) -> np.ndarray:
    """Exponent vectors of prod_v (1 + sum_{e in U(v)} x_e)^{|v|}."""
    n = t.size
    exps = {(0,) * n}
    for s in minkowski_summands(t):
        # monomials of (1 + sum x_e)^k: exponents on the support summing to <= k
        local = []
        for combo in itertools.product(range(s.scale + 1), repeat=len(s.support)):
            if sum(combo) <= s.scale:
                v = [0] * n
                for i, c in zip(s.support, combo):
                    v[i] = c
                local.append(v)
        exps = {tuple(a + b for a, b in zip(e, l)) for e in exps for l in local}
    return _sorted_rows(np.array(sorted(exps), dtype=np.int64).reshape(-1, n))


def newton_check(t: Arbor) -> CheckReport:
    exps = newton_exponents(t)
    inside = bool(contains(t, exps).all())
    exp_set = {tuple(e) for e in exps.tolist()}
    verts = vertices(t)
    missing = [v.tolist() for v in verts if tuple(v.tolist()) not in exp_set]
    not_extremal = []
    for v in verts:
        w = vertex_certificate(t, v)
        vals = exps @ w
        top = int(v @ w)
        if (vals >= top).sum() != 1:
            not_extremal.append(v.tolist())
    return CheckReport(
        "newton",
        inside and not missing and not not_extremal,
        {
            "arbor": t.encode(),
            "exponents": int(exps.shape[0]),
            "exponents_inside": inside,
            "vertices_missing": missing,
            "vertices_not_extremal": not_extremal,
        },
    )
