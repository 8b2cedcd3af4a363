"""Integer inner loops for the brute-force oracles.

Each kernel has a numba version and a pure-numpy version with the same
signature. ``ARBORS_NO_NUMBA=1`` in the environment (or numba missing)
selects the numpy path at import time; ``use_numba(False)`` switches at
run time, which the benchmark uses to time both.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

_ENV_DISABLED = os.environ.get("ARBORS_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}
_state = {"numba": HAVE_NUMBA and not _ENV_DISABLED}


def numba_enabled() -> bool:
    return _state["numba"]


def use_numba(flag: bool) -> None:
    if flag and not HAVE_NUMBA:
        raise RuntimeError("numba is not importable")
    _state["numba"] = bool(flag)


# ---------------------------------------------------------------------------
# lattice points of {x >= 0 : sum_{j in [s_v, e_v)} x_j <= cap_v}
#
# anc[i, :] lists the constraint ids whose index range contains i (padded -1);
# vend[v] is the exclusive end of range v. Coordinates are filled from the
# last index down, so a bound on x_i only involves already-chosen coordinates
# and every partial assignment extends (zeros are always feasible).
# ---------------------------------------------------------------------------


def _points_py(anc, vend, vcap, out, count_only):
    n = anc.shape[0]
    x = np.zeros(n, np.int64)
    suffix = np.zeros(n + 1, np.int64)
    bound = np.zeros(n, np.int64)
    count = 0
    i = n - 1
    b = np.int64(1) << 62
    for d in range(anc.shape[1]):
        v = anc[i, d]
        if v < 0:
            break
        val = vcap[v] - (suffix[i + 1] - suffix[vend[v]])
        if val < b:
            b = val
    bound[i] = b
    x[i] = 0
    while True:
        if x[i] <= bound[i]:
            suffix[i] = suffix[i + 1] + x[i]
            if i == 0:
                if not count_only:
                    for k in range(n):
                        out[count, k] = x[k]
                count += 1
                x[i] += 1
            else:
                i -= 1
                b = np.int64(1) << 62
                for d in range(anc.shape[1]):
                    v = anc[i, d]
                    if v < 0:
                        break
                    val = vcap[v] - (suffix[i + 1] - suffix[vend[v]])
                    if val < b:
                        b = val
                bound[i] = b
                x[i] = 0
        else:
            i += 1
            if i == n:
                break
            x[i] += 1
    return count


def _points_np(anc, vend, vcap):
    n = anc.shape[0]
    # rows hold x_i..x_{n-1}; column 0 is the most recent coordinate
    rows = np.zeros((1, 0), np.int64)
    for i in range(n - 1, -1, -1):
        # suffix[:, j] = sum of x_{i+1+j'} for j' >= j, plus a trailing zero column
        if rows.shape[1]:
            suffix = np.concatenate(
                [np.cumsum(rows[:, ::-1], axis=1)[:, ::-1], np.zeros((rows.shape[0], 1), np.int64)], axis=1
            )
        else:
            suffix = np.zeros((rows.shape[0], 1), np.int64)
        bound = np.full(rows.shape[0], np.int64(1) << 62)
        for v in anc[i]:
            if v < 0:
                break
            # sum over (i, vend) = suffix at offset 0 minus suffix at offset vend - i - 1
            partial = suffix[:, 0] - suffix[:, vend[v] - i - 1]
            bound = np.minimum(bound, vcap[v] - partial)
        reps = bound + 1
        base = np.repeat(rows, reps, axis=0)
        starts = np.cumsum(reps) - reps
        xi = np.arange(int(reps.sum()), dtype=np.int64) - np.repeat(starts, reps)
        rows = np.concatenate([xi[:, None], base], axis=1)
    return rows


def lattice_points(anc, vend, vcap) -> np.ndarray:
    anc = np.ascontiguousarray(anc, dtype=np.int64)
    vend = np.ascontiguousarray(vend, dtype=np.int64)
    vcap = np.ascontiguousarray(vcap, dtype=np.int64)
    if numba_enabled():
        dummy = np.zeros((0, anc.shape[0]), np.int64)
        count = _points_nb(anc, vend, vcap, dummy, True)
        out = np.zeros((count, anc.shape[0]), np.int64)
        _points_nb(anc, vend, vcap, out, False)
        return out
    return _points_np(anc, vend, vcap)


def count_lattice_points(anc, vend, vcap) -> int:
    anc = np.ascontiguousarray(anc, dtype=np.int64)
    vend = np.ascontiguousarray(vend, dtype=np.int64)
    vcap = np.ascontiguousarray(vcap, dtype=np.int64)
    if numba_enabled():
        return int(_points_nb(anc, vend, vcap, np.zeros((0, anc.shape[0]), np.int64), True))
    return int(_points_np(anc, vend, vcap).shape[0])


# ---------------------------------------------------------------------------
# coordinatewise order
# ---------------------------------------------------------------------------


def _leq_py(pts):
    n = pts.shape[0]
    d = pts.shape[1]
    out = np.zeros((n, n), np.bool_)
    for a in range(n):
        for b in range(n):
            ok = True
            for k in range(d):
                if pts[a, k] > pts[b, k]:
                    ok = False
                    break
            out[a, b] = ok
    return out


def _leq_np(pts, chunk=256):
    n = pts.shape[0]
    out = np.empty((n, n), np.bool_)
    for s in range(0, n, chunk):
        out[s : s + chunk] = (pts[s : s + chunk, None, :] <= pts[None, :, :]).all(axis=2)
    return out


def leq_matrix(pts) -> np.ndarray:
    pts = np.ascontiguousarray(pts, dtype=np.int64)
    if numba_enabled():
        return _leq_nb(pts)
    return _leq_np(pts)


# ---------------------------------------------------------------------------
# Moebius triangle: sum_{a <= b} mu(a, b) X^{rank a} Y^{rank b}, elements
# sorted by rank so that every c < b in the order has a smaller index.
# ---------------------------------------------------------------------------


def _mobius_tri_py(leq, rank, maxrank):
    n = leq.shape[0]
    tri = np.zeros((maxrank + 1, maxrank + 1), np.int64)
    row = np.zeros(n, np.int64)
    up = np.zeros(n, np.int64)
    for a in range(n):
        nup = 0
        for b in range(a, n):
            if leq[a, b]:
                up[nup] = b
                nup += 1
        row[a] = 1
        tri[rank[a], rank[a]] += 1
        for p in range(1, nup):
            b = up[p]
            s = 0
            for q in range(p):
                c = up[q]
                if leq[c, b]:
                    s += row[c]
            row[b] = -s
            tri[rank[a], rank[b]] -= s
        for p in range(nup):
            row[up[p]] = 0
    return tri


def _mobius_tri_np(leq, rank, maxrank):
    n = leq.shape[0]
    z = leq.astype(np.int64)
    mu = np.zeros((n, n), np.int64)
    for b in range(n):
        col = -(mu[:, :b] @ z[:b, b])
        col[b] = 1
        mu[:, b] = col
    tri = np.zeros((maxrank + 1, maxrank + 1), np.int64)
    ia, ib = np.nonzero(mu)
    np.add.at(tri, (rank[ia], rank[ib]), mu[ia, ib])
    return tri


def mobius_triangle(leq, rank) -> np.ndarray:
    leq = np.ascontiguousarray(leq, dtype=np.bool_)
    rank = np.ascontiguousarray(rank, dtype=np.int64)
    maxrank = int(rank.max()) if rank.size else 0
    if numba_enabled():
        return _mobius_tri_nb(leq, rank, maxrank)
    return _mobius_tri_np(leq, rank, maxrank)


# ---------------------------------------------------------------------------
# multichains a_1 <= ... <= a_k, tallied by the rank of the top element
# ---------------------------------------------------------------------------


def _multichains_py(leq, rank, length, maxrank):
    n = leq.shape[0]
    f = np.ones(n, np.int64)
    g = np.zeros(n, np.int64)
    for _ in range(length - 1):
        for b in range(n):
            s = 0
            for a in range(b + 1):
                if leq[a, b]:
                    s += f[a]
            g[b] = s
        for b in range(n):
            f[b] = g[b]
    hist = np.zeros(maxrank + 1, np.int64)
    for b in range(n):
        hist[rank[b]] += f[b]
    return hist


def _multichains_np(leq, rank, length, maxrank):
    z = leq.astype(np.int64)
    f = np.ones(leq.shape[0], np.int64)
    for _ in range(length - 1):
        f = f @ z
    hist = np.zeros(maxrank + 1, np.int64)
    np.add.at(hist, rank, f)
    return hist


def multichain_histogram(leq, rank, length) -> np.ndarray:
    """Count weak chains of ``length`` elements, by rank of the top element."""
    leq = np.ascontiguousarray(leq, dtype=np.bool_)
    rank = np.ascontiguousarray(rank, dtype=np.int64)
    maxrank = int(rank.max()) if rank.size else 0
    if length < 1:
        raise ValueError("chain length must be >= 1")
    if numba_enabled():
        return _multichains_nb(leq, rank, length, maxrank)
    return _multichains_np(leq, rank, length, maxrank)


# ---------------------------------------------------------------------------
# saturated chains from the minimum (index 0) along covers
# ---------------------------------------------------------------------------


def _saturated_py(leq, rank):
    n = leq.shape[0]
    paths = np.zeros(n, np.int64)
    paths[0] = 1
    for b in range(1, n):
        s = 0
        for a in range(b):
            if rank[a] + 1 == rank[b] and leq[a, b]:
                s += paths[a]
        paths[b] = s
    return paths


def _saturated_np(leq, rank):
    n = leq.shape[0]
    paths = np.zeros(n, np.int64)
    paths[0] = 1
    maxrank = int(rank.max()) if n else 0
    for k in range(1, maxrank + 1):
        lo = np.nonzero(rank == k - 1)[0]
        hi = np.nonzero(rank == k)[0]
        paths[hi] = paths[lo] @ leq[np.ix_(lo, hi)].astype(np.int64)
    return paths


def saturated_chain_counts(leq, rank) -> np.ndarray:
    leq = np.ascontiguousarray(leq, dtype=np.bool_)
    rank = np.ascontiguousarray(rank, dtype=np.int64)
    if numba_enabled():
        return _saturated_nb(leq, rank)
    return _saturated_np(leq, rank)


if HAVE_NUMBA:
    _jit = numba.njit(cache=True, nogil=True)
    _points_nb = _jit(_points_py)
    _leq_nb = _jit(_leq_py)
    _mobius_tri_nb = _jit(_mobius_tri_py)
    _multichains_nb = _jit(_multichains_py)
    _saturated_nb = _jit(_saturated_py)
