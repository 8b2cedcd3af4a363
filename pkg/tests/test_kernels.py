import os
import subprocess
import sys

import numpy as np
import pytest

from arbors import _kernels
from arbors.arbor import enumerate_arbors, parse_arbor
from arbors.polytope import layout
from arbors.poset import build_poset

CASES = [parse_arbor("(2 (2) (1) (1))"), parse_arbor("(1 (1) (1 (1)))")] + enumerate_arbors(4)


@pytest.fixture
def both_modes():
    saved = _kernels.numba_enabled()

    def run(fn):
        out = []
        for flag in (True, False):
            _kernels.use_numba(flag)
            out.append(fn())
        return out

    yield run
    _kernels.use_numba(saved)


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("t", CASES, ids=str)
def test_numba_and_numpy_agree(t, both_modes):
    for m in (1, 2):
        arrays = layout(t).constraint_arrays(m)
        a, b = both_modes(lambda: _kernels.lattice_points(*arrays))
        order_a = np.lexsort(a.T[::-1])
        order_b = np.lexsort(b.T[::-1])
        assert np.array_equal(a[order_a], b[order_b])
        ca, cb = both_modes(lambda: _kernels.count_lattice_points(*arrays))
        assert ca == cb == a.shape[0]
    P = build_poset(t)
    la, lb = both_modes(lambda: _kernels.leq_matrix(P.points))
    assert np.array_equal(la, lb)
    ma, mb = both_modes(lambda: _kernels.mobius_triangle(la, P.rank))
    assert np.array_equal(ma, mb)
    for length in (1, 2, 3):
        ha, hb = both_modes(lambda: _kernels.multichain_histogram(la, P.rank, length))
        assert np.array_equal(ha, hb)
    sa, sb = both_modes(lambda: _kernels.saturated_chain_counts(la, P.rank))
    assert np.array_equal(sa, sb)


def test_leq_matrix_small():
    pts = np.array([[0, 0], [0, 1], [1, 0], [1, 1]])
    assert _kernels.leq_matrix(pts).astype(int).tolist() == [
        [1, 1, 1, 1],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
        [0, 0, 0, 1],
    ]


def test_env_flag_selects_numpy():
    env = dict(os.environ, ARBORS_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from arbors import _kernels; print(_kernels.numba_enabled())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "False"
