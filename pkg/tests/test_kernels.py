import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given

from tightcut import _kernels
from tightcut.matching import enumerate_perfect_matchings, has_perfect_matching
from tightcut.oracle import matching_array, odd_shores

from conftest import corpus_graphs, mc_graphs

needs_numba = pytest.mark.skipif(_kernels.numba is None, reason="numba not installed")


def _adj(g):
    return np.array(g.adj_masks, dtype=np.int64)


@given(mc_graphs(max_n=10))
def test_pm_table_numpy_matches_matching_engine(g):
    table = _kernels.pm_table_numpy(_adj(g))
    full = (1 << g.n) - 1
    for v in g.vertices:
        keep = full & ~(1 << (v - 1))
        for w in g.vertices:
            if w <= v:
                continue
            mask = keep & ~(1 << (w - 1))
            assert bool(table[mask]) == has_perfect_matching(g, exclude=(v, w))
    assert bool(table[full]) == bool(enumerate_perfect_matchings(g).matchings)


@needs_numba
@given(corpus_graphs(with_cut=False))
def test_backends_agree(g):
    adj = _adj(g)
    assert np.array_equal(_kernels.pm_table_numba(adj), _kernels.pm_table_numpy(adj))
    pairs, shores = matching_array(g), odd_shores(g.n)
    assert np.array_equal(_kernels.tight_shores_numba(pairs, shores), _kernels.tight_shores_numpy(pairs, shores))
    removed = np.arange(1 << g.n, dtype=np.int64)
    a, b = _kernels.component_counts_numba(adj, removed), _kernels.component_counts_numpy(adj, removed)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))


def _backend_in_subprocess(flag):
    env = dict(os.environ)
    env.pop("TIGHTCUT_DISABLE_NUMBA", None)
    if flag is not None:
        env["TIGHTCUT_DISABLE_NUMBA"] = flag
    out = subprocess.run(
        [sys.executable, "-c", "from tightcut import _kernels; print(_kernels.backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_env_flag_selects_numpy():
    assert _backend_in_subprocess("1") == "numpy"


@needs_numba
def test_default_backend_is_numba():
    assert _backend_in_subprocess(None) == "numba"
    assert _backend_in_subprocess("0") == "numba"
