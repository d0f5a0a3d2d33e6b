"""Compare the numba and numpy versions of the hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is run once to trigger compilation, then timed; both backends
must return identical arrays.
"""

import argparse
import time

import numpy as np

from tightcut import _kernels
from tightcut.corpus import petersen
from tightcut.graph import Multigraph
from tightcut.oracle import matching_array, odd_shores


def ladder(k):
    # the prism over a 2k-cycle has plenty of perfect matchings
    n = 2 * k
    edges = [(i, i % k + 1) for i in range(1, k + 1)]
    edges += [(k + i, k + i % k + 1) for i in range(1, k + 1)]
    edges += [(i, k + i) for i in range(1, k + 1)]
    return Multigraph(n, tuple(edges))


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def cases():
    for g, label in ((petersen(), "petersen"), (ladder(7), "prism-14"), (ladder(8), "prism-16")):
        adj = np.array(g.adj_masks, dtype=np.int64)
        yield f"pm_table[{label}]", _kernels.pm_table_numba, _kernels.pm_table_numpy, (adj,)
        if g.n <= 14:
            pairs = matching_array(g)
            shores = odd_shores(g.n)
            yield f"tight_shores[{label}]", _kernels.tight_shores_numba, _kernels.tight_shores_numpy, (pairs, shores)
        removed = np.arange(1 << min(g.n, 12), dtype=np.int64)
        yield f"component_counts[{label}]", _kernels.component_counts_numba, _kernels.component_counts_numpy, (adj, removed)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'kernel':34s} {'numba (ms)':>11s} {'numpy (ms)':>11s} {'speedup':>8s}")
    for name, fast, slow, inputs in cases():
        fast(*inputs)  # compile
        t_fast, a = best_of(lambda: fast(*inputs), args.repeat)
        t_slow, b = best_of(lambda: slow(*inputs), args.repeat)
        same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) else np.array_equal(a, b)
        if not same:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:34s} {t_fast * 1e3:11.2f} {t_slow * 1e3:11.2f} {t_slow / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
