"""Bitmask kernels behind the matching engine and the exhaustive oracle.

Every kernel exists twice: a loop version compiled with ``numba.njit`` and a
vectorised numpy version.  The numba path is used when numba imports and the
environment variable ``TIGHTCUT_DISABLE_NUMBA`` is unset or false; both paths
return identical arrays.

Vertex ``i`` (0-based) is bit ``i`` of an ``int64`` mask, so graphs are limited
to 62 vertices here; callers fall back to pure Python above that.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional accelerator
    numba = None

DISABLED = os.environ.get("TIGHTCUT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")
USE_NUMBA = numba is not None and not DISABLED

MAX_BITS = 62


def _jit(fn):
    if numba is None:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


# -- perfect-matching existence table ---------------------------------------


def _pm_table_loop(adj, out):
    n = adj.shape[0]
    size = 1 << n
    out[0] = 1
    for mask in range(1, size):
        # popcount parity: odd sets never have a perfect matching
        c = 0
        m = mask
        while m:
            m &= m - 1
            c += 1
        if c & 1:
            continue
        low = 0
        while not (mask >> low) & 1:
            low += 1
        rest = mask ^ (1 << low)
        cand = adj[low] & rest
        j = 0
        while cand:
            if cand & 1:
                if out[rest ^ (1 << j)]:
                    out[mask] = 1
                    break
            cand >>= 1
            j += 1
    return out


_pm_table_compiled = _jit(_pm_table_loop)


def pm_table_numba(adj: np.ndarray) -> np.ndarray:
    adj = np.ascontiguousarray(adj, dtype=np.int64)
    out = np.zeros(1 << adj.shape[0], dtype=np.uint8)
    return _pm_table_compiled(adj, out)


def pm_table_numpy(adj: np.ndarray) -> np.ndarray:
    adj = np.asarray(adj, dtype=np.int64)
    n = adj.shape[0]
    masks = np.arange(1 << n, dtype=np.int64)
    pop = np.zeros(masks.shape, dtype=np.int64)
    low = np.full(masks.shape, -1, dtype=np.int64)
    for j in range(n - 1, -1, -1):
        bit = (masks >> j) & 1
        pop += bit
        low[bit == 1] = j
    out = np.zeros(masks.shape, dtype=np.uint8)
    out[0] = 1
    for k in range(2, n + 1, 2):
        layer = masks[pop == k]
        lo = low[pop == k]
        rest = layer ^ (np.int64(1) << lo)
        cand = adj[lo] & rest
        found = np.zeros(layer.shape, dtype=bool)
        for j in range(n):
            hit = ((cand >> j) & 1).astype(bool)
            if hit.any():
                sub = np.where(hit, rest ^ (np.int64(1) << j), 0)
                found |= hit & (out[sub] == 1)
        out[layer] = found
    return out


# -- tightness of many shores against many perfect matchings ----------------


def _tight_shores_loop(pairs, shores, out):
    # pairs: (P, k, 2) 0-based endpoints; out[s] = every matching crosses once
    P = pairs.shape[0]
    k = pairs.shape[1]
    for s in range(shores.shape[0]):
        mask = shores[s]
        ok = 1
        for p in range(P):
            cnt = 0
            for i in range(k):
                a = (mask >> pairs[p, i, 0]) & 1
                b = (mask >> pairs[p, i, 1]) & 1
                cnt += a ^ b
            if cnt != 1:
                ok = 0
                break
        out[s] = ok
    return out


_tight_shores_compiled = _jit(_tight_shores_loop)


def tight_shores_numba(pairs: np.ndarray, shores: np.ndarray) -> np.ndarray:
    pairs = np.ascontiguousarray(pairs, dtype=np.int64)
    shores = np.ascontiguousarray(shores, dtype=np.int64)
    out = np.zeros(shores.shape[0], dtype=np.uint8)
    return _tight_shores_compiled(pairs, shores, out).astype(bool)


def tight_shores_numpy(pairs: np.ndarray, shores: np.ndarray, chunk: int = 64) -> np.ndarray:
    pairs = np.asarray(pairs, dtype=np.int64)
    shores = np.asarray(shores, dtype=np.int64)
    out = np.zeros(shores.shape[0], dtype=bool)
    if pairs.shape[0] == 0:
        out[:] = True
        return out
    u = pairs[None, :, :, 0]
    v = pairs[None, :, :, 1]
    for start in range(0, shores.shape[0], chunk):
        s = shores[start:start + chunk, None, None]
        crossing = ((s >> u) & 1) ^ ((s >> v) & 1)
        out[start:start + chunk] = (crossing.sum(axis=2) == 1).all(axis=1)
    return out


# -- component counts of G - S for many S -----------------------------------


def _component_counts_loop(adj, removed, comps, odd):
    n = adj.shape[0]
    full = (np.int64(1) << n) - 1
    for r in range(removed.shape[0]):
        left = full & ~removed[r]
        c = 0
        o = 0
        while left:
            seed = left & -left
            comp = seed
            frontier = seed
            while frontier:
                low = 0
                while not (frontier >> low) & 1:
                    low += 1
                frontier ^= np.int64(1) << low
                new = adj[low] & left & ~comp
                comp |= new
                frontier |= new
            left &= ~comp
            c += 1
            size = 0
            m = comp
            while m:
                m &= m - 1
                size += 1
            o += size & 1
        comps[r] = c
        odd[r] = o
    return comps, odd


_component_counts_compiled = _jit(_component_counts_loop)


def component_counts_numba(adj: np.ndarray, removed: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    adj = np.ascontiguousarray(adj, dtype=np.int64)
    removed = np.ascontiguousarray(removed, dtype=np.int64)
    comps = np.zeros(removed.shape[0], dtype=np.int64)
    odd = np.zeros(removed.shape[0], dtype=np.int64)
    return _component_counts_compiled(adj, removed, comps, odd)


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    c = np.zeros(a.shape, dtype=np.int64)
    while a.any():
        c += (a & 1)
        a >>= 1
    return c


def component_counts_numpy(adj: np.ndarray, removed: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    adj = np.asarray(adj, dtype=np.int64)
    removed = np.asarray(removed, dtype=np.int64)
    n = adj.shape[0]
    full = (np.int64(1) << n) - 1
    left = full & ~removed
    comps = np.zeros(removed.shape, dtype=np.int64)
    odd = np.zeros(removed.shape, dtype=np.int64)
    while left.any():
        live = left != 0
        comp = left & -left
        while True:
            grown = comp.copy()
            for j in range(n):
                has = ((comp >> j) & 1).astype(bool)
                grown[has] |= adj[j]
            grown &= left
            if np.array_equal(grown, comp):
                break
            comp = grown
        comps += live
        odd += live & (_popcount(comp) & 1).astype(bool)
        left &= ~comp
    return comps, odd


if USE_NUMBA:
    pm_table = pm_table_numba
    tight_shores = tight_shores_numba
    component_counts = component_counts_numba
else:
    pm_table = pm_table_numpy
    tight_shores = tight_shores_numpy
    component_counts = component_counts_numpy


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
