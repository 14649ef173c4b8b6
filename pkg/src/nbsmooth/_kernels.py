"""Compiled kernels behind the neighborhood-smoothing dissimilarity."""

import os

os.environ.setdefault("NUMBA_THREADING_LAYER", "omp")

import numba  # noqa: E402
import numpy as np  # noqa: E402

# rows of the "anchor" block kept hot in cache while streaming the other rows
TILE = 64


@numba.njit(fastmath=True, inline="always")
def _max_abs_diff(a, b):
    acc = a[0] - a[0]
    for k in range(a.shape[0]):
        acc = max(acc, abs(a[k] - b[k]))
    return acc


@numba.njit(parallel=True, cache=True)
def max_abs_row_diff(S):
    """``D[i, j] = max_{k not in {i, j}} |S[i, k] - S[j, k]|`` with zero diagonal.

    Excluded columns are neutralised by copying row ``i``'s values into a
    scratch copy of row ``j`` so each pair costs one contiguous pass. Integer
    inputs give exact results; max is order-free so the schedule never
    changes the output.
    """
    n = S.shape[0]
    D = np.zeros((n, n), dtype=S.dtype)
    for i0 in range(0, n, TILE):
        i1 = min(n, i0 + TILE)
        for j in numba.prange(i0 + 1, n):
            buf = S[j].copy()
            for i in range(i0, min(i1, j)):
                a = S[i]
                buf[i] = a[i]
                buf[j] = a[j]
                m = _max_abs_diff(a, buf)
                buf[i] = S[j, i]
                buf[j] = S[j, j]
                D[i, j] = m
                D[j, i] = m
    return D


def set_threads(n_threads=None):
    """Cap compiled-kernel workers; ``None`` reads ``NBS_THREADS``. Results never depend on it."""
    if n_threads is None:
        env = os.environ.get("NBS_THREADS")
        if not env:
            return numba.get_num_threads()
        n_threads = int(env)
    n_threads = max(1, min(int(n_threads), numba.config.NUMBA_NUM_THREADS))
    numba.set_num_threads(n_threads)
    return n_threads
