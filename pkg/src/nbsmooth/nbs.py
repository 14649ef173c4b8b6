"""Neighborhood smoothing estimator of the edge-probability matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import max_abs_row_diff
from .errors import InstanceTooSmallError, InvalidParameterError, NBSError
from .model import check_adjacency

# guards ceil() against h*(n-1) landing a few ulps above an integer
_RANK_EPS = 1e-9


@dataclass
class NeighborhoodSet:
    """Boolean membership ``mask[i, i']`` (i' in N_i) and per-row thresholds."""

    mask: np.ndarray
    thresholds: np.ndarray
    rank: int

    @property
    def sizes(self) -> np.ndarray:
        return self.mask.sum(axis=1)

    def members(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.mask[i])


def common_neighbors(A) -> np.ndarray:
    """``A @ A`` as exact int32 counts."""
    A = np.asarray(A)
    counts = A.astype(np.float64) @ A.astype(np.float64)
    return np.rint(counts).astype(np.int32)


def slice_products(A) -> np.ndarray:
    """``S = A^2 / n``; entry (i, k) is the normalized inner product of rows i and k."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if n < 1:
        raise InstanceTooSmallError("empty network")
    return common_neighbors(A) / n


def dissimilarity_matrix(S) -> np.ndarray:
    """``D[i, i'] = max_{k != i, i'} |S[i, k] - S[i', k]|`` (squared dissimilarity scale).

    Integer input stays integer, so pass :func:`common_neighbors` counts and
    divide by ``n`` afterwards for an exact result.
    """
    S = np.asarray(S)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise InvalidParameterError(f"S must be square, got {S.shape}")
    n = S.shape[0]
    if n < 3:
        raise InstanceTooSmallError(f"dissimilarity needs n >= 3, got {n}")
    if np.issubdtype(S.dtype, np.integer):
        S = np.ascontiguousarray(S, dtype=np.int32 if S.max(initial=0) < 2**31 else np.int64)
    else:
        S = np.ascontiguousarray(S, dtype=np.float64)
    return max_abs_row_diff(S)


def bandwidth(n: int, C: float = 1.0) -> float:
    """Quantile fraction ``h = min(1, C * sqrt(log n / n))``."""
    if C <= 0:
        raise InvalidParameterError(f"bandwidth constant must be positive, got {C}")
    return min(1.0, C * math.sqrt(math.log(n) / n))


def neighborhood_rank(n: int, h: float) -> int:
    """Order statistic used as the threshold: ``max(1, ceil(h (n - 1)))``."""
    if not 0 < h <= 1:
        raise InvalidParameterError(f"bandwidth must lie in (0, 1], got {h}")
    return max(1, math.ceil(h * (n - 1) - _RANK_EPS))


def select_neighborhoods(D, h: float) -> NeighborhoodSet:
    """Keep every ``i' != i`` whose dissimilarity is at most the k-th smallest in row i.

    Ties at the threshold are all admitted, so ``|N_i| >= k``.
    """
    D = np.asarray(D, dtype=float)
    n = D.shape[0]
    if n < 2:
        raise InstanceTooSmallError(f"neighborhood selection needs n >= 2, got {n}")
    k = neighborhood_rank(n, h)
    off = D.copy()
    np.fill_diagonal(off, np.inf)
    q = np.partition(off, k - 1, axis=1)[:, k - 1]
    mask = off <= q[:, None]
    return NeighborhoodSet(mask=mask, thresholds=q, rank=k)


def smooth(A, N: NeighborhoodSet) -> np.ndarray:
    """Row i of the output is the average of adjacency rows over N_i."""
    A = np.asarray(A, dtype=float)
    sizes = N.sizes
    if np.any(sizes == 0):
        raise NBSError("empty neighborhood")
    # 0/1 sums are exact in float64, so the result does not depend on summation order
    totals = N.mask.astype(np.float64) @ A
    return totals / sizes[:, None]


def symmetrize(Pt) -> np.ndarray:
    Pt = np.asarray(Pt, dtype=float)
    return (Pt + Pt.T) / 2


def nbs_dissimilarity(A) -> np.ndarray:
    """Exact squared dissimilarities for an adjacency matrix."""
    A = np.asarray(A, dtype=float)
    return dissimilarity_matrix(common_neighbors(A)) / A.shape[0]


def estimate_from_dissimilarity(A, D, C: float = 1.0) -> np.ndarray:
    """Smoothing step for a precomputed dissimilarity; lets sweeps over C share D."""
    n = A.shape[0]
    N = select_neighborhoods(D, bandwidth(n, C))
    return symmetrize(smooth(A, N))


def estimate_nbs(A, C: float = 1.0) -> np.ndarray:
    """Neighborhood smoothing estimate of P with bandwidth ``C * sqrt(log n / n)``."""
    A = check_adjacency(A)
    if A.shape[0] < 3:
        raise InstanceTooSmallError(f"estimate_nbs needs n >= 3, got {A.shape[0]}")
    return estimate_from_dissimilarity(A, nbs_dissimilarity(A), C)
