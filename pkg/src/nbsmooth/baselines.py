"""Benchmark estimators: singular value thresholding, sort-and-smooth, block histograms."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse.linalg
from sklearn.cluster import KMeans

from .errors import InvalidParameterError, NumericalError

# Lanczos is only worth it when few eigenpairs are needed from a large matrix
_LANCZOS_MIN_N = 200
_LANCZOS_MAX_FRACTION = 0.2
_LANCZOS_SEED = 20140101


@dataclass
class BlockAssignment:
    labels: np.ndarray
    n_blocks: int

    @property
    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.n_blocks)


def _symmetric_clip(M):
    M = np.clip(M, 0.0, 1.0)
    return (M + M.T) / 2


def _dense_eigh(A):
    try:
        return scipy.linalg.eigh(A)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc


def _top_eigenpairs(A, k):
    """``k`` eigenpairs of symmetric ``A`` with largest |eigenvalue|.

    For symmetric matrices these are the leading singular triplets, with
    singular value ``|lambda|``.
    """
    n = A.shape[0]
    if n >= _LANCZOS_MIN_N and k <= _LANCZOS_MAX_FRACTION * n:
        v0 = np.random.default_rng(_LANCZOS_SEED).standard_normal(n)
        try:
            vals, vecs = scipy.sparse.linalg.eigsh(A, k=k, which="LM", v0=v0, tol=0)
        except scipy.sparse.linalg.ArpackError as exc:
            raise NumericalError(f"Lanczos eigensolver failed: {exc}") from exc
    else:
        vals, vecs = _dense_eigh(A)
    order = np.argsort(-np.abs(vals), kind="stable")[:k]
    return vals[order], vecs[:, order]


def _reconstruct(vals, vecs):
    return (vecs * vals) @ vecs.T


def usvt(A, eta: float = 0.02) -> np.ndarray:
    """Universal singular value thresholding at ``(2 + eta) sqrt(n)``."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if n < 2:
        raise InvalidParameterError("usvt needs n >= 2")
    tau = (2 + eta) * math.sqrt(n)
    # grow the Lanczos request until the smallest returned value falls below tau
    k = min(n, 8)
    while True:
        vals, vecs = _top_eigenpairs(A, k)
        if k >= n or np.abs(vals[-1]) < tau:
            break
        k = min(n, 2 * k)
    keep = np.abs(vals) >= tau
    return _symmetric_clip(_reconstruct(vals[keep], vecs[:, keep]))


def default_rank(n: int) -> int:
    return math.ceil(n ** (1 / 3) - 1e-9)


def svt_topk(A, k: int | None = None) -> np.ndarray:
    """Best rank-``k`` approximation of A, clipped to [0, 1]; ``k`` defaults to ceil(n^(1/3))."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if k is None:
        k = default_rank(n)
    if not 1 <= k <= n:
        raise InvalidParameterError(f"rank must lie in [1, {n}], got {k}")
    vals, vecs = _top_eigenpairs(A, k)
    return _symmetric_clip(_reconstruct(vals, vecs))


def default_blocks(n: int) -> int:
    return max(1, math.isqrt(n))


def degree_sort_blocks(M, bins: int) -> BlockAssignment:
    """Sort nodes by row sum (ties by index) and cut into ``bins`` near-equal groups."""
    n = M.shape[0]
    if not 1 <= bins <= n:
        raise InvalidParameterError(f"bins must lie in [1, {n}], got {bins}")
    order = np.argsort(M.sum(axis=1), kind="stable")
    labels = np.empty(n, dtype=np.int64)
    for b, chunk in enumerate(np.array_split(order, bins)):
        labels[chunk] = b
    return BlockAssignment(labels, bins)


def sort_and_smooth(A, bins: int | None = None) -> np.ndarray:
    """Degree-sort the nodes, then average A over blocks of consecutive nodes.

    Accepts any symmetric matrix with entries in [0, 1], which is how the
    pre-denoised variant :func:`sas_svd` reuses it.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if bins is None:
        bins = math.ceil(math.sqrt(n) - 1e-9)
    if bins > n:
        raise InvalidParameterError(f"bins ({bins}) exceeds n ({n})")
    return block_histogram(A, degree_sort_blocks(A, bins))


def sas_svd(A, k: int | None = None, bins: int | None = None) -> np.ndarray:
    """Sort-and-smooth applied after rank-``k`` denoising."""
    return sort_and_smooth(svt_topk(A, k), bins)


def block_histogram(A, z: BlockAssignment) -> np.ndarray:
    """Average A within each pair of blocks, excluding the diagonal pairs u == v.

    A singleton block has no within-block pairs; its diagonal cell falls back
    to the global off-diagonal edge density.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    labels = np.asarray(z.labels)
    if labels.shape != (n,) or labels.min(initial=0) < 0 or labels.max(initial=0) >= z.n_blocks:
        raise InvalidParameterError("labels do not match the matrix or block count")
    Z = np.zeros((n, z.n_blocks))
    Z[np.arange(n), labels] = 1.0
    sizes = Z.sum(axis=0)
    sums = Z.T @ (A - np.diag(np.diag(A))) @ Z
    pairs = np.outer(sizes, sizes) - np.diag(sizes)
    density = (A.sum() - np.trace(A)) / (n * (n - 1)) if n > 1 else 0.0
    with np.errstate(invalid="ignore", divide="ignore"):
        blocks = np.where(pairs > 0, sums / pairs, density)
    blocks = (blocks + blocks.T) / 2
    return np.clip(blocks[labels][:, labels], 0.0, 1.0)


def oracle_blocks(xi, K: int | None = None) -> BlockAssignment:
    """Equal-width bins of the true latent positions."""
    xi = np.asarray(xi, dtype=float)
    if K is None:
        K = default_blocks(len(xi))
    if K < 1:
        raise InvalidParameterError(f"block count must be >= 1, got {K}")
    labels = np.minimum(K - 1, np.floor(xi * K)).astype(np.int64)
    return BlockAssignment(labels, K)


def fit_spectral_blocks(A, K: int | None = None, seed: int = 0, n_init: int = 20) -> BlockAssignment:
    """Regularized spectral clustering into ``K`` blocks.

    Uses ``(D + tau I)^{-1/2} A (D + tau I)^{-1/2}`` with tau the mean degree,
    the K eigenvectors of largest |eigenvalue|, unit-normalized rows, and
    seeded k-means keeping the best of ``n_init`` restarts.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if K is None:
        K = default_blocks(n)
    if not 1 <= K <= n:
        raise InvalidParameterError(f"K must lie in [1, {n}], got {K}")
    if K == 1:
        return BlockAssignment(np.zeros(n, dtype=np.int64), 1)
    if K == n:
        return BlockAssignment(np.arange(n, dtype=np.int64), n)
    deg = A.sum(axis=1)
    tau = deg.mean()
    if tau == 0:
        # empty graph; any partition is equally good
        return BlockAssignment(np.arange(n, dtype=np.int64) * K // n, K)
    w = 1 / np.sqrt(deg + tau)
    L = A * w[:, None] * w[None, :]
    _, vecs = _top_eigenpairs(L, K)
    norms = np.linalg.norm(vecs, axis=1)
    X = np.divide(vecs, norms[:, None], out=np.zeros_like(vecs), where=norms[:, None] > 0)
    km = KMeans(n_clusters=K, n_init=n_init, random_state=seed)
    labels = km.fit_predict(X)
    return BlockAssignment(_compact(labels), K)


def _compact(labels):
    # k-means can leave clusters empty when rows coincide; relabel densely
    _, dense = np.unique(labels, return_inverse=True)
    return dense.astype(np.int64)


def spectral_histogram(A, K: int | None = None, seed: int = 0) -> np.ndarray:
    z = fit_spectral_blocks(A, K, seed=seed)
    return block_histogram(A, BlockAssignment(z.labels, int(z.labels.max()) + 1))


def oracle_histogram(A, xi, K: int | None = None) -> np.ndarray:
    return block_histogram(A, oracle_blocks(xi, K))
