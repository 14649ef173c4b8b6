"""Generative pipeline: latent positions -> probability matrix -> adjacency matrix.

Randomness comes from numpy's PCG64 bit generator seeded with a 64-bit
unsigned integer. Replication ``r`` of an experiment uses seed ``base_seed + r``;
:func:`replication_seeds` derives the latent and edge streams from it.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidParameterError, ModelViolationError
from .graphons import GraphonSpec, eval_graphon

SEED_MAX = 2**64 - 1


def make_rng(seed: int) -> np.random.Generator:
    seed = int(seed)
    if not 0 <= seed <= SEED_MAX:
        raise InvalidParameterError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def replication_seeds(seed: int) -> tuple[int, int]:
    """Split one replication seed into independent (latent, adjacency) seeds."""
    latent, edges = np.random.SeedSequence(int(seed)).generate_state(2, dtype=np.uint64)
    return int(latent), int(edges)


def sample_latent(n: int, seed: int) -> np.ndarray:
    """Draw ``n`` i.i.d. Uniform[0, 1) latent positions."""
    if n < 1:
        raise InvalidParameterError(f"network size must be >= 1, got {n}")
    return make_rng(seed).random(n)


def build_probability_matrix(spec: GraphonSpec, xi) -> np.ndarray:
    """``P[i, j] = f(xi[i], xi[j])``, diagonal included."""
    xi = np.asarray(xi, dtype=float)
    if xi.ndim != 1:
        raise InvalidParameterError("latent positions must be a vector")
    if np.any((xi < 0) | (xi > 1)):
        raise InvalidParameterError("latent positions must lie in [0, 1]")
    P = eval_graphon(spec, xi[:, None], xi[None, :])
    P = np.array(P, dtype=float)
    # custom graphons need not be exactly symmetric in floating point
    iu = np.triu_indices(len(xi), 1)
    P.T[iu] = P[iu]
    return P


def sample_adjacency(P, seed: int) -> np.ndarray:
    """Independent Bernoulli(P[i, j]) edges for i < j, mirrored, zero diagonal."""
    P = check_probability(P)
    n = P.shape[0]
    iu = np.triu_indices(n, 1)
    draws = make_rng(seed).random(len(iu[0]))
    A = np.zeros((n, n), dtype=float)
    A[iu] = draws < P[iu]
    A.T[iu] = A[iu]
    return A


def check_probability(P) -> np.ndarray:
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise InvalidParameterError(f"probability matrix must be square, got {P.shape}")
    if not np.all((P >= 0) & (P <= 1)):
        raise ModelViolationError("probability matrix entries must lie in [0, 1]")
    if not np.array_equal(P, P.T):
        raise ModelViolationError("probability matrix must be symmetric")
    return P


def check_adjacency(A) -> np.ndarray:
    """Validate a symmetric 0/1 matrix with zero diagonal; returns it as float64."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidParameterError(f"adjacency matrix must be square, got {A.shape}")
    if not np.all((A == 0) | (A == 1)):
        raise InvalidParameterError("adjacency matrix must be binary")
    if not np.array_equal(A, A.T):
        raise InvalidParameterError("adjacency matrix must be symmetric")
    if np.any(np.diag(A) != 0):
        raise InvalidParameterError("adjacency matrix must have a zero diagonal")
    return A


def simulate(spec: GraphonSpec, n: int, seed: int):
    """One replication: returns ``(xi, P, A)`` drawn from ``seed``."""
    latent_seed, edge_seed = replication_seeds(seed)
    xi = sample_latent(n, latent_seed)
    P = build_probability_matrix(spec, xi)
    A = sample_adjacency(P, edge_seed)
    return xi, P, A
