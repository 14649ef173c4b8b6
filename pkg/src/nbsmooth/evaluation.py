"""Error metrics, replicated experiments and the bandwidth sweep."""

from __future__ import annotations

import csv
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import baselines, nbs
from .errors import DimensionMismatchError, InvalidParameterError
from .graphons import GraphonSpec
from .model import simulate

CSV_COLUMNS = (
    "method", "graphon", "n", "reps", "C",
    "rmse_mean", "rmse_se", "mae_mean", "mae_se", "twoinf_mean", "twoinf_se",
)


def compute_metrics(Phat, P) -> tuple[float, float, float]:
    """``(rmse, mae, twoinf)`` over all n^2 entries, diagonal included.

    ``twoinf`` is the largest row-wise L2 error divided by sqrt(n).
    """
    Phat = np.asarray(Phat, dtype=float)
    P = np.asarray(P, dtype=float)
    if Phat.shape != P.shape or Phat.ndim != 2:
        raise DimensionMismatchError(f"shapes differ: {Phat.shape} vs {P.shape}")
    E = Phat - P
    sq = E * E
    n = P.shape[1]
    rmse = math.sqrt(sq.mean())
    mae = float(np.abs(E).mean())
    twoinf = math.sqrt(sq.sum(axis=1).max() / n)
    return rmse, mae, twoinf


# method id -> callable(A, xi, params) -> P_hat
def _nbs(A, xi, params):
    return nbs.estimate_nbs(A, params.get("C", 1.0))


def _oracle(A, xi, params):
    if xi is None:
        raise InvalidParameterError("sbm-oracle needs the true latent positions")
    return baselines.oracle_histogram(A, xi, params.get("K"))


METHODS: dict[str, Callable] = {
    "nbs": _nbs,
    "usvt": lambda A, xi, p: baselines.usvt(A, p.get("eta", 0.02)),
    "svtk": lambda A, xi, p: baselines.svt_topk(A, p.get("k")),
    "sas": lambda A, xi, p: baselines.sort_and_smooth(A, p.get("bins")),
    "sas-svd": lambda A, xi, p: baselines.sas_svd(A, p.get("k"), p.get("bins")),
    "sbm-spectral": lambda A, xi, p: baselines.spectral_histogram(A, p.get("K"), p.get("kmeans_seed", 0)),
    "sbm-oracle": _oracle,
}


def estimate(method: str, A, xi=None, params: Optional[dict] = None) -> np.ndarray:
    if method not in METHODS:
        raise InvalidParameterError(f"unknown method {method!r}; valid: {', '.join(METHODS)}")
    return METHODS[method](A, xi, dict(params or {}))


@dataclass
class MetricReport:
    method: str
    graphon: str
    n: int
    reps: int
    rmse_mean: float
    rmse_se: float
    mae_mean: float
    mae_se: float
    twoinf_mean: float
    twoinf_se: float
    C: Optional[float] = None
    # per-replication (rmse, mae, twoinf), kept for paired comparisons
    samples: np.ndarray = field(default=None, repr=False)

    @classmethod
    def from_samples(cls, method, graphon, n, samples, C=None) -> "MetricReport":
        samples = np.asarray(samples, dtype=float).reshape(-1, 3)
        reps = samples.shape[0]
        if reps < 1:
            raise InvalidParameterError("need at least one replication")
        mean = samples.mean(axis=0)
        se = samples.std(axis=0, ddof=1) / math.sqrt(reps) if reps > 1 else np.zeros(3)
        return cls(method, graphon, n, reps, mean[0], se[0], mean[1], se[1], mean[2], se[2],
                   C=C, samples=samples)

    @property
    def mse_mean(self) -> float:
        """Mean over replications of rmse^2."""
        return float((self.samples[:, 0] ** 2).mean())

    def row(self) -> dict:
        d = asdict(self)
        d.pop("samples")
        return {k: d[k] for k in CSV_COLUMNS}


def _check_reps(reps):
    if reps < 1:
        raise InvalidParameterError(f"reps must be >= 1, got {reps}")


def run_benchmark(graphon: GraphonSpec, n: int, methods: Sequence[str], reps: int,
                  base_seed: int, params: Optional[dict] = None) -> list[MetricReport]:
    """Every method sees the same sampled networks: replication r uses seed ``base_seed + r``."""
    _check_reps(reps)
    params = dict(params or {})
    for m in methods:
        if m not in METHODS:
            raise InvalidParameterError(f"unknown method {m!r}; valid: {', '.join(METHODS)}")
    samples = {m: [] for m in methods}
    for r in range(reps):
        xi, P, A = simulate(graphon, n, base_seed + r)
        for m in methods:
            samples[m].append(compute_metrics(estimate(m, A, xi, params), P))
    return [
        MetricReport.from_samples(m, graphon.label, n, samples[m],
                                  C=params.get("C", 1.0) if m == "nbs" else None)
        for m in methods
    ]


def run_replications(graphon: GraphonSpec, n: int, method: str, reps: int,
                     base_seed: int, params: Optional[dict] = None) -> MetricReport:
    return run_benchmark(graphon, n, [method], reps, base_seed, params)[0]


def bandwidth_sweep(graphon: GraphonSpec, n: int, C_grid: Iterable[float], reps: int,
                    base_seed: int) -> list[MetricReport]:
    """One NBS report per C. Replication r is the same network for every C, and
    its dissimilarity matrix is computed once and shared."""
    C_grid = [float(C) for C in C_grid]
    if not C_grid:
        raise InvalidParameterError("empty C grid")
    _check_reps(reps)
    samples = {C: [] for C in C_grid}
    for r in range(reps):
        _, P, A = simulate(graphon, n, base_seed + r)
        D = nbs.nbs_dissimilarity(A)
        for C in C_grid:
            samples[C].append(compute_metrics(nbs.estimate_from_dissimilarity(A, D, C), P))
    return [MetricReport.from_samples("nbs", graphon.label, n, samples[C], C=C) for C in C_grid]


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def write_reports_csv(reports: Iterable[MetricReport], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for rep in reports:
            row = rep.row()
            w.writerow([_fmt(row[c]) for c in CSV_COLUMNS])


def read_reports_csv(path) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))
