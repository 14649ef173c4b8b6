"""Link prediction under random edge masking."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InvalidParameterError, UndefinedCurveError
from .model import make_rng


@dataclass
class RocCurve:
    """Points ordered by decreasing threshold, from (0, 0) to (1, 1).

    The last threshold is ``-inf`` so that every pair counts as predicted.
    """

    thresholds: np.ndarray
    fpr: np.ndarray
    tpr: np.ndarray
    auc: float
    n_pos: int
    n_neg: int


def apply_mask(A_true, p: float, seed: int):
    """Hide each unordered pair independently with probability ``p``.

    Returns ``(A_obs, M)`` with M = 1 for observed pairs and a diagonal of ones.
    """
    if not 0 <= p <= 1:
        raise InvalidParameterError(f"masking probability must lie in [0, 1], got {p}")
    A_true = np.asarray(A_true, dtype=float)
    n = A_true.shape[0]
    iu = np.triu_indices(n, 1)
    M = np.ones((n, n), dtype=float)
    M[iu] = make_rng(seed).random(len(iu[0])) >= p
    M.T[iu] = M[iu]
    return M * A_true, M


def jaccard_scores(A_obs) -> np.ndarray:
    """Common neighbours divided by the product of degrees (0 if either degree is 0)."""
    A = np.asarray(A_obs, dtype=float)
    common = A @ A
    deg = A.sum(axis=1)
    denom = np.outer(deg, deg)
    return np.divide(common, denom, out=np.zeros_like(common), where=denom > 0)


def hidden_pairs(A_true, M):
    """Upper-triangle indices of masked pairs and their true labels."""
    A_true = np.asarray(A_true)
    M = np.asarray(M)
    iu = np.triu_indices(A_true.shape[0], 1)
    hidden = M[iu] == 0
    rows, cols = iu[0][hidden], iu[1][hidden]
    return rows, cols, A_true[rows, cols] == 1


def roc_curve(scores, A_true, M) -> RocCurve:
    """ROC over hidden pairs, predicting an edge when score > t.

    Thresholds are the distinct hidden-pair scores plus ``-inf``; the area is
    the trapezoid rule over the resulting points, which equals the
    Mann-Whitney statistic with ties counted as one half.
    """
    scores = np.asarray(scores, dtype=float)
    if scores.shape != np.shape(A_true) or scores.shape != np.shape(M):
        raise DimensionMismatchError("scores, A_true and M must share a shape")
    rows, cols, positive = hidden_pairs(A_true, M)
    n_pos = int(positive.sum())
    n_neg = int((~positive).sum())
    if n_pos == 0 or n_neg == 0:
        raise UndefinedCurveError(f"need hidden positives and negatives, got {n_pos} and {n_neg}")
    s = scores[rows, cols]
    order = np.argsort(-s, kind="stable")
    s, positive = s[order], positive[order]
    # last index of each run of equal scores, in decreasing score order
    last = np.flatnonzero(np.r_[s[1:] != s[:-1], True])
    tp = np.cumsum(positive)[last]
    fp = np.cumsum(~positive)[last]
    # at t = s[last[j]] the pairs counted are those strictly above it: the runs before j
    tp_above = np.r_[0, tp]
    fp_above = np.r_[0, fp]
    thresholds = np.r_[s[last], -np.inf]
    tpr = tp_above / n_pos
    fpr = fp_above / n_neg
    auc = float(np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1]) / 2))
    return RocCurve(thresholds, fpr, tpr, auc, n_pos, n_neg)


def write_roc_csv(curves: dict, path) -> None:
    """Rows ``method,t,fpr,tpr`` followed by one ``# auc,<method>,<value>`` line per method."""
    with open(path, "w") as fh:
        fh.write("method,t,fpr,tpr\n")
        for name, c in curves.items():
            for t, f, p in zip(c.thresholds, c.fpr, c.tpr):
                fh.write(f"{name},{float(t)!r},{float(f)!r},{float(p)!r}\n")
        for name, c in curves.items():
            fh.write(f"# auc,{name},{float(c.auc)!r}\n")


def read_roc_csv(path):
    """Inverse of :func:`write_roc_csv`: ``({method: (t, fpr, tpr)}, {method: auc})``."""
    points: dict = {}
    aucs = {}
    with open(path) as fh:
        header = fh.readline().strip()
        if header != "method,t,fpr,tpr":
            raise ValueError(f"unexpected ROC header {header!r}")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("# auc,"):
                _, name, val = line[2:].split(",")
                aucs[name] = float(val)
                continue
            name, t, f, p = line.split(",")
            points.setdefault(name, []).append((float(t), float(f), float(p)))
    return {k: tuple(np.array(col) for col in zip(*v)) for k, v in points.items()}, aucs
