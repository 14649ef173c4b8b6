"""Neighborhood smoothing estimation of network edge probabilities.

Estimators take a symmetric 0/1 adjacency matrix (numpy array) and return a
symmetric matrix of edge probabilities in [0, 1].
"""

from .baselines import (
    BlockAssignment,
    block_histogram,
    fit_spectral_blocks,
    oracle_blocks,
    sas_svd,
    sort_and_smooth,
    svt_topk,
    usvt,
)
from .evaluation import MetricReport, bandwidth_sweep, compute_metrics, run_benchmark, run_replications
from .graphons import GraphonSpec, eval_graphon, make_blockmodel_spec, table1_graphon
from .linkpred import RocCurve, apply_mask, jaccard_scores, roc_curve
from .model import build_probability_matrix, sample_adjacency, sample_latent, simulate
from .nbs import (
    NeighborhoodSet,
    dissimilarity_matrix,
    estimate_nbs,
    select_neighborhoods,
    slice_products,
    smooth,
    symmetrize,
)

__version__ = "0.1.0"
