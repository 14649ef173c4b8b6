"""Command-line entry point: ``nbsmooth {simulate,estimate,bench,sweep,linkpred}``."""

from __future__ import annotations

import argparse
import logging
import sys

import numpy as np

from . import evaluation, fileio, graphons, linkpred
from ._kernels import set_threads
from .errors import NBSError
from .model import check_adjacency, simulate

log = logging.getLogger("nbsmooth")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
SCORE_METHODS = ("jaccard", "truth")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _csv_list(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def _float_list(text):
    try:
        return [float(t) for t in _csv_list(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {text!r}") from None


def _check_methods(methods, extra=()):
    valid = tuple(evaluation.METHODS) + tuple(extra)
    bad = [m for m in methods if m not in valid]
    if bad:
        raise UsageError(f"unknown method(s) {', '.join(bad)}; valid: {', '.join(valid)}")


def _graphon(ident, n):
    try:
        return graphons.from_identifier(ident, n)
    except NBSError as exc:
        if ident.startswith("blockmodel:"):
            raise
        raise UsageError(str(exc)) from None


def _estimator_params(args):
    params = {}
    for key in ("C", "k", "K", "eta", "bins"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    return params


def _read_adjacency(path, fmt, indexing="zero"):
    if fmt == "edgelist":
        with open(path) as fh:
            return fileio.parse_edge_list(fh, indexing)
    return check_adjacency(fileio.read_matrix_csv(path))


def cmd_simulate(args):
    spec = _graphon(args.graphon, args.n)
    xi, P, A = simulate(spec, args.n, args.seed)
    fileio.write_matrix_csv(A, args.adj_out)
    if args.prob_out:
        fileio.write_matrix_csv(P, args.prob_out)
    if args.latent_out:
        fileio.write_matrix_csv(xi, args.latent_out)
    log.info("simulated graphon %s, n=%d, %d edges", spec.label, args.n, int(A.sum() // 2))


def cmd_estimate(args):
    _check_methods([args.method])
    A = _read_adjacency(args.input, args.format, args.indexing)
    xi = fileio.read_matrix_csv(args.latent).ravel() if args.latent else None
    Phat = evaluation.estimate(args.method, A, xi, _estimator_params(args))
    fileio.write_matrix_csv(Phat, args.out)


def cmd_bench(args):
    _check_methods(args.methods)
    reports = []
    for ident in args.graphons:
        spec = _graphon(ident, args.n)
        reports += evaluation.run_benchmark(spec, args.n, args.methods, args.reps, args.seed,
                                            _estimator_params(args))
    evaluation.write_reports_csv(reports, args.out)
    for r in reports:
        print(f"{r.method:>12s} graphon {r.graphon}: rmse {r.rmse_mean:.5f} ({r.rmse_se:.5f}) "
              f"mae {r.mae_mean:.5f} twoinf {r.twoinf_mean:.5f}")


def cmd_sweep(args):
    spec = _graphon(args.graphon, args.n)
    reports = evaluation.bandwidth_sweep(spec, args.n, args.C_grid, args.reps, args.seed)
    evaluation.write_reports_csv(reports, args.out)
    for r in reports:
        print(f"C={r.C:g}: mse {r.mse_mean:.6g}")


def cmd_linkpred(args):
    _check_methods(args.methods, SCORE_METHODS)
    A_true = _read_adjacency(args.input, args.format, args.indexing)
    A_obs, M = linkpred.apply_mask(A_true, args.p, args.seed)
    curves = {}
    for m in args.methods:
        if m == "jaccard":
            scores = linkpred.jaccard_scores(A_obs)
        elif m == "truth":
            if not args.prob:
                raise UsageError("method 'truth' needs --prob")
            scores = fileio.read_matrix_csv(args.prob)
        else:
            scores = evaluation.estimate(m, A_obs, None, _estimator_params(args))
        curves[m] = linkpred.roc_curve(scores, A_true, M)
        print(f"{m}: auc {curves[m].auc:.5f}")
    linkpred.write_roc_csv(curves, args.roc_out)


def build_parser():
    p = _Parser(prog="nbsmooth", description=__doc__)
    p.add_argument("--threads", type=int, default=None,
                   help="cap kernel worker threads (default: NBS_THREADS or all cores)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("simulate", help="sample a network from a graphon")
    s.add_argument("--graphon", required=True, help="1..4 or blockmodel:<json file>")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--adj-out", required=True)
    s.add_argument("--prob-out")
    s.add_argument("--latent-out")
    s.set_defaults(func=cmd_simulate)

    def estimator_flags(q):
        q.add_argument("--C", type=float, help="nbs bandwidth constant (default 1)")
        q.add_argument("--k", type=int, help="svtk rank (default ceil(n^(1/3)))")
        q.add_argument("--K", type=int, help="block count for sbm-* (default floor(sqrt n))")
        q.add_argument("--eta", type=float, help="usvt threshold slack (default 0.02)")
        q.add_argument("--bins", type=int, help="sort-and-smooth bins (default ceil(sqrt n))")

    def input_flags(q):
        q.add_argument("--in", dest="input", required=True)
        q.add_argument("--format", choices=("csv", "edgelist"), default="csv")
        q.add_argument("--indexing", choices=("zero", "one"), default="zero",
                       help="node id base for edge lists")

    s = sub.add_parser("estimate", help="estimate P from an adjacency matrix")
    s.add_argument("--method", required=True)
    input_flags(s)
    estimator_flags(s)
    s.add_argument("--latent", help="latent-position CSV (sbm-oracle only)")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_estimate)

    s = sub.add_parser("bench", help="replicated error table over graphons and methods")
    s.add_argument("--graphons", type=_csv_list, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--reps", type=int, required=True)
    s.add_argument("--methods", type=_csv_list, required=True)
    s.add_argument("--seed", type=int, default=0)
    estimator_flags(s)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("sweep", help="NBS error across bandwidth constants")
    s.add_argument("--graphon", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--C-grid", dest="C_grid", type=_float_list, required=True)
    s.add_argument("--reps", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("linkpred", help="mask edges at random and score the hidden pairs")
    input_flags(s)
    s.add_argument("--p", type=float, default=0.1, help="fraction of pairs hidden")
    s.add_argument("--methods", type=_csv_list, required=True,
                   help="estimator ids, 'jaccard', or 'truth' (with --prob)")
    s.add_argument("--prob", help="true probability matrix CSV for the 'truth' scores")
    s.add_argument("--seed", type=int, default=0)
    estimator_flags(s)
    s.add_argument("--roc-out", required=True)
    s.set_defaults(func=cmd_linkpred)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        set_threads(args.threads)
        args.func(args)
    except UsageError as exc:
        print(f"nbsmooth {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NBSError, ValueError, OSError, np.linalg.LinAlgError) as exc:
        print(f"nbsmooth {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
