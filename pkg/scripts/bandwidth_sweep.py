"""MSE of neighborhood smoothing across bandwidth constants C in {1/8, ..., 8}."""

import argparse

from nbsmooth.evaluation import bandwidth_sweep, write_reports_csv
from nbsmooth.graphons import table1_graphon


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--reps", type=int, default=10)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", default="sweep.csv")
    args = ap.parse_args()

    grid = [2.0 ** e for e in range(-3, 4)]
    reports = []
    for g in (1, 2, 3, 4):
        rows = bandwidth_sweep(table1_graphon(g, args.n), args.n, grid, args.reps, args.seed)
        reports += rows
        best = min(r.mse_mean for r in rows)
        print(f"graphon {g}: " + "  ".join(f"C={r.C:g} {r.mse_mean:.2e} ({r.mse_mean / best:.2f}x)" for r in rows))
    write_reports_csv(reports, args.out)


if __name__ == "__main__":
    main()
