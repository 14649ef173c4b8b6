"""Replicated RMSE / MAE / 2,inf table for every method on graphons 1-4.

    python scripts/reproduce_table2.py --n 2000 --reps 20 --out table2.csv
"""

import argparse

from nbsmooth.evaluation import METHODS, run_benchmark, write_reports_csv
from nbsmooth.graphons import table1_graphon


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--reps", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--methods", default=",".join(METHODS))
    ap.add_argument("--out", default="table2.csv")
    args = ap.parse_args()

    methods = args.methods.split(",")
    reports = []
    for g in (1, 2, 3, 4):
        reports += run_benchmark(table1_graphon(g, args.n), args.n, methods, args.reps, args.seed)
    write_reports_csv(reports, args.out)

    print(f"{'method':>13s}" + "".join(f"   g{g} rmse   mae " for g in (1, 2, 3, 4)))
    for m in methods:
        rows = [r for r in reports if r.method == m]
        print(f"{m:>13s}" + "".join(f"  {100 * r.rmse_mean:7.2f} {100 * r.mae_mean:6.2f}" for r in rows))


if __name__ == "__main__":
    main()
