#!/usr/bin/env python3
"""Run the determined-by-spectrum verification over a parameter grid and
write one JSON line per report.

Example:
    python scripts/run_dls_grid.py --order-cap 14 --out dls14.jsonl \
        --checkpoint dls14.ck

Interrupt freely; rerunning with the same arguments resumes from the
checkpoint and reproduces the results file exactly.
"""

from __future__ import annotations

import argparse
import sys
import time

from laptree.search import run_grid


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=16)
    ap.add_argument("--qmax", type=int, default=16)
    ap.add_argument("--nmax", type=int, default=16)
    ap.add_argument("--order-cap", type=int, default=12)
    ap.add_argument("--out", default="dls_results.jsonl")
    ap.add_argument("--checkpoint", default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-prefilter", action="store_true")
    args = ap.parse_args()

    t0 = time.time()
    n_total = 0
    n_determined = 0
    worst = 0.0
    for report in run_grid(
        pmax=args.pmax,
        qmax=args.qmax,
        nmax=args.nmax,
        order_cap=args.order_cap,
        results_path=args.out,
        checkpoint_path=args.checkpoint,
        cap=max(args.order_cap, 18),
        use_prefilter=not args.no_prefilter,
        jobs=args.jobs,
    ):
        n_total += 1
        n_determined += report.verdict == "determined"
        worst = max(worst, report.elapsed)
        p, n, q = report.params
        print(
            f"H({p},{n},{q})  order {report.order:2d}  "
            f"trees {report.trees_examined:6d}  {report.verdict}  "
            f"{report.elapsed:6.2f}s",
            flush=True,
        )
    print(
        f"\n{n_determined}/{n_total} determined in {time.time() - t0:.1f}s "
        f"(slowest cell {worst:.2f}s), results in {args.out}"
    )
    return 0 if n_determined == n_total else 1


if __name__ == "__main__":
    sys.exit(main())
