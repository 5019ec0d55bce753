#!/usr/bin/env python3
"""Sweep the eigenvalue bound checks over every free tree up to a given
order and print how much slack each bound leaves.

A tight run (min slack 0) is expected for the d1+1 lower bound, attained by
stars.
"""

from __future__ import annotations

import argparse
import sys

from laptree.enumeration import enumerate_free_trees
from laptree.lemmas import (
    check_lemma6_mu1_bounds,
    check_lemma7_mu2,
    check_lemma8_mu3,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=12)
    args = ap.parse_args()

    rows = [
        ("mu1 lower/upper", lambda t: check_lemma6_mu1_bounds(t), 3),
        ("mu2 >= d2", lambda t: check_lemma7_mu2(t), 3),
        ("mu3 >= d3-1", lambda t: check_lemma8_mu3(t), 4),
    ]
    for label, checker, min_order in rows:
        checked = 0
        failed = 0
        min_low = float("inf")
        min_high = float("inf")
        for n in range(max(2, min_order), args.max_order + 1):
            for t in enumerate_free_trees(n):
                c = checker(t)
                checked += 1
                failed += not c.passed
                min_low = min(min_low, c.slack_low)
                min_high = min(min_high, c.slack_high)
        high = "-" if min_high == float("inf") else f"{min_high:.6f}"
        print(
            f"{label:18s} trees {checked:6d}  failures {failed}  "
            f"min lower slack {min_low:.6f}  min upper slack {high}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
