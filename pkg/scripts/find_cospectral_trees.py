#!/usr/bin/env python3
"""Group all free trees of each order by exact Laplacian characteristic
polynomial and report the cospectral classes.

The smallest non-isomorphic cospectral pairs show up at order 11.  Two of
the three classes there are double starlike (exactly two hubs), but with
pendant paths rather than all leaves on the hubs, so none of them touches
the H(p,n,q) family.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import defaultdict

from laptree.enumeration import enumerate_free_trees
from laptree.graphs import graph6_encode
from laptree.spectra import laplacian_charpoly


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-order", type=int, default=4)
    ap.add_argument("--max-order", type=int, default=13)
    args = ap.parse_args()

    for n in range(args.min_order, args.max_order + 1):
        t0 = time.time()
        classes = defaultdict(list)
        total = 0
        for t in enumerate_free_trees(n, cap=max(n, 18)):
            total += 1
            classes[laplacian_charpoly(t).coefficients].append(t)
        shared = {k: v for k, v in classes.items() if len(v) > 1}
        print(
            f"order {n:2d}: {total:6d} trees, {len(classes):6d} spectra, "
            f"{len(shared):3d} cospectral classes  ({time.time()-t0:.1f}s)"
        )
        for poly, trees in sorted(shared.items()):
            g6 = " ".join(graph6_encode(t) for t in trees)
            degs = trees[0].degree_multiset()
            print(f"    {g6}   degrees {degs}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
