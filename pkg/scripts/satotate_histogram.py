#!/usr/bin/env python3
"""Histogram of normalized-trace mass against the semicircle density.

Splits [-1, 1] into equal bins, measures the normalized class-count mass
in each bin of t/(2*sqrt(q)), and prints it next to the self-calibrated
semicircle prediction so the two columns can be plotted side by side.
"""

import argparse
import sys

from isoclass.census import census
from isoclass.experiments import sato_tate_compare


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=10007, help="prime field size")
    ap.add_argument("--bins", type=int, default=16)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    table = census(args.p, threads=args.threads)
    print("q,alpha,beta,statistic,prediction,ratio")
    for k in range(args.bins):
        a = -1.0 + 2.0 * k / args.bins
        b = -1.0 + 2.0 * (k + 1) / args.bins
        res = sato_tate_compare(args.p, a, b, table)
        print(f"{args.p},{a:.12g},{b:.12g},{res.statistic:.12g},"
              f"{res.envelope:.12g},{res.ratio:.12g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
