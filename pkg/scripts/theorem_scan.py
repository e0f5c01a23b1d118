#!/usr/bin/env python3
"""Scan dyadic-window averages of the normalized class count over one field.

Builds the full trace table once, then reports the window average, the
theorem-style envelope and their ratio for every dyadic R up to the Hasse
bound.  Output is the same CSV the `isoclass theorem` subcommand emits,
one row per window.
"""

import argparse
import math
import sys

from isoclass.census import census
from isoclass.experiments import WindowSpec, theorem_window_average


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=10007, help="prime field size")
    ap.add_argument("--mirror", action="store_true",
                    help="average over both signs of the trace")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    table = census(args.p, threads=args.threads)
    T = math.isqrt(4 * args.p)
    print("q,R,count,sum_iota,avg_iota,envelope,ratio")
    R = 2
    while 2 * R <= T and R * R < args.p:
        res = theorem_window_average(WindowSpec(args.p, R), table,
                                     mirror=args.mirror)
        print(f"{args.p},{R},{res.params['count']},"
              f"{res.params['sum_iota']:.12g},{res.statistic:.12g},"
              f"{res.envelope:.12g},{res.ratio:.12g}")
        R *= 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
