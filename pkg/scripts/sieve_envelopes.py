#!/usr/bin/env python3
"""Compare the brute-force large-sieve sum against three candidate envelopes.

Draws seeded random coefficient vectors and prints, for each trial, the
exact left-hand side over the quadratic-polynomial moduli of one dyadic
trace window next to the envelopes it is expected to track.  Ratios above
1 against the tightest envelope are normal at small scale (no lower-order
terms are included); the point is how the three bounds order themselves.
"""

import argparse
import sys

from isoclass.sieve_lab import random_instance, sieve_envelopes, sieve_lhs


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=1009)
    ap.add_argument("--r", type=int, default=8, dest="R")
    ap.add_argument("--n", type=int, default=128, dest="N")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--trials", type=int, default=5)
    args = ap.parse_args()

    print("q,R,N,seed,lhs,env_paper,env_classical,env_conjecture")
    for k in range(args.trials):
        seed = args.seed + k
        inst = random_instance(args.q, args.R, args.N, seed=seed)
        lhs = sieve_lhs(inst)
        env = sieve_envelopes(inst)
        print(f"{args.q},{args.R},{args.N},{seed},{lhs:.12g},"
              f"{env.paper:.12g},{env.classical:.12g},{env.conjecture:.12g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
