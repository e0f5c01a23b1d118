"""Command-line entry point.

One binary, nine subcommands, flags only (no environment configuration):
census, theorem, satotate, charsum, lfunc, sieve, gauss, divisor, psi.
Every output file embeds the full parameter set (CSV ``#`` header lines,
JSON ``params`` object); identical argv produces byte-identical output
for any --threads value.

Exit codes: 0 success, 2 invalid arguments, 3 domain error, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from isoclass import census as census_mod
from isoclass import characters, experiments, lfunctions, quadforms, sieve_lab
from isoclass.errors import DomainError

__all__ = ["main", "run"]


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _write_csv(path: str, params: dict, header: list[str], rows: list[list]) -> None:
    lines = [f"# {k}={_fmt(v)}" for k, v in params.items()]
    lines.append(",".join(header))
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_json(path: str, command: str, params: dict, header: list[str],
                rows: list[list]) -> None:
    def jsonable(v):
        if isinstance(v, Fraction):
            return f"{v.numerator}/{v.denominator}"
        if isinstance(v, float):
            return float(f"{v:.12g}")
        return v

    doc = {
        "command": command,
        "params": {k: jsonable(v) for k, v in params.items()},
        "rows": [{h: jsonable(v) for h, v in zip(header, row)} for row in rows],
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _require_prime(p: int) -> None:
    from sympy import isprime

    if not isprime(p):
        raise DomainError("p must be prime")


def _ordinary_traces(p: int):
    T = math.isqrt(4 * p)
    return [t for t in range(1, T + 1) if t % p != 0 and t * t < 4 * p]


def _cmd_census(args) -> tuple[dict, list[str], list[list], str]:
    _require_prime(args.p)
    table = census_mod.census(args.p, threads=args.threads)
    T = math.isqrt(4 * args.p)
    rows = [[t, table.count(t), census_mod.iota(table, t)] for t in range(-T, T + 1)]
    params = {"p": args.p, "total": table.total,
              "model_count": census_mod.model_count_check(table)}
    return params, ["t", "I", "iota"], rows, f"census p={args.p}: {table.total} classes"


def _cmd_theorem(args) -> tuple[dict, list[str], list[list], str]:
    _require_prime(args.p)
    table = census_mod.census(args.p, threads=args.threads)
    w = experiments.WindowSpec(q=args.p, R=args.r)
    row = experiments.theorem_window_average(w, table, mirror=args.mirror)
    rows = [[args.p, args.r, row.params["count"], row.params["sum_iota"],
             row.statistic, row.envelope, row.ratio]]
    params = {"p": args.p, "R": args.r, "mirror": args.mirror}
    header = ["q", "R", "count", "sum_iota", "avg_iota", "envelope", "ratio"]
    return params, header, rows, f"theorem p={args.p} R={args.r}: ratio={row.ratio:.4g}"


def _cmd_satotate(args) -> tuple[dict, list[str], list[list], str]:
    _require_prime(args.p)
    table = census_mod.census(args.p, threads=args.threads)
    row = experiments.sato_tate_compare(args.p, args.alpha, args.beta, table)
    rows = [[args.p, args.alpha, args.beta, row.statistic,
             row.params["mu"], row.params["c"], row.ratio]]
    params = {"p": args.p, "alpha": args.alpha, "beta": args.beta}
    header = ["q", "alpha", "beta", "statistic", "mu", "c", "ratio"]
    return params, header, rows, f"satotate p={args.p}: ratio={row.ratio:.4g}"


def _cmd_charsum(args) -> tuple[dict, list[str], list[list], str]:
    res = characters.avg_max_char_sum(args.q, args.r, args.l, mode=args.mode)
    rows = [[args.q, args.r, args.l, res.avg, res.envelope,
             res.avg / res.envelope if res.envelope > 0 else math.nan]]
    params = {"q": args.q, "R": args.r, "L": args.l, "mode": args.mode,
              "l_threshold_ok": res.l_ok}
    header = ["q", "R", "L", "avg_max", "envelope", "ratio"]
    return params, header, rows, f"charsum q={args.q}: avg_max={res.avg:.6g}"


def _cmd_lfunc(args) -> tuple[dict, list[str], list[list], str]:
    _require_prime(args.p)
    rows = []
    for t in _ordinary_traces(args.p):
        rec = lfunctions.l_star_and_full(args.p, t)
        h = characters.CharacterHandle(args.p, t, "field_disc")
        trunc = lfunctions.l_truncated(h, args.n)
        rows.append([args.p, t, rec.f, rec.D_star, rec.L_star, rec.euler_product,
                     rec.L_full, trunc, abs(trunc - rec.L_full)])
    params = {"p": args.p, "N": args.n}
    header = ["q", "t", "f", "Dstar", "L_star", "euler", "L_full", "L_trunc", "residual"]
    return params, header, rows, f"lfunc p={args.p}: {len(rows)} traces"


def _cmd_sieve(args) -> tuple[dict, list[str], list[list], str]:
    inst = sieve_lab.random_instance(args.q, args.r, args.n, args.seed)
    lhs = sieve_lab.sieve_lhs(inst)
    env = sieve_lab.sieve_envelopes(inst)
    rows = [[args.q, args.r, args.n, args.seed, lhs,
             env.paper, env.classical, env.conjecture]]
    params = {"q": args.q, "R": args.r, "N": args.n, "seed": args.seed, "Z": inst.Z}
    header = ["q", "R", "N", "seed", "lhs", "env_paper", "env_classical", "env_conjecture"]
    return params, header, rows, f"sieve q={args.q}: lhs={lhs:.6g}"


def _smallest_coprime(r: int) -> int:
    v = 2
    while math.gcd(v, r) != 1:
        v += 1
    return v


def _cmd_gauss(args) -> tuple[dict, list[str], list[list], str]:
    rows = []
    for r in range(1, args.rmax + 1):
        tau = characters.gauss_sum(r)
        res = characters.gauss_twist_residual(_smallest_coprime(r), r)
        rows.append([r, abs(tau), math.sqrt(r), res])
    params = {"rmax": args.rmax}
    return params, ["r", "abs_tau", "sqrt_r", "residual"], rows, f"gauss r<={args.rmax}"


def _cmd_divisor(args) -> tuple[dict, list[str], list[list], str]:
    chk = sieve_lab.garaev_check(args.nu, args.m)
    rows = [[args.nu, args.m, chk.lhs, chk.rhs, chk.ok]]
    params = {"nu": args.nu, "M": args.m}
    return params, ["nu", "M", "lhs", "rhs", "ok"], rows, \
        f"divisor nu={args.nu} M={args.m}: ok={chk.ok}"


def _cmd_psi(args) -> tuple[dict, list[str], list[list], str]:
    _require_prime(args.p)
    rows = []
    for t in _ordinary_traces(args.p):
        psi = quadforms.psi_derived(args.p, t)
        from isoclass.arith import conductor_split

        f = conductor_split(t * t - 4 * args.p).f
        env = math.log(math.log(f + 2)) ** 2
        rows.append([args.p, t, f, psi, env, float(psi) / env])
    params = {"p": args.p}
    return params, ["q", "t", "f", "psi", "loglog_env", "ratio"], rows, \
        f"psi p={args.p}: {len(rows)} traces"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isoclass")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--out", required=True)

    sp = sub.add_parser("census", help="full trace table t -> I(t)")
    sp.add_argument("--p", type=int, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_census)

    sp = sub.add_parser("theorem", help="dyadic-window average of iota")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--mirror", action="store_true")
    common(sp)
    sp.set_defaults(handler=_cmd_theorem)

    sp = sub.add_parser("satotate", help="Sato-Tate window comparison")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--beta", type=float, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_satotate)

    sp = sub.add_parser("charsum", help="averaged window maxima of character sums")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--mode", choices=["paper_literal", "field_disc"],
                    default="paper_literal")
    common(sp)
    sp.set_defaults(handler=_cmd_charsum)

    sp = sub.add_parser("lfunc", help="L(1) values per ordinary trace")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=100_000, help="truncation length")
    common(sp)
    sp.set_defaults(handler=_cmd_lfunc)

    sp = sub.add_parser("sieve", help="brute-force large-sieve sum and envelopes")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_sieve)

    sp = sub.add_parser("gauss", help="Gauss sums and twist-identity residuals")
    sp.add_argument("--rmax", type=int, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_gauss)

    sp = sub.add_parser("divisor", help="multiple-divisor second-moment check")
    sp.add_argument("--nu", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_divisor)

    sp = sub.add_parser("psi", help="derived conductor weight per ordinary trace")
    sp.add_argument("--p", type=int, required=True)
    common(sp)
    sp.set_defaults(handler=_cmd_psi)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        params, header, rows, summary = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    # --threads is execution configuration, not a parameter: it must not
    # change the output bytes, so it is deliberately not embedded.
    try:
        if args.format == "csv":
            _write_csv(args.out, params, header, rows)
        else:
            _write_json(args.out, args.command, params, header, rows)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    print(f"{summary} -> {args.out}")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
