"""Command-line entry point.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import DomainError
from .lattice import RenderFormat, enumerate_paths, render_paths
from .partial_sums import PartialSumTable, table_csv
from .schreier import CountQuery, enumerate_colored, s_colored
from .sequences import GibonacciSeed
from .verify import DEFAULT_SEEDS, RunConfig, iter_failures, verify_all

EXIT_DOMAIN = 1
EXIT_VERIFY = 3


def _seed_arg(text: str) -> GibonacciSeed:
    try:
        g1, g2 = (int(part) for part in text.split(","))
        return GibonacciSeed(g1, g2)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"expected G1,G2 with positive integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--g1", type=int, default=1, help="G_1 (default 1)")
    common.add_argument("--g2", type=int, default=1, help="G_2 (default 1)")

    kn = argparse.ArgumentParser(add_help=False)
    kn.add_argument("--k", type=int, required=True)
    kn.add_argument("--n", type=int, required=True)

    parser = argparse.ArgumentParser(
        prog="gibonacci-sums",
        description="Iterated partial sums of Gibonacci sequences and colored Schreier sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("a", parents=[common, kn], help="print a_k'(n)")
    sub.add_parser("s", parents=[common, kn], help="print s_k'(n)")
    p = sub.add_parser("table", parents=[common, kn], help="CSV of a_k'(n) for k<=K, n<=N")
    p.add_argument("--format", choices=["csv"], default="csv")
    sub.add_parser("enumerate-sets", parents=[common, kn], help="colored Schreier sets as JSON lines")
    sub.add_parser("enumerate-paths", parents=[common, kn], help="colored lattice paths as JSON lines")
    p = sub.add_parser("render", parents=[common, kn], help="draw the lattice paths for k, n")
    p.add_argument("--format", choices=[f.value for f in RenderFormat], default="ascii")
    p = sub.add_parser("verify", help="check every identity over a parameter grid")
    p.add_argument("--seed", dest="seeds", type=_seed_arg, action="append",
                   help="seed as G1,G2; repeatable (default: 1,1 1,2 3,2 7,5)")
    p.add_argument("--max-k", type=int, default=12)
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--oracle-max-n", type=int, default=16)
    p.add_argument("--verbose", "-v", action="store_true", help="list every failure")
    return parser


def _json_lines(items, out) -> None:
    total = 0
    for item in items:
        out.write(json.dumps(item.to_json(), separators=(", ", ": ")) + "\n")
        total += 1
    out.write(json.dumps({"total": total}) + "\n")


def _run(args, out) -> int:
    if args.command == "verify":
        config = RunConfig(
            seeds=tuple(args.seeds or DEFAULT_SEEDS),
            max_k=args.max_k,
            max_n=args.max_n,
            oracle_max_n=args.oracle_max_n,
        )
        reports = verify_all(config)
        for rep in reports:
            out.write(rep.summary() + "\n")
        failed = [rep for rep in reports if not rep.passed]
        if args.verbose:
            for name, f in iter_failures(reports):
                out.write(f"  {name}: seed={f.seed} k={f.k} n={f.n} expected={f.expected} actual={f.actual}\n")
        out.write(f"{len(reports) - len(failed)}/{len(reports)} identities hold\n")
        return EXIT_VERIFY if failed else 0

    seed = GibonacciSeed(args.g1, args.g2)
    if args.command == "a":
        out.write(f"{PartialSumTable(seed).value(args.k, args.n)}\n")
    elif args.command == "s":
        out.write(f"{s_colored(CountQuery(args.n, args.k, seed))}\n")
    elif args.command == "table":
        out.write(table_csv(PartialSumTable(seed), args.k, args.n))
    elif args.command == "enumerate-sets":
        _json_lines(enumerate_colored(CountQuery(args.n, args.k, seed)), out)
    elif args.command == "enumerate-paths":
        _json_lines(enumerate_paths(seed, args.k, args.n), out)
    elif args.command == "render":
        out.write(render_paths(enumerate_paths(seed, args.k, args.n), args.format))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args, sys.stdout)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
