"""Command-line front end.

Subcommands:

* ``counts``      — closed-form counts for one type or a whole range
* ``verify``      — brute-force-vs-closed-form sweep (exit 1 on mismatch)
* ``cover-check`` — randomized covering-group identity suite (JSON report)
* ``enumerate``   — stream every real m-Arf function of a type as JSON lines

Exit codes: 0 success, 1 verification failure, 2 usage error.  The
environment variable ``ARFSPIN_THREADS`` caps parallelism of the verify
sweep.  Output is deterministic: the same flags (and seed) produce
byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .arf import ArfValidationError
from .cover import run_identity_suite
from .enumeration import (
    CSV_HEADER,
    closed_form_count,
    enumerate_real_arf_functions,
    verify_range,
)
from .errors import BranchContinuationError, OutOfScopeError
from .topology import TopologicalType, is_valid_topological_type

__all__ = ["main"]


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _threads_from_env() -> int:
    raw = os.environ.get("ARFSPIN_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"ARFSPIN_THREADS must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"ARFSPIN_THREADS must be at least 1, got {value}")
    return value


def _count_rows(ttype: TopologicalType, m: int) -> list[dict]:
    return [
        {
            "g": ttype.g,
            "k": ttype.k,
            "eps": ttype.eps,
            "m": m,
            "delta": delta,
            "N": closed_form_count(ttype, m, delta),
        }
        for delta in (0, 1)
    ]


def _cmd_counts(args: argparse.Namespace) -> int:
    single = all(v is not None for v in (args.g, args.k, args.eps, args.m))
    ranged = args.g_max is not None and args.m_max is not None
    if single == ranged:
        print(
            "error: provide either --g --k --eps --m or --g-max --m-max",
            file=sys.stderr,
        )
        return 2
    rows: list[dict] = []
    if single:
        if args.m < 2:
            print(f"error: m must be at least 2, got {args.m}", file=sys.stderr)
            return 2
        rows = _count_rows(TopologicalType(args.g, args.k, args.eps), args.m)
    else:
        if args.g_max < 2 or args.m_max < 2:
            print("error: --g-max and --m-max must be at least 2", file=sys.stderr)
            return 2
        for g in range(2, args.g_max + 1):
            for eps in (0, 1):
                for k in range(0, g + 2):
                    if not is_valid_topological_type(g, k, eps):
                        continue
                    for m in range(2, args.m_max + 1):
                        rows.extend(_count_rows(TopologicalType(g, k, eps), m))
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        lines = ["g,k,eps,m,delta,N"]
        lines += [
            f"{r['g']},{r['k']},{r['eps']},{r['m']},{r['delta']},{r['N']}" for r in rows
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    workers = _threads_from_env()
    reports = verify_range(args.g_max, args.m_max, workers=workers)
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    else:
        text = "\n".join([CSV_HEADER] + [r.to_csv_row() for r in reports]) + "\n"
    _emit(text, args.output)
    mismatches = [r for r in reports if not r.match]
    for r in mismatches:
        print(
            f"mismatch at g={r.ttype.g} k={r.ttype.k} eps={r.ttype.eps} "
            f"m={r.m} n={r.n_used}: brute force even/odd = "
            f"{r.even_count}/{r.odd_count}, closed form = "
            f"{r.closed_form_even}/{r.closed_form_odd}",
            file=sys.stderr,
        )
    return 1 if mismatches else 0


def _cmd_cover_check(args: argparse.Namespace) -> int:
    if args.tol <= 0.0:
        print(f"error: tolerance must be positive, got {args.tol}", file=sys.stderr)
        return 2
    if args.samples < 1:
        print(f"error: samples must be at least 1, got {args.samples}", file=sys.stderr)
        return 2
    if args.m < 2:
        print(f"error: m must be at least 2, got {args.m}", file=sys.stderr)
        return 2
    results = run_identity_suite(args.m, samples=args.samples, seed=args.seed, tol=args.tol)
    _emit(json.dumps([r.to_dict() for r in results], indent=2) + "\n", args.output)
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(
            f"identity check failed: {r.identity} (max residual {r.max_residual:.3e})",
            file=sys.stderr,
        )
    return 1 if failed else 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.m < 2:
        print(f"error: m must be at least 2, got {args.m}", file=sys.stderr)
        return 2
    ttype = TopologicalType(args.g, args.k, args.eps)
    lines = [
        json.dumps(fn.to_dict())
        for fn in enumerate_real_arf_functions(ttype, args.m, n=args.n)
    ]
    _emit("\n".join(lines) + "\n" if lines else "", args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arfspin",
        description="Enumerate and count real m-Arf functions on Klein surfaces "
        "and check the covering-group identities behind the counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    counts = sub.add_parser(
        "counts", help="closed-form counts, for one type or a whole range"
    )
    counts.add_argument("--g", type=int, help="genus (single-cell mode)")
    counts.add_argument("--k", type=int, help="number of ovals")
    counts.add_argument("--eps", type=int, help="1 separating, 0 non-separating")
    counts.add_argument("--m", type=int, help="spin modulus")
    counts.add_argument("--g-max", type=int, dest="g_max", help="range mode: max genus")
    counts.add_argument("--m-max", type=int, dest="m_max", help="range mode: max modulus")
    counts.add_argument("--format", choices=("csv", "json"), default="csv")
    counts.add_argument("--output", help="write to this path instead of stdout")
    counts.set_defaults(func=_cmd_counts)

    verify = sub.add_parser(
        "verify", help="brute-force counts against closed forms over a range"
    )
    verify.add_argument("--g-max", type=int, dest="g_max", required=True)
    verify.add_argument("--m-max", type=int, dest="m_max", required=True)
    verify.add_argument("--format", choices=("csv", "json"), default="csv")
    verify.add_argument("--output", help="write to this path instead of stdout")
    verify.set_defaults(func=_cmd_verify)

    cover = sub.add_parser(
        "cover-check", help="randomized covering-group identity suite"
    )
    cover.add_argument("--m", type=int, required=True, help="cover degree")
    cover.add_argument("--samples", type=int, default=1000)
    cover.add_argument("--seed", type=int, default=0)
    cover.add_argument("--tol", type=float, default=1e-9)
    cover.add_argument("--output", help="write to this path instead of stdout")
    cover.set_defaults(func=_cmd_cover_check)

    enum = sub.add_parser(
        "enumerate", help="stream all real m-Arf functions of a type as JSON lines"
    )
    enum.add_argument("--g", type=int, required=True)
    enum.add_argument("--k", type=int, required=True)
    enum.add_argument("--eps", type=int, required=True)
    enum.add_argument("--m", type=int, required=True)
    enum.add_argument("--n", type=int, default=None, help="number of invariant curves")
    enum.add_argument("--output", help="write to this path instead of stdout")
    enum.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except BranchContinuationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OutOfScopeError, ArfValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
