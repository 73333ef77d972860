"""Command-line interface.

Subcommands: count, table, prob, bounds, oracle-check, identify. Counts
print as exact decimal strings, probabilities as exact fractions plus a
6-significant-digit decimal. Exit codes: 0 success, 1 oracle mismatch,
2 usage errors (including unknown stat names), 3 out-of-range parameters,
4 unreadable or malformed order files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction

from . import __version__
from ._backend import BACKEND_NAME
from .census import ALL_STAT_KINDS, CensusEngine, CosetQuery, StatKind, coset_size
from .identify import identify_degree, load_orders, simulate_orders
from .oracle import (
    DEFAULT_COSET_LIMIT,
    coset_cycle_types,
    oracle_sym,
    stat_holds,
)
from .numeric import factorial
from .stats import probability, sandwich_bounds

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_FILE = 4

SEED_ENV_VAR = "PERMCENSUS_SEED"
DEFAULT_SEED = 1


class _RangeError(Exception):
    """Parameter out of range; maps to exit code 3."""


def _decimal6(frac: Fraction) -> str:
    """6 significant digits of an exact fraction, without float round trips."""
    with localcontext() as ctx:
        ctx.prec = 6
        return str(Decimal(frac.numerator) / Decimal(frac.denominator))


def _fraction_str(frac: Fraction) -> str:
    return f"{frac.numerator}/{frac.denominator}"


def _parse_stat(name: str) -> StatKind:
    return StatKind.parse(name)  # ValueError maps to exit 2


def _positive(value: int, what: str) -> int:
    if value < 1:
        raise _RangeError(f"{what} must be >= 1, got {value}")
    return value


# ---------------------------------------------------------------------------
# subcommands


def _cmd_count(args) -> int:
    kind = _parse_stat(args.stat)
    q = _positive(args.q, "--q")
    n = _positive(args.n, "--n")
    k = args.k
    if not 1 <= k <= n:
        raise _RangeError(f"--k must lie in [1, n], got k={k}, n={n}")
    engine = CensusEngine()
    print(engine.stat_count(CosetQuery(kind, q, n, k)))
    return EXIT_OK


def _table_record(kind: StatKind, q: int, n: int, k: int, count: int) -> dict:
    size = coset_size(n, k)
    return {
        "stat": kind.code,
        "q": q,
        "n": n,
        "k": k,
        "count": count,
        "size": size,
        "fraction": _fraction_str(Fraction(count, size)),
    }


def _table_chunk(task) -> list[dict]:
    """Rows for a contiguous range of degrees; one engine per chunk so the
    work shards cleanly across processes."""
    stat_code, q, n_lo, n_hi, all_k = task
    kind = StatKind.parse(stat_code)
    engine = CensusEngine()
    rows = []
    for n in range(n_lo, n_hi + 1):
        ks = range(1, n + 1) if all_k else (1,)
        for k in ks:
            count = engine.stat_count(CosetQuery(kind, q, n, k))
            rows.append(_table_record(kind, q, n, k, count))
    return rows


def _cmd_table(args) -> int:
    kind = _parse_stat(args.stat)
    q = _positive(args.q, "--q")
    n_max = _positive(args.n_max, "--n-max")
    jobs = args.jobs
    if jobs < 1:
        raise _RangeError(f"--jobs must be >= 1, got {jobs}")
    if jobs == 1:
        rows = _table_chunk((kind.code, q, 1, n_max, args.all_k))
    else:
        bounds = [(n_max * i) // jobs for i in range(jobs + 1)]
        tasks = [
            (kind.code, q, lo + 1, hi, args.all_k)
            for lo, hi in zip(bounds, bounds[1:])
            if hi > lo
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = [row for chunk in pool.map(_table_chunk, tasks) for row in chunk]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        fields = ["stat", "q", "n", "k", "count", "size", "fraction"]
        print("\t".join(fields))
        for row in rows:
            print("\t".join(str(row[f]) for f in fields))
    return EXIT_OK


def _cmd_prob(args) -> int:
    kind = _parse_stat(args.stat)
    q = _positive(args.q, "--q")
    n = _positive(args.n, "--n")
    frac = probability(kind, q, n, engine=CensusEngine())
    print(f"{_fraction_str(frac)} ≈ {_decimal6(frac)}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    if args.q < 2:
        raise _RangeError(f"--q must be >= 2 for bounds, got {args.q}")
    m = _positive(args.m, "--m")
    report = sandwich_bounds(args.q, m)
    print(f"q      {report.q}")
    print(f"m      {report.m}")
    print(f"lower  {_decimal6(report.lower)}")
    print(f"exact  {_fraction_str(report.exact)} ≈ {_decimal6(report.exact)}")
    print(f"upper  {_decimal6(report.upper)}")
    print(f"holds  {report.holds}")
    return EXIT_OK


def _cmd_oracle_check(args) -> int:
    q_max = _positive(args.q_max, "--q-max")
    n_max = _positive(args.n_max, "--n-max")
    if n_max > DEFAULT_COSET_LIMIT:
        raise _RangeError(
            f"--n-max above the coset enumeration limit {DEFAULT_COSET_LIMIT}"
        )
    engine = CensusEngine()
    checked = 0
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            types = coset_cycle_types(n, k)
            size = factorial(n - k + 1)
            for q in range(1, q_max + 1):
                for kind in ALL_STAT_KINDS:
                    matched = sum(
                        c for t, c in types.items() if stat_holds(t, kind.base, q)
                    )
                    expected = size - matched if kind.complemented else matched
                    got = engine.stat_count(CosetQuery(kind, q, n, k))
                    checked += 1
                    if got != expected:
                        print(
                            f"mismatch: stat={kind.code} q={q} n={n} k={k}: "
                            f"engine={got} oracle={expected}"
                        )
                        return EXIT_MISMATCH
                    if k == 1:
                        sym = oracle_sym(kind, q, n)
                        checked += 1
                        if got != sym:
                            print(
                                f"mismatch: stat={kind.code} q={q} n={n} k=1: "
                                f"engine={got} partition-oracle={sym}"
                            )
                            return EXIT_MISMATCH
    print(f"oracle-check: {checked} comparisons, all equal")
    return EXIT_OK


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _RangeError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _cmd_identify(args) -> int:
    if args.orders is not None:
        try:
            sample = load_orders(args.orders)
        except OSError as exc:
            print(f"cannot read orders file: {exc}", file=sys.stderr)
            return EXIT_FILE
        except ValueError as exc:
            print(f"bad orders file: {exc}", file=sys.stderr)
            return EXIT_FILE
    else:
        if args.n_hidden is None:
            raise _UsageError("identify needs either --orders or --n-hidden")
        n = _positive(args.n_hidden, "--n-hidden")
        count = _positive(args.samples, "--samples")
        sample = simulate_orders(n, count, _resolve_seed(args))
    if args.n_max < 2:
        raise _RangeError(f"--n-max must be >= 2, got {args.n_max}")
    estimate = identify_degree(sample, n_max=args.n_max, engine=CensusEngine())
    print(json.dumps(estimate.to_record(), indent=2))
    return EXIT_OK


class _UsageError(Exception):
    """Bad flag combination; maps to exit code 2."""


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcensus",
        description="Exact symmetric-group census by order/cycle statistics.",
    )
    parser.add_argument(
        "--version", action="version", version=f"permcensus {__version__} ({BACKEND_NAME} kernels)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="one exact count")
    p.add_argument("--stat", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="counts for a sweep of degrees")
    p.add_argument("--stat", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--all-k", action="store_true", help="one row per (n, k), not just k=1")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--jobs", type=int, default=1, help="shard the sweep across processes")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("prob", help="exact proportion within the symmetric group")
    p.add_argument("--stat", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_prob)

    p = sub.add_parser("bounds", help="sandwich bounds around the avoidance proportion")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("oracle-check", help="recurrences vs brute force, exit 0 iff equal")
    p.add_argument("--q-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=7)
    p.set_defaults(func=_cmd_oracle_check)

    p = sub.add_parser("identify", help="estimate the degree from element orders")
    p.add_argument("--n-hidden", type=int, help="simulate a hidden symmetric group")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, help=f"overrides ${SEED_ENV_VAR}")
    p.add_argument("--orders", help="file of one decimal order per line")
    p.add_argument("--n-max", type=int, default=200, help="largest candidate degree")
    p.set_defaults(func=_cmd_identify)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # unknown stat names are usage errors; other ValueErrors are ranges
        if "unknown stat" in str(exc):
            print(str(exc), file=sys.stderr)
            return EXIT_USAGE
        print(str(exc), file=sys.stderr)
        return EXIT_RANGE
    except _RangeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_RANGE


def main() -> None:
    sys.exit(run())
