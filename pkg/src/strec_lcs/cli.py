"""Command-line entry point: ``strec-lcs solve | diff | bench``.

Exit codes: 0 ok, 1 discrepancies found, 2 usage error or infeasible input,
3 unreadable input file, 4 instance too large for the brute-force oracle,
5 allocation failure.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import os
import sys
import time

from .automaton import ConstraintPattern, EmptyPatternError
from .bench import ALGOS, BENCH_SEED, bench_one
from .difftest import SOLVERS, InstanceSpec, resolve_solvers, run_campaign, shrink
from .dp import solve_naive, solve_optimized
from .reference import OracleSizeError, brute_force_oracle, chen_chao_solve, sigma_bruteforce

EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_ORACLE = 4
EXIT_MEMORY = 5

ALGORITHMS = ("naive", "optimized", "chen-chao-1", "chen-chao-2", "brute")


class CliError(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def read_source(arg: str) -> bytes:
    """Inline text, or ``@path`` for the raw bytes of a file minus one trailing newline."""
    if arg.startswith("@"):
        try:
            with open(arg[1:], "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot read {arg[1:]}: {exc.strerror}") from exc
        if data.endswith(b"\r\n"):
            return data[:-2]
        return data[:-1] if data.endswith(b"\n") else data
    return os.fsencode(arg)


def show(data: bytes) -> str:
    return data.decode("utf-8", errors="backslashreplace")


def solve_record(x: bytes, y: bytes, p: bytes, algo: str) -> dict:
    """Run *algo* and return the output record plus the raw table, if any."""
    pattern = ConstraintPattern(p)
    t0 = time.perf_counter_ns()
    if algo in ("naive", "optimized"):
        solver = solve_naive if algo == "naive" else solve_optimized
        out = solver(x, y, pattern)
        length, witness, best, table = out.length, out.witness, out.best_state, out.tensor.values
    elif algo.startswith("chen-chao-"):
        res = chen_chao_solve(x, y, pattern, int(algo[-1]))
        length, witness, best, table = res.length, None, len(p), res.values
    else:
        res = brute_force_oracle(x, y, pattern)
        length, witness, best, table = res.length, res.witness, sigma_bruteforce(p, res.witness), None
    elapsed = time.perf_counter_ns() - t0
    return {
        "length": length,
        "witness": witness,
        "best_state": best,
        "algorithm": algo,
        "elapsed_ns": elapsed,
        "table": table,
    }


def format_table(values) -> str:
    """Planes k side by side, rows i = 1..n, columns j = 1..m within each plane."""
    n1, m1, planes = values.shape
    width = max(1, len(str(int(values.max())))) if values.size else 1
    groups = []
    for k in range(planes):
        groups.append([" ".join(str(int(v)).rjust(width) for v in values[i, 1:, k]) for i in range(1, n1)])
    gw = [max([len(f"k={k}")] + [len(row) for row in groups[k]]) for k in range(planes)]
    label = max(3, len(f"i={n1 - 1}"))
    lines = [" " * label + " | " + " | ".join(f"k={k}".center(gw[k]) for k in range(planes))]
    for i in range(1, n1):
        cells = " | ".join(groups[k][i - 1].ljust(gw[k]) for k in range(planes))
        lines.append(f"i={i}".ljust(label) + " | " + cells)
    return "\n".join(line.rstrip() for line in lines)


def cmd_solve(args, out) -> int:
    x, y, p = read_source(args.x), read_source(args.y), read_source(args.p)
    if not p:
        raise CliError(EXIT_USAGE, str(EmptyPatternError()))
    rec = solve_record(x, y, p, args.algo)
    if args.emit == "length":
        print(rec["length"], file=out)
    elif args.emit == "witness":
        if rec["witness"] is None:
            raise CliError(EXIT_USAGE, f"algorithm {args.algo} produces no witness")
        print(show(rec["witness"]), file=out)
    elif args.emit == "table":
        if rec["table"] is None:
            raise CliError(EXIT_USAGE, f"algorithm {args.algo} produces no table")
        print(format_table(rec["table"]), file=out)
    else:
        doc = {k: rec[k] for k in ("length", "witness", "best_state", "algorithm", "elapsed_ns")}
        if doc["witness"] is not None:
            doc["witness"] = show(doc["witness"])
        print(json.dumps(doc), file=out)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_diff(args, out) -> int:
    try:
        spec = InstanceSpec(args.max_n, args.max_m, args.max_r, args.alphabet, args.seed, args.trials)
        solvers = resolve_solvers(args.solvers)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc
    found = run_campaign(spec, solvers)
    print(f"{spec.trials} trials, {len(found)} discrepancies", file=out)
    if found:
        first = shrink(found[0], solvers)
        print(
            f"first minimized counterexample: x={first.x!r} y={first.y!r} p={first.p!r} "
            f"oracle={first.expected} reported={json.dumps(first.reported, sort_keys=True)}",
            file=out,
        )
    report = {
        "trials": spec.trials,
        "seed": spec.seed,
        "solvers": list(solvers),
        "discrepancies": [d.to_dict() for d in found],
    }
    print(json.dumps(report, sort_keys=True), file=out)
    return EXIT_DISCREPANCY if found else 0


def cmd_bench(args, out) -> int:
    if args.reps < 1:
        raise CliError(EXIT_USAGE, "reps must be at least 1")
    for name in args.algo:
        if name not in ALGOS:
            raise CliError(EXIT_USAGE, f"unknown algorithm {name!r}; choose from {', '.join(ALGOS)}")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "m", "r", "algo", "median_ns"])
    for n, m, r in itertools.product(args.n_list, args.m_list, args.r_list):
        try:
            rows = bench_one(n, m, r, args.alphabet, args.reps, args.algo, args.seed)
        except MemoryError:
            raise CliError(EXIT_MEMORY, f"allocation failed for n={n} m={m} r={r}") from None
        for row in rows:
            writer.writerow([row[k] for k in ("n", "m", "r", "algo", "median_ns")])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strec-lcs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one instance")
    s.add_argument("--x", required=True, help="first sequence, or @file")
    s.add_argument("--y", required=True, help="second sequence, or @file")
    s.add_argument("--p", required=True, help="forbidden substring, or @file")
    s.add_argument("--algo", choices=ALGORITHMS, default="optimized")
    s.add_argument("--emit", choices=("length", "witness", "json", "table"), default="length")
    s.set_defaults(func=cmd_solve)

    d = sub.add_parser("diff", help="differential campaign against the brute-force oracle")
    d.add_argument("--trials", type=int, default=10_000)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--max-n", type=int, default=10)
    d.add_argument("--max-m", type=int, default=10)
    d.add_argument("--max-r", type=int, default=4)
    d.add_argument("--alphabet", default="abc")
    d.add_argument("--solvers", default="naive,optimized", help=f"comma list from {','.join(SOLVERS)}")
    d.set_defaults(func=cmd_diff)

    b = sub.add_parser("bench", help="CSV timings over a grid of sizes")
    b.add_argument("--n-list", type=_int_list, default=[500, 1000])
    b.add_argument("--m-list", type=_int_list, default=[500])
    b.add_argument("--r-list", type=_int_list, default=[8])
    b.add_argument("--alphabet", default="ab")
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--algo", type=lambda s: [a for a in s.split(",") if a], default=["optimized"])
    b.add_argument("--seed", type=int, default=BENCH_SEED)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"strec-lcs: {exc}", file=sys.stderr)
        return exc.code
    except EmptyPatternError as exc:
        print(f"strec-lcs: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleSizeError as exc:
        print(f"strec-lcs: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except MemoryError:
        print("strec-lcs: allocation failed", file=sys.stderr)
        return EXIT_MEMORY


if __name__ == "__main__":
    sys.exit(main())
