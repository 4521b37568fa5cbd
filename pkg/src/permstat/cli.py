"""Command-line front end: ``permstat <subcommand> [options]``.

Every subcommand is a thin adapter over the library and prints csv, json or
plain text.  Exit codes: 0 ok, 1 usage or parse error, 2 budget guard,
3 invariant violation (two computations that must agree did not).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from fractions import Fraction

from . import asymptotics, exact, perm
from .bench import ALGORITHMS, DEFAULT_MAX_N, benchmark
from .errors import BudgetExceeded, InvariantViolation
from .ie import ColoredGraph, Z, Z_star, bonferroni_partial_sums, bracket_from_partials
from .ie.graphs import DEFAULT_MAX_STATES
from .ie.moments import Sm_formula, Sm_leading
from .montecarlo import DEFAULT_MAX_WORK, TrialConfig, compare_with_prediction, run_trials
from .sampler import SeededGenerator, sample_permutation

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3
JSON_SAFE_INT = 2**53
THREADS_ENV = "PERMSTAT_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for budget guards here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- output ---------------------------------------------------------------


def jsonable(obj):
    """Fractions become "p/q" strings, integers beyond 2**53 decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JSON_SAFE_INT else obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def to_plain(rows: list[dict], columns: list[str]) -> str:
    table = [columns] + [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(columns))]
    return "".join("  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() + "\n"
                   for line in table)


def to_json(obj) -> str:
    return json.dumps(jsonable(obj), indent=2) + "\n"


def emit(text: str) -> None:
    sys.stdout.write(text)


def table(fmt: str, rows: list[dict], columns: list[str], document=None) -> str:
    if fmt == "json":
        return to_json(rows if document is None else document)
    if fmt == "csv":
        return to_csv(rows, columns)
    return to_plain(rows, columns)


# -- helpers --------------------------------------------------------------


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def resolve_threads(flag: int | None) -> int:
    """--threads wins, then $PERMSTAT_THREADS, then 1."""
    if flag is not None:
        value, source = flag, "--threads"
    elif os.environ.get(THREADS_ENV, "").strip():
        raw = os.environ[THREADS_ENV].strip()
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
        source = THREADS_ENV
    else:
        return 1
    if value < 1:
        raise UsageError(f"{source} must be positive, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


# -- subcommands ----------------------------------------------------------


_STAT_FUNCS = {
    "naive": perm.min_distance_naive,
    "banded": lambda p: perm.min_distance_banded(p, perm.breadth_band_limit(p.n) + 1),
    "adaptive": perm.min_distance_adaptive,
}


def cmd_stat(args) -> int:
    lines = [ln for ln in _read_input(args.file).splitlines() if ln.strip()]
    if not lines:
        raise UsageError("no permutation given")
    algos = list(ALGORITHMS) if args.algo == "all" else [args.algo]
    warm = perm.Permutation.identity(4)
    for alg in algos:  # keep compilation out of the timings
        _STAT_FUNCS[alg](warm)
    rows = []
    for lineno, line in enumerate(lines, start=1):
        try:
            p = perm.Permutation.from_text(line)
        except perm.PermutationParseError as exc:
            prefix = f"line {lineno}: " if len(lines) > 1 else ""
            raise perm.PermutationParseError(prefix + str(exc)) from None
        if p.n < 2:
            raise UsageError(f"line {lineno}: d(pi) needs n >= 2")
        row = {"line": lineno, "n": p.n, "mj": perm.min_jump(p),
               "y": perm.breadth_band_limit(p.n)}
        values = {}
        for alg in algos:
            start = time.perf_counter()
            values[alg] = _STAT_FUNCS[alg](p)
            row[f"seconds_{alg}"] = time.perf_counter() - start
            row[f"d_{alg}"] = values[alg]
        if len(set(values.values())) != 1:
            raise InvariantViolation(f"line {lineno}: algorithms disagree on d(pi): {values}")
        row["d"] = values[algos[0]]
        rows.append(row)

    timing = [] if args.no_timing else [f"seconds_{a}" for a in algos]
    columns = ["line", "n", "d", "mj", "y"] + ([f"d_{a}" for a in algos] if len(algos) > 1
                                               else []) + timing
    if args.format == "plain":
        out = []
        for row in rows:
            parts = [f"n = {row['n']}", f"d = {row['d']}", f"mj = {row['mj']}"]
            if len(algos) > 1:
                parts.append("agree: " + ", ".join(f"{a} = {row['d_' + a]}" for a in algos))
            if not args.no_timing:
                parts += [f"{a} {row['seconds_' + a] * 1e6:.1f} us" for a in algos]
            out.append("  ".join(parts) + "\n")
        emit("".join(out))
        return EXIT_OK
    trimmed = [{k: r[k] for k in columns} for r in rows]
    emit(table(args.format, trimmed, columns))
    return EXIT_OK


def cmd_sample(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    gen = SeededGenerator(args.seed, args.stream)
    perms = [sample_permutation(args.n, gen) for _ in range(args.count)]
    if args.format == "json":
        emit(to_json({"generator": gen.metadata(),
                      "permutations": [p.values.tolist() for p in perms]}))
    elif args.format == "csv":
        emit(to_csv([{"index": i, "permutation": str(p)} for i, p in enumerate(perms)],
                    ["index", "permutation"]))
    else:
        emit("".join(f"{p}\n" for p in perms))
    return EXIT_OK


def cmd_trials(args) -> int:
    if args.n is None or args.trials is None:
        raise UsageError("trials needs --n and --trials")
    config = TrialConfig(n=args.n, trials=args.trials, seed=args.seed,
                         workers=resolve_threads(args.threads), d_probe=args.d,
                         engine=args.engine,
                         max_work=DEFAULT_MAX_WORK if args.budget is None else args.budget)
    report = run_trials(config)
    if args.format == "json":
        emit(to_json(report.to_dict(include_timing=not args.no_timing)))
        return EXIT_OK
    comp = compare_with_prediction(report, args.kind)
    rows = [{"n": config.n, "value": r.value, "observed": r.observed,
             "expected": r.expected, "z": r.z} for r in comp.rows]
    columns = ["n", "value", "observed", "expected", "z"]
    emit(table(args.format, rows, columns))
    if args.format == "plain":
        lines = [f"kind = {args.kind}  trials = {config.trials}  seed = {config.seed}"
                 f"  max |z| = {comp.max_abs_z:.3f}"]
        if config.d_probe is not None:
            lines.append(f"close-pair starters at d = {config.d_probe}: "
                         f"mean = {report.closepair_mean:.4f}  "
                         f"variance = {_cell(report.closepair_variance)}  "
                         f"lambda = {asymptotics.lam(config.d_probe)}")
        if not args.no_timing:
            lines.append(f"wall time = {report.wall_time[config.engine]:.2f} s")
        emit("".join(line + "\n" for line in lines))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n is None:
        raise UsageError("enumerate needs --n")
    dist = exact.enumerate_distribution(args.n, args.statistic, d=args.d,
                                        max_n=args.max_exact_n)
    if args.format == "json":
        emit(to_json({"n": dist.n, "statistic": dist.statistic_name,
                      "counts": {str(v): str(c) for v, c in sorted(dist.counts.items())},
                      "total": str(dist.total)}))
        return EXIT_OK
    rows = [{"value": v, "count": c, "probability": dist.prob(v)}
            for v, c in sorted(dist.counts.items())]
    emit(table(args.format, rows, ["value", "count", "probability"]))
    return EXIT_OK


def cmd_predict(args) -> int:
    kinds = list(asymptotics.KINDS) if args.kind == "all" else [args.kind]
    doc = {"trials": args.trials, "laws": {}}
    tidy = []
    for kind in kinds:
        lo = asymptotics.floor_value(kind)
        hi = args.max_value if args.max_value is not None else lo + 3
        counts = asymptotics.predicted_counts(args.trials, kind, hi)
        rows = [{"value": v, "tail": asymptotics.limit_tail(kind, v),
                 "pmf": asymptotics.limit_pmf(kind, v), "expected": counts[v],
                 "rounded": round(counts[v])} for v in range(lo, hi + 1)]
        moments = {a: asymptotics.limit_moment(kind, a) for a in range(1, args.moments + 1)}
        doc["laws"][kind] = {"rows": rows, "moments": moments}
        for r in rows:
            for q in ("tail", "pmf", "expected", "rounded"):
                tidy.append({"kind": kind, "quantity": q, "index": r["value"], "value": r[q]})
        for a, mu in moments.items():
            tidy.append({"kind": kind, "quantity": "moment", "index": a, "value": mu})
    if args.format == "json":
        emit(to_json(doc))
    elif args.format == "csv":
        emit(to_csv(tidy, ["kind", "quantity", "index", "value"]))
    else:
        for kind in kinds:
            law = doc["laws"][kind]
            emit(f"{kind} (trials = {args.trials})\n")
            emit(to_plain(law["rows"], ["value", "tail", "pmf", "expected", "rounded"]))
            for a, mu in law["moments"].items():
                emit(f"moment {a} = {mu!r}\n")
    return EXIT_OK


def cmd_sm(args) -> int:
    n, d = args.n, args.d
    if n is None or d is None:
        raise UsageError("sm needs --n and --d")
    if n < 2 or d < 0:
        raise UsageError("sm needs n >= 2 and d >= 0")
    top = min(n - 1, args.m)
    if top < 0:
        raise UsageError("--m must be non-negative")
    brute = n <= args.max_exact_n
    if args.statistic == "breadth" and not brute:
        raise exact.EnumerationCapError(
            f"breadth S_m is enumeration-only; n = {n} exceeds --max-exact-n {args.max_exact_n}")
    formula = None
    if args.statistic == "minjump":
        formula = [Sm_formula(n, d, m) for m in range(top + 1)]
    observed = ([exact.exact_Sm(n, d, m, args.statistic, max_n=args.max_exact_n)
                 for m in range(top + 1)] if brute else None)
    if formula is not None and observed is not None and formula != observed:
        raise InvariantViolation("S_m from the type formula disagrees with enumeration")
    values = formula if formula is not None else observed
    partials = bonferroni_partial_sums(values)
    target = (exact.exact_indicator_tail(n, d, args.statistic, max_n=args.max_exact_n)
              if brute else None)
    rows = []
    for m in range(top + 1):
        lower, upper = bracket_from_partials(partials, m, tightest=args.tightest)
        if target is not None and not lower <= target <= upper:
            raise InvariantViolation(f"Bonferroni bracket at depth {m} misses the exact value")
        rows.append({"m": m,
                     "sm_formula": None if formula is None else formula[m],
                     "sm_exact": None if observed is None else observed[m],
                     "sm": float(values[m]),
                     "leading": Sm_leading(d, m),
                     "lower": lower, "upper": upper,
                     "exact_prob": target})
    columns = ["m", "sm_formula", "sm_exact", "sm", "leading", "lower", "upper", "exact_prob"]
    doc = {"n": n, "d": d, "statistic": args.statistic,
           "event": f"{'d(pi)' if args.statistic == 'breadth' else 'mj(pi)'} >= "
                    f"{exact.indicator_threshold(args.statistic, d)}",
           "rows": rows}
    emit(table(args.format, rows, columns, doc))
    return EXIT_OK


def cmd_zstar(args) -> int:
    if args.n is None or args.d is None:
        raise UsageError("zstar needs --n and --d")
    graph = ColoredGraph.from_edge_list(_read_input(args.file))
    max_states = DEFAULT_MAX_STATES if args.budget is None else args.budget
    z = Z(graph, args.n, args.d)
    zs = None
    if not graph.blue_edges:
        zs = Z_star(graph, args.n, args.d, method=args.method, max_states=max_states)
        if args.check:
            other = "pie" if args.method == "tuples" else "tuples"
            if Z_star(graph, args.n, args.d, method=other, max_states=max_states) != zs:
                raise InvariantViolation("Z* differs between the tuples and pie methods")
    row = {"vertices": len(graph.vertices), "red": len(graph.red_edges),
           "blue": len(graph.blue_edges), "n": args.n, "d": args.d, "Z": z, "Z_star": zs}
    columns = list(row)
    if args.format == "plain":
        emit(f"Z = {z}\n")
        emit("Z* = " + ("undefined (graph has blue edges)" if zs is None else str(zs)) + "\n")
        return EXIT_OK
    emit(table(args.format, [row], columns, row))
    return EXIT_OK


def cmd_bench(args) -> int:
    algos = list(ALGORITHMS) if args.algo == "all" else [args.algo]
    max_n = DEFAULT_MAX_N if args.budget is None else args.budget
    rows = benchmark(args.n_list, algos, seed=args.seed, reps=args.reps, max_n=max_n)
    out = [{"algorithm": r.algorithm, "n": r.n, "reps": r.reps,
            "median_seconds": r.median_seconds, "doubling_ratio": r.doubling_ratio}
           for r in rows]
    emit(table(args.format, out, ["algorithm", "n", "reps", "median_seconds",
                                  "doubling_ratio"]))
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker threads (default: ${THREADS_ENV} or 1)")
    common.add_argument("--budget", type=int, default=None,
                        help="work guard; meaning depends on the subcommand")
    common.add_argument("--max-exact-n", type=int, default=exact.DEFAULT_MAX_N,
                        help=f"enumeration cap (at most {exact.HARD_MAX_N})")
    common.add_argument("--no-timing", action="store_true",
                        help="omit wall-clock fields so output is byte-stable")

    parser = _Parser(prog="permstat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stat", parents=[common], help="d(pi) and mj(pi) of given permutations")
    p.add_argument("file", nargs="?", help="one permutation per line (default: stdin)")
    p.add_argument("--algo", choices=ALGORITHMS + ("all",), default="adaptive")
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("sample", parents=[common], help="uniform random permutations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--stream", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("trials", parents=[common], help="seeded Monte Carlo campaign")
    p.add_argument("--n", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--d", type=int, default=None, help="also count close-pair starters at d")
    p.add_argument("--kind", choices=asymptotics.KINDS, default="breadth")
    p.add_argument("--engine", choices=("adaptive", "naive"), default="adaptive")
    p.set_defaults(func=cmd_trials)

    p = sub.add_parser("enumerate", parents=[common], help="exact distribution over S_n")
    p.add_argument("--n", type=int)
    p.add_argument("--statistic", default="breadth",
                   help="breadth, minjump or closepairs@d")
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("predict", parents=[common], help="limit-law predictions")
    p.add_argument("--kind", choices=asymptotics.KINDS + ("all",), default="breadth")
    p.add_argument("--trials", type=int, default=10**7)
    p.add_argument("--max-value", type=int, default=None)
    p.add_argument("--moments", type=int, default=2, help="limit moments of order 1..A")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("sm", parents=[common], help="binomial moments S_m and brackets")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int, default=4, help="largest m to tabulate")
    p.add_argument("--statistic", choices=exact.INDICATORS, default="minjump")
    p.add_argument("--tightest", action="store_true",
                   help="intersect all brackets up to each depth")
    p.set_defaults(func=cmd_sm)

    p = sub.add_parser("zstar", parents=[common], help="Z and Z* of an edge-list graph")
    p.add_argument("file", nargs="?", help='lines "u v red" / "u v blue" (default: stdin)')
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--method", choices=("tuples", "pie"), default="tuples")
    p.add_argument("--check", action="store_true", help="cross-check Z* with the other method")
    p.set_defaults(func=cmd_zstar)

    p = sub.add_parser("bench", parents=[common], help="scaling of the d(pi) algorithms")
    p.add_argument("--n-list", type=_int_list, default=[2**k for k in range(13, 18)])
    p.add_argument("--algo", choices=ALGORITHMS + ("all",), default="adaptive")
    p.add_argument("--reps", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"permstat: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except exact.EnumerationCapError as exc:
        print(f"permstat: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"permstat: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, ValueError, OSError) as exc:
        print(f"permstat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
