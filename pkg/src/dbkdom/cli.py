"""Command line surface: queries, sweeps, verification, export, problems.

Subcommands:

* ``gamma``    classify one instance and print the result
* ``sweep``    classify a parameter grid, one row per instance
* ``verify``   check a candidate dominating set and print the certificate
* ``problems`` empirical search for violations of two open conjectures
* ``export``   write the arc list of one instance (edge list or DOT)

Exit codes: 0 success/exact/valid, 1 invalid set or counterexample found,
2 usage error, 3 bracket only, 4 inconclusive.

Human-readable output ("table") is a rendering of the same dict that the
JSON output serializes; there is no second computation path.  Sweep rows
are emitted in lexicographic (family, n, d, k) order regardless of how
they were computed, so runs with the same flags produce identical output
except for the wall-time column.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .construct import classify, gcd_condition, prefix_condition
from .digraph import (DEBRUIJN, FAMILIES, KAUTZ, GeneralizedDigraph,
                      VertexSet, export_graph)
from .domination import bounds, verify
from .modular import ceil_div
from .oracle import (ABSENT, FOUND, INCONCLUSIVE, DEFAULT_LIMITS,
                     OracleLimits, coverage_table, exists_dominating_of_size,
                     min_dominating)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BRACKET = 3
EXIT_INCONCLUSIVE = 4

CSV_COLUMNS = ("family", "n", "d", "k", "lower", "upper", "gamma", "method",
               "witness", "ms")

PROBLEM_DEBRUIJN = "debruijn-necessity"
PROBLEM_KAUTZ = "kautz-upper"
PROBLEMS = (PROBLEM_DEBRUIJN, PROBLEM_KAUTZ)

CONSISTENT = "consistent"
COUNTEREXAMPLE = "counterexample"
INCONCLUSIVE_VERDICT = "inconclusive"

# config keys the CLI understands; anything else is a typo worth rejecting
CONFIG_KEYS = frozenset({"oracle_budget", "oracle_max_n", "format", "jobs",
                         "n", "d", "k"})

DEFAULT_PROBLEM_N = "2..60"
DEFAULT_PROBLEM_D = "2..5"
DEFAULT_PROBLEM_K = "1..4"


class UsageError(Exception):
    """Bad flags or malformed values; rendered as exit code 2."""


def parse_range(text: str, what: str) -> list[int]:
    """Parse '7' or '2..60' (inclusive) into a list of ints."""
    text = text.strip()
    try:
        if ".." in text:
            left, right = text.split("..", 1)
            a, b = int(left), int(right)
            if a > b:
                raise UsageError(f"{what}: empty range {text!r}")
            return list(range(a, b + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(
            f"{what}: expected an integer or a..b range, got {text!r}"
        ) from None


def parse_scalar(text: str, what: str) -> int:
    values = parse_range(text, what)
    if len(values) != 1:
        raise UsageError(f"{what}: expected a single value, got {text!r}")
    return values[0]


def parse_set_literal(text: str, n: int) -> VertexSet:
    members = []
    for token in text.replace(";", ",").split(","):
        token = token.strip()
        if not token:
            continue
        try:
            v = int(token)
        except ValueError:
            raise UsageError(f"set literal: bad member {token!r}") from None
        if not 0 <= v < n:
            raise UsageError(f"set literal: member {v} outside [0, {n})")
        members.append(v)
    if not members:
        raise UsageError("set literal: no members")
    return VertexSet.from_members(n, members)


def load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise UsageError(f"config: {e}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"config {path}: invalid JSON ({e})") from None
    if not isinstance(data, dict):
        raise UsageError(f"config {path}: expected a JSON object")
    unknown = sorted(set(data) - CONFIG_KEYS)
    if unknown:
        raise UsageError(f"config {path}: unknown keys {unknown}")
    return data


def _setting(args, config: dict, key: str, default):
    """Flag beats config beats default; flags left at None fall through."""
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        value = config[key]
        return default if value is None else value
    return default


def resolve_limits(args, config: dict) -> OracleLimits:
    budget = _setting(args, config, "oracle_budget", None)
    max_n = _setting(args, config, "oracle_max_n", DEFAULT_LIMITS.max_n)
    if budget is not None and not isinstance(budget, int):
        raise UsageError("oracle_budget must be an integer")
    if not isinstance(max_n, int):
        raise UsageError("oracle_max_n must be an integer")
    return OracleLimits(max_nodes=budget, max_n=max_n)


def _resolve_format(args, config: dict, default: str, allowed: tuple) -> str:
    fmt = _setting(args, config, "format", default)
    if fmt not in allowed:
        raise UsageError(
            f"format {fmt!r} not supported here (choose from "
            f"{', '.join(allowed)})")
    return fmt


def _resolve_ranges(args, config: dict, defaults: dict) -> dict:
    out = {}
    for key in ("n", "d", "k"):
        raw = _setting(args, config, key, defaults[key])
        out[key] = parse_range(str(raw), key)
    if min(out["d"]) < 2:
        raise UsageError("d must be >= 2")
    if min(out["k"]) < 1:
        raise UsageError("k must be >= 1")
    if min(out["n"]) < 1:
        raise UsageError("n must be >= 1")
    return out


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_kv_table(pairs: list[tuple[str, str]]) -> str:
    width = max(len(key) for key, _ in pairs)
    return "".join(f"{key.ljust(width)}  {value}\n" for key, value in pairs)


def _gamma_table(row: dict) -> str:
    pairs = []
    for key in ("family", "n", "d", "k", "lower", "upper"):
        pairs.append((key, str(row[key])))
    pairs.append(("gamma", "?" if row["gamma"] is None else str(row["gamma"])))
    if row["bracket"]:
        pairs.append(("bracket", "{%d..%d}" % tuple(row["bracket"])))
    pairs.append(("method", row["method"]))
    witness = row["witness"]
    pairs.append(("witness", ";".join(map(str, witness)) if witness else "-"))
    for name, fired in row["conditions"].items():
        pairs.append((f"condition {name}", "yes" if fired else "no"))
    return _render_kv_table(pairs)


def classify_row(family: str, n: int, d: int, k: int,
                 limits: OracleLimits) -> dict:
    """One sweep row; failures are captured in-row so sweeps never abort."""
    started = time.perf_counter()
    try:
        g = GeneralizedDigraph(family=family, n=n, d=d)
        row = classify(g, k, limits).to_dict()
    except Exception as e:
        row = {"family": family, "n": n, "d": d, "k": k, "lower": None,
               "upper": None, "gamma": None, "bracket": None,
               "method": "error", "witness": None, "conditions": {},
               "error": f"{type(e).__name__}: {e}"}
    row["ms"] = int((time.perf_counter() - started) * 1000)
    return row


def _sweep_worker(task: tuple) -> dict:
    family, n, d, k, max_nodes, max_n = task
    return classify_row(family, n, d, k,
                        OracleLimits(max_nodes=max_nodes, max_n=max_n))


def row_to_csv_fields(row: dict) -> list[str]:
    def cell(value):
        return "" if value is None else str(value)

    witness = row.get("witness")
    return [row["family"], cell(row["n"]), cell(row["d"]), cell(row["k"]),
            cell(row["lower"]), cell(row["upper"]), cell(row["gamma"]),
            row["method"],
            ";".join(map(str, witness)) if witness else "",
            cell(row.get("ms"))]


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row_to_csv_fields(row))
    return buf.getvalue()


def rows_to_jsonl(rows: list[dict]) -> str:
    return "".join(json.dumps(row) + "\n" for row in rows)


def _exit_for_rows(rows: list[dict]) -> int:
    if any(row["method"] == "error" for row in rows):
        return EXIT_INVALID
    if any(row["method"] == "inconclusive" for row in rows):
        return EXIT_INCONCLUSIVE
    if any(row["gamma"] is None for row in rows):
        return EXIT_BRACKET
    return EXIT_OK


def cmd_gamma(args) -> int:
    config = load_config(args.config) if args.config else {}
    fmt = _resolve_format(args, config, "table", ("table", "json", "csv"))
    limits = resolve_limits(args, config)
    n = parse_scalar(args.n, "n")
    d = parse_scalar(args.d, "d")
    k = parse_scalar(args.k, "k")
    row = classify_row(args.family, n, d, k, limits)
    if "error" in row:
        raise UsageError(row["error"])
    if fmt == "json":
        _emit(json.dumps(row, indent=2) + "\n", args.out)
    elif fmt == "csv":
        _emit(rows_to_csv([row]), args.out)
    else:
        _emit(_gamma_table(row), args.out)
    return _exit_for_rows([row])


def sweep_rows(families: list[str], ns: list[int], ds: list[int],
               ks: list[int], limits: OracleLimits, jobs: int = 1
               ) -> list[dict]:
    """All rows of the grid in output order; instances with n < d are
    skipped because neither family is defined there."""
    tasks = [(family, n, d, k, limits.max_nodes, limits.max_n)
             for family in sorted(families)
             for n in ns for d in ds for k in ks
             if n >= d]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(tasks) // (jobs * 8))
            return list(pool.map(_sweep_worker, tasks, chunksize=chunk))
    return [_sweep_worker(task) for task in tasks]


def cmd_sweep(args) -> int:
    config = load_config(args.config) if args.config else {}
    fmt = _resolve_format(args, config, "csv", ("csv", "json"))
    limits = resolve_limits(args, config)
    ranges = _resolve_ranges(args, config, {"n": None, "d": None, "k": None})
    jobs = _setting(args, config, "jobs", 1)
    if not isinstance(jobs, int) or jobs < 1:
        raise UsageError("jobs must be a positive integer")
    families = FAMILIES if args.family == "both" else (args.family,)
    rows = sweep_rows(list(families), ranges["n"], ranges["d"], ranges["k"],
                      limits, jobs)
    if fmt == "csv":
        _emit(rows_to_csv(rows), args.out)
    else:
        _emit(rows_to_jsonl(rows), args.out)
    return _exit_for_rows(rows)


def cmd_verify(args) -> int:
    config = load_config(args.config) if args.config else {}
    fmt = _resolve_format(args, config, "json", ("json", "table"))
    n = parse_scalar(args.n, "n")
    d = parse_scalar(args.d, "d")
    k = parse_scalar(args.k, "k")
    try:
        g = GeneralizedDigraph(family=args.family, n=n, d=d)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if k < 0:
        raise UsageError("k must be >= 0")
    dset = parse_set_literal(args.set, n)
    cert = verify(g, dset, k).to_dict()
    if fmt == "json":
        _emit(json.dumps(cert, indent=2) + "\n", args.out)
    else:
        pairs = [(key, str(cert[key]))
                 for key in ("family", "n", "d", "k")]
        pairs.append(("set", ";".join(map(str, cert["set"]))))
        pairs.append(("valid", "yes" if cert["valid"] else "no"))
        pairs.append(("uncovered",
                      ";".join(map(str, cert["uncovered"])) or "-"))
        _emit(_render_kv_table(pairs), args.out)
    return EXIT_OK if cert["valid"] else EXIT_INVALID


def _certificate(g: GeneralizedDigraph, dset: VertexSet, k: int) -> dict:
    cert = verify(g, dset, k)
    if not cert.valid:
        raise RuntimeError(
            f"claimed witness failed verification on {g} k={k}; "
            "refusing to report an unverified counterexample")
    return cert.to_dict()


def debruijn_necessity_report(ns: list[int], ds: list[int], ks: list[int],
                              limits: OracleLimits = DEFAULT_LIMITS) -> dict:
    """Is the gcd condition necessary for the lower bound to be attained?

    For every instance where the smallest conceivable size L is achieved,
    the report checks whether the cheap gcd condition fired.  An instance
    achieving L without the condition is a counterexample to necessity and
    carries a verified certificate.  Instances where the exact value is out
    of reach are reported inconclusive, never as support.
    """
    rows = []
    counts = {CONSISTENT: 0, COUNTEREXAMPLE: 0, INCONCLUSIVE_VERDICT: 0}
    for n in ns:
        for d in ds:
            if n < d:
                continue
            for k in ks:
                g = GeneralizedDigraph.debruijn(n, d)
                lower = bounds(g, k).lower
                fired = gcd_condition(n, d, k) is not None
                row = {"family": DEBRUIJN, "n": n, "d": d, "k": k,
                       "lower": lower, "condition": fired}
                if fired:
                    # sufficiency is verified elsewhere; a fired condition
                    # settles gamma = lower, so necessity cannot fail here
                    row["gamma"] = lower
                    row["verdict"] = CONSISTENT
                elif limits.allows(n):
                    table = coverage_table(g, k)
                    result = exists_dominating_of_size(
                        g, k, lower, table=table, max_nodes=limits.max_nodes)
                    if result.status == FOUND:
                        row["gamma"] = lower
                        row["verdict"] = COUNTEREXAMPLE
                        row["certificate"] = _certificate(
                            g, result.witness, k)
                    elif result.status == ABSENT:
                        row["gamma"] = lower + 1
                        row["verdict"] = CONSISTENT
                    else:
                        row["gamma"] = None
                        row["verdict"] = INCONCLUSIVE_VERDICT
                else:
                    row["gamma"] = None
                    row["verdict"] = INCONCLUSIVE_VERDICT
                counts[row["verdict"]] += 1
                rows.append(row)
    return {
        "problem": PROBLEM_DEBRUIJN,
        "question": ("does attaining the lower bound imply the gcd "
                     "condition fires?"),
        "envelope": {"n": ns, "d": ds, "k": ks},
        "rows": rows,
        "counts": counts,
    }


def kautz_upper_report(ns: list[int], ds: list[int], ks: list[int],
                       limits: OracleLimits = DEFAULT_LIMITS) -> dict:
    """Does every instance missed by the prefix condition sit at the
    ceil(n / (d**k + d**(k-1))) upper value?

    Instances satisfying the prefix condition are vacuously consistent.
    For the rest the exact value is computed and compared with the upper
    bound; a strictly smaller exact value is a counterexample and carries
    a verified certificate of that smaller dominating set.
    """
    rows = []
    counts = {CONSISTENT: 0, COUNTEREXAMPLE: 0, INCONCLUSIVE_VERDICT: 0}
    for n in ns:
        for d in ds:
            if n < d:
                continue
            for k in ks:
                g = GeneralizedDigraph.kautz(n, d)
                upper = ceil_div(n, d ** k + d ** (k - 1))
                fired = prefix_condition(n, d, k)
                row = {"family": KAUTZ, "n": n, "d": d, "k": k,
                       "upper": upper, "condition": fired}
                if fired:
                    row["gamma"] = None
                    row["verdict"] = CONSISTENT
                elif limits.allows(n):
                    result = min_dominating(g, k, max_nodes=limits.max_nodes)
                    if result.status == FOUND:
                        row["gamma"] = result.gamma
                        if result.gamma == upper:
                            row["verdict"] = CONSISTENT
                        else:
                            row["verdict"] = COUNTEREXAMPLE
                            row["certificate"] = _certificate(
                                g, result.witness, k)
                    else:
                        row["gamma"] = None
                        row["verdict"] = INCONCLUSIVE_VERDICT
                else:
                    row["gamma"] = None
                    row["verdict"] = INCONCLUSIVE_VERDICT
                counts[row["verdict"]] += 1
                rows.append(row)
    return {
        "problem": PROBLEM_KAUTZ,
        "question": ("do instances that miss the prefix condition always "
                     "attain ceil(n / (d**k + d**(k-1)))?"),
        "envelope": {"n": ns, "d": ds, "k": ks},
        "rows": rows,
        "counts": counts,
    }


def _problem_table(report: dict) -> str:
    lines = [f"problem: {report['problem']}",
             f"question: {report['question']}"]
    counts = report["counts"]
    lines.append("counts: " + ", ".join(
        f"{name}={counts[name]}"
        for name in (CONSISTENT, COUNTEREXAMPLE, INCONCLUSIVE_VERDICT)))
    shown = [row for row in report["rows"]
             if row["verdict"] != CONSISTENT]
    for row in shown[:50]:
        cells = [f"{key}={row[key]}" for key in ("n", "d", "k")]
        cells.append(f"verdict={row['verdict']}")
        if row.get("certificate"):
            cells.append("set=" +
                         ";".join(map(str, row["certificate"]["set"])))
        lines.append("  " + " ".join(cells))
    if len(shown) > 50:
        lines.append(f"  ... {len(shown) - 50} more non-consistent rows")
    return "\n".join(lines) + "\n"


def _exit_for_reports(reports: list[dict]) -> int:
    if any(r["counts"][COUNTEREXAMPLE] for r in reports):
        return EXIT_INVALID
    if any(r["counts"][INCONCLUSIVE_VERDICT] for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_problems(args) -> int:
    config = load_config(args.config) if args.config else {}
    fmt = _resolve_format(args, config, "json", ("json", "table"))
    limits = resolve_limits(args, config)
    ranges = _resolve_ranges(args, config, {"n": DEFAULT_PROBLEM_N,
                                            "d": DEFAULT_PROBLEM_D,
                                            "k": DEFAULT_PROBLEM_K})
    selected = PROBLEMS if args.problem == "all" else (args.problem,)
    reports = []
    for tag in selected:
        build = (debruijn_necessity_report if tag == PROBLEM_DEBRUIJN
                 else kautz_upper_report)
        reports.append(build(ranges["n"], ranges["d"], ranges["k"], limits))
    if fmt == "json":
        payload = reports[0] if len(reports) == 1 else {"reports": reports}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit("".join(_problem_table(r) for r in reports), args.out)
    return _exit_for_reports(reports)


def cmd_export(args) -> int:
    n = parse_scalar(args.n, "n")
    d = parse_scalar(args.d, "d")
    try:
        g = GeneralizedDigraph(family=args.family, n=n, d=d)
        text = export_graph(g, args.format)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(text, args.out)
    return EXIT_OK


def _add_common(sub, *, family=True, scalar_k=True, config=True):
    if family:
        sub.add_argument("--family", required=True,
                         choices=list(FAMILIES))
    sub.add_argument("-n", required=True, help="order (or range a..b)")
    sub.add_argument("-d", required=True, help="degree (or range a..b)")
    if scalar_k:
        sub.add_argument("-k", required=True, help="radius (or range a..b)")
    if config:
        sub.add_argument("--config", help="JSON file with default settings")
    sub.add_argument("--out", help="write output to this file")


def _add_oracle_flags(sub):
    sub.add_argument("--oracle-budget", type=int, dest="oracle_budget",
                     help="search node budget (0 disables the oracle)")
    sub.add_argument("--oracle-max-n", type=int, dest="oracle_max_n",
                     help="largest order the oracle will attempt")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dbkdom",
        description=("distance domination numbers of generalized de Bruijn "
                     "and Kautz digraphs"))
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gamma", help="classify one instance")
    _add_common(p)
    _add_oracle_flags(p)
    p.add_argument("--format", choices=["table", "json", "csv"])
    p.set_defaults(func=cmd_gamma)

    p = subs.add_parser("sweep", help="classify a parameter grid")
    p.add_argument("--family", required=True,
                   choices=[*FAMILIES, "both"])
    p.add_argument("-n", required=True, help="order range a..b")
    p.add_argument("-d", required=True, help="degree range a..b")
    p.add_argument("-k", required=True, help="radius range a..b")
    p.add_argument("--config", help="JSON file with default settings")
    p.add_argument("--out", help="write output to this file")
    _add_oracle_flags(p)
    p.add_argument("--format", choices=["csv", "json"])
    p.add_argument("--jobs", type=int, help="parallel workers (default 1)")
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("verify", help="verify a candidate dominating set")
    _add_common(p)
    p.add_argument("--set", required=True,
                   help="comma separated members, e.g. 0,1,5")
    p.add_argument("--format", choices=["json", "table"])
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("problems",
                        help="empirical search on the two open conjectures")
    p.add_argument("--problem", default="all",
                   choices=[*PROBLEMS, "all"])
    p.add_argument("-n", help=f"order range (default {DEFAULT_PROBLEM_N})")
    p.add_argument("-d", help=f"degree range (default {DEFAULT_PROBLEM_D})")
    p.add_argument("-k", help=f"radius range (default {DEFAULT_PROBLEM_K})")
    p.add_argument("--config", help="JSON file with default settings")
    p.add_argument("--out", help="write output to this file")
    _add_oracle_flags(p)
    p.add_argument("--format", choices=["json", "table"])
    p.set_defaults(func=cmd_problems)

    p = subs.add_parser("export", help="write the arc list of one instance")
    p.add_argument("--family", required=True, choices=list(FAMILIES))
    p.add_argument("-n", required=True, help="order")
    p.add_argument("-d", required=True, help="degree")
    p.add_argument("--format", default="edges", choices=["edges", "dot"])
    p.add_argument("--out", help="write output to this file")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed usage or help
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
