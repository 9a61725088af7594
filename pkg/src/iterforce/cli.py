"""Command line front end: generate towers, run solvers, verify claims, benchmark.

Exit codes: 0 success, 1 a checked claim was violated, 2 usage or input
error, 3 budget exhausted without a verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .graphs import Graph, Graph6Error, emit_graph6, named_graph, parse_edgelist, parse_graph6
from .kernels import available_backends, get_backend, pack_bits, pack_graph
from .models import CloningPlan, IteratedGraph, build, parse_plan
from .solvers import (
    Budget,
    DisconnectedGraphError,
    burning_number,
    failed_zero_forcing_number,
    superfluous_burning_number,
    zero_forcing_number,
    zf_lower_bounds,
)
from .theorems import (
    format_table,
    overall_status,
    reports_to_doc,
    run_verification,
)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

ENV_BUDGET_SECS = "ITERFORCE_BUDGET_SECS"


class CliError(Exception):
    pass


def _resolve_graph(token: str, fmt: str = "auto") -> Graph:
    """A base graph given as a shorthand name, a literal graph6 string, or a path."""
    try:
        return named_graph(token)
    except ValueError:
        pass
    path = Path(token)
    if path.exists():
        return _read_graph_file(path, fmt)
    try:
        return parse_graph6(token)
    except Graph6Error as exc:
        raise CliError(f"{token!r} is not a known name, existing file, or graph6 line: {exc}")


def _read_graph_file(path: Path, fmt: str = "auto") -> Graph:
    try:
        text = path.read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    if fmt == "edgelist" or (fmt == "auto" and path.suffix in (".el", ".edges")):
        try:
            return parse_edgelist(text)
        except ValueError as exc:
            raise CliError(f"{path}: {exc}")
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            try:
                return parse_graph6(line)
            except Graph6Error as exc:
                raise CliError(f"{path}: {exc}")
    raise CliError(f"{path} contains no graph line")


def _budget_from_args(args) -> Budget:
    secs = args.budget_secs
    if secs is None:
        env = os.environ.get(ENV_BUDGET_SECS)
        if env:
            try:
                secs = float(env)
            except ValueError:
                raise CliError(f"{ENV_BUDGET_SECS}={env!r} is not a number")
    if args.budget_candidates is not None and args.budget_candidates < 1:
        raise CliError("--budget-candidates must be positive")
    if secs is not None and secs < 0:
        raise CliError("--budget-secs must be nonnegative")
    if getattr(args, "workers", 1) < 1:
        raise CliError("--workers must be at least 1")
    return Budget(max_candidates=args.budget_candidates, wall_seconds=secs)


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _lineage_sidecar(ig: IteratedGraph) -> str:
    lines = []
    for v in range(ig.n):
        parent = ig.lineage.parent[v]
        lines.append(
            f"{v} {ig.lineage.level[v]} {'-' if parent is None else parent} {ig.lineage.kind[v]}"
        )
    return "\n".join(lines) + "\n"


def _cmd_gen(args) -> int:
    base = _resolve_graph(args.base, args.format)
    if args.plan:
        try:
            plan = parse_plan(Path(args.plan).read_text(), base.n)
        except (OSError, ValueError) as exc:
            raise CliError(f"plan file {args.plan}: {exc}")
    else:
        mode = args.mode.lower()
        if mode == "ilt":
            plan = CloningPlan.ilt(base.n, args.levels)
        elif mode == "ilat":
            plan = CloningPlan.ilat(base.n, args.levels)
        elif mode == "ilm":
            if not args.pattern:
                raise CliError("--mode ilm needs --pattern (one c/a letter per level)")
            plan = CloningPlan.ilm(base.n, args.pattern)
        else:
            raise CliError("--mode iim needs an explicit --plan file")
    ig = build(base, plan)
    line = emit_graph6(ig.graph) + "\n"
    if args.out:
        Path(args.out).write_text(line)
        Path(args.out + ".lineage").write_text(_lineage_sidecar(ig))
    else:
        sys.stdout.write(line)
    return EXIT_OK


def _report_exit(report) -> int:
    return EXIT_BUDGET if report.budget_exhausted else EXIT_OK


def _cmd_zf(args) -> int:
    g = _read_graph_file(Path(args.infile), args.format)
    budget = _budget_from_args(args)
    report = zero_forcing_number(g, budget, workers=args.workers)
    doc = report.to_dict()
    doc["lower_bounds"] = zf_lower_bounds(g)
    _emit(doc, args.out)
    return _report_exit(report)


def _cmd_fzf(args) -> int:
    g = _read_graph_file(Path(args.infile), args.format)
    budget = _budget_from_args(args)
    report = failed_zero_forcing_number(g, budget, fort_cap=args.fort_cap, workers=args.workers)
    _emit(report.to_dict(), args.out)
    return _report_exit(report)


def _cmd_burn(args) -> int:
    g = _read_graph_file(Path(args.infile), args.format)
    budget = _budget_from_args(args)
    try:
        if args.superfluous:
            report = superfluous_burning_number(g, budget)
        else:
            report = burning_number(g, budget)
    except DisconnectedGraphError as exc:
        raise CliError(str(exc))
    _emit(report.to_dict(), args.out)
    return _report_exit(report)


def _cmd_verify(args) -> int:
    config_text = None
    if args.config:
        try:
            config_text = Path(args.config).read_text()
        except OSError as exc:
            raise CliError(f"cannot read config {args.config}: {exc}")
    budget = _budget_from_args(args)
    if budget.max_candidates is None and budget.wall_seconds is None:
        budget = None
    reports = run_verification(config_text, budget=budget, workers=args.workers)
    sys.stdout.write(format_table(reports))
    if args.out:
        _emit(reports_to_doc(reports), args.out)
    return overall_status(reports)


def _bench_workloads():
    from .models import build as _build

    tower_zf = _build(named_graph("k2"), CloningPlan.ilt(2, 3)).graph
    tower_fort = _build(named_graph("c4"), CloningPlan.ilat(4, 3)).graph
    closure_host = _build(named_graph("p3"), CloningPlan.ilat(3, 3)).graph
    return tower_zf, tower_fort, closure_host


def _cmd_bench(args) -> int:
    tower_zf, tower_fort, closure_host = _bench_workloads()
    rows = []
    results = {}
    for name in available_backends():
        backend = get_backend(name)
        adjw, n, nwords = pack_graph(tower_zf)
        # warm up so JIT compilation/cache loading stays out of the timings
        backend.zf_level(adjw, n, nwords, 2, 0, 3)
        backend.fort_level(adjw, n, nwords, 2, 0, 3)
        backend.closure_count(adjw, n, nwords, pack_bits(1, nwords))
        t0 = time.perf_counter()
        zf_counts = []
        for _ in range(args.repeat):
            total = 0
            for k in range(1, n + 1):
                found, explored, _w = backend.zf_level(adjw, n, nwords, k, 0, n - k + 1)
                total += int(explored)
                if found:
                    break
            zf_counts.append(total)
        t_zf = (time.perf_counter() - t0) / args.repeat

        adjw, n, nwords = pack_graph(tower_fort)
        t0 = time.perf_counter()
        for _ in range(args.repeat):
            fort_total = 0
            for size in range(1, 4):
                found, explored, _w = backend.fort_level(adjw, n, nwords, size, 0, n - size + 1)
                fort_total += int(explored)
        t_fort = (time.perf_counter() - t0) / args.repeat

        adjw, n, nwords = pack_graph(closure_host)
        t0 = time.perf_counter()
        acc = 0
        for _ in range(args.repeat):
            for seed in range(256):
                words = pack_bits((seed * 0x9E3779B1) & ((1 << n) - 1), nwords)
                acc += backend.closure_count(adjw, n, nwords, words)
        t_closure = (time.perf_counter() - t0) / args.repeat

        results[name] = {
            "zf_seconds": t_zf,
            "zf_candidates": zf_counts[0],
            "fort_seconds": t_fort,
            "fort_candidates": fort_total,
            "closure_seconds": t_closure,
        }
        rows.append((name, t_zf, t_fort, t_closure))

    header = f"{'backend':8} {'zf-search':>12} {'fort-scan':>12} {'closure-256':>12}"
    lines = [header]
    for name, t_zf, t_fort, t_closure in rows:
        lines.append(f"{name:8} {t_zf:>11.4f}s {t_fort:>11.4f}s {t_closure:>11.4f}s")
    if len(rows) == 2:
        ratios = [rows[1][i] / rows[0][i] if rows[0][i] else float("inf") for i in (1, 2, 3)]
        lines.append(
            f"{'python/numba':8} {ratios[0]:>11.1f}x {ratios[1]:>11.1f}x {ratios[2]:>11.1f}x"
        )
    sys.stdout.write("\n".join(lines) + "\n")
    if args.out:
        _emit({"workloads": results, "repeat": args.repeat}, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iterforce",
        description="Exact zero forcing, failed zero forcing and burning on "
        "iterated clone/anticlone graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--budget-candidates", type=int, default=None,
                       help="stop before any size level that would exceed this many candidates")
        p.add_argument("--budget-secs", type=float, default=None,
                       help=f"wall clock cap (overrides ${ENV_BUDGET_SECS})")
        p.add_argument("--workers", type=int, default=1,
                       help="parallel workers for subset scans; results are worker-count independent")
        p.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
        p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")

    p = sub.add_parser("gen", help="grow an iterated graph and emit graph6 plus lineage")
    p.add_argument("--base", required=True, help="named graph (k1..c5), graph6 line, or file")
    p.add_argument("--mode", default="ilt", choices=("ilt", "ilat", "ilm", "iim"))
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--pattern", default=None, help="ILM per-level c/a letters")
    p.add_argument("--plan", default=None, help="plan file (one c/a line per level or shorthand)")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("zf", help="exact zero forcing number with witness")
    p.add_argument("--in", dest="infile", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_zf)

    p = sub.add_parser("fzf", help="exact failed zero forcing number via minimum forts")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--fort-cap", type=int, default=None,
                   help="only search forts up to this size (bracket beyond)")
    add_common(p)
    p.set_defaults(func=_cmd_fzf)

    p = sub.add_parser("burn", help="exact burning number (or b* with --superfluous)")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--superfluous", action="store_true",
                   help="require the final source to be redundant")
    add_common(p)
    p.set_defaults(func=_cmd_burn)

    p = sub.add_parser("verify", help="run the claim verification suite")
    p.add_argument("--config", default=None,
                   help="instance family file; defaults to the built-in families")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="compare the numba and python kernel backends")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_bench)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"iterforce: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, ValueError) as exc:
        print(f"iterforce: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
