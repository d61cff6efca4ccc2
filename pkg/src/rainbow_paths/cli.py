"""Command-line interface.

JSON goes to stdout, diagnostics to stderr.  Exit codes:

0  success (and, for ``color``, the result passed the oracle re-check)
1  the requested property does not hold, or a search budget ran out
2  usage error, unreadable input, or a violated hypothesis
3  a guaranteed conclusion failed verification (a bug)
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .budget import Budget
from .coloring import (
    KColoring,
    chromatic_number,
    chromatic_witness,
    circular_chromatic_number,
    circular_witness,
)
from .constructions import theorem1, theorem2, theorem3, theorem4
from .errors import BudgetExceeded, HypothesisError, ParseError, SearchExhausted, VerificationError
from .graph import PathWitness, parse_dimacs, parse_edge_list, parse_orientation
from .harness import SweepConfig, run_sweep
from .rainbow import verify_directed_rainbow, verify_rainbow

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUG = 0, 1, 2, 3

THEOREM_FAILS = ("theorem1", "theorem2", "theorem3", "theorem4", "chi_bounds", "c7_exception")


class UsageError(Exception):
    pass


def _emit(payload):
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path, fmt=None):
    text = _read(path)
    if fmt is None:
        fmt = "dimacs" if Path(path).suffix.lower() in (".col", ".dimacs") else "edges"
    g = parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)
    if g.vertex_count == 0:
        raise UsageError(f"{path}: empty graph")
    return g


def load_coloring(path, n, k=None):
    """``{"k": .., "colors": [..]}`` JSON, or ``vertex color`` lines (0-based vertices)."""
    text = _read(path)
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
            colors = [int(c) for c in data["colors"]]
            k = int(data.get("k", k or max(colors, default=0)))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad colouring JSON: {exc}") from None
    else:
        pairs = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                v, c = int(parts[0]), int(parts[1])
            except (ValueError, IndexError):
                raise ParseError(f"expected 'vertex color', got {raw.strip()!r}", lineno) from None
            if v in pairs:
                raise ParseError(f"vertex {v} coloured twice", lineno)
            pairs[v] = c
        if sorted(pairs) != list(range(len(pairs))):
            raise ParseError("colouring vertices are not 0..n-1")
        colors = [pairs[v] for v in range(len(pairs))]
        k = k or max(colors, default=0)
    if len(colors) != n:
        raise UsageError(f"colouring has {len(colors)} entries, graph has {n} vertices")
    try:
        return KColoring(k, colors)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _budget(args):
    return None if args.budget_ms is None else Budget(seconds=args.budget_ms / 1000)


def cmd_chromatic(args):
    g = load_graph(args.input, args.format)
    if args.circular:
        cn = circular_chromatic_number(g)
        _emit({"chi_c": {"n": cn.n, "d": cn.d}, "witness": list(circular_witness(g).values)})
    else:
        _emit({"chi": chromatic_number(g), "witness": list(chromatic_witness(g).colors)})
    return EXIT_OK


def _parse_cycle(text):
    try:
        return PathWitness(tuple(int(x) for x in text.split(",")), closed=True)
    except ValueError:
        raise UsageError(f"--cycle expects comma-separated vertices, got {text!r}") from None


def cmd_color(args):
    g = load_graph(args.input, args.format)
    budget = _budget(args)
    t = args.theorem
    if t == 1:
        res = theorem1(g, budget=budget)
        f, rep = res.coloring, res.report
        extra = {"trace": res.trace.to_dict(), "verified": {"lies_on": rep.all_lie_on}}
        wit = rep.to_dict()
    elif t == 2:
        res = theorem2(g, budget=budget)
        f, rep = res.f, res.report
        extra = {"trace": res.to_dict(), "verified": {"strong_begin": True, "weak_order": f.k - 1}}
        wit = rep.to_dict()
    elif t == 3:
        cyc = _parse_cycle(args.cycle) if args.cycle else None
        res = theorem3(g, cycle=cyc, budget=budget)
        f, rep = res.coloring, res.report
        extra = {
            "trace": {
                "cycle": list(res.cycle.vertices),
                "path_lengths": list(res.path_lengths),
                "shifts": res.shifts,
                "stage": res.stage,
            },
            "verified": {"begins": rep.all_begin},
        }
        wit = rep.to_dict()
    else:
        if not args.orientation:
            raise UsageError("--theorem 4 needs --orientation FILE")
        d = parse_orientation(_read(args.orientation), g)
        res = theorem4(d)
        f = res.coloring
        ok, _ = verify_directed_rainbow(d, f)
        if not ok:
            raise VerificationError("directed rainbow path not confirmed")
        extra = {"trace": res.decomposition.to_dict(), "verified": {"directed": ok}}
        wit = {"path": list(res.witness.vertices)}
    _emit({"theorem": t, "k": f.k, "coloring": list(f.colors), "witnesses": wit, **extra})
    return EXIT_OK


def cmd_verify(args):
    g = load_graph(args.input, args.format)
    f = load_coloring(args.coloring, g.vertex_count, args.k)
    bad = f.violating_edge(g)
    if bad is not None:
        raise UsageError(f"colouring is improper on edge {bad[0]}-{bad[1]}")
    if args.mode == "directed":
        if not args.orientation:
            raise UsageError("--mode directed needs --orientation FILE")
        d = parse_orientation(_read(args.orientation), g)
        ok, w = verify_directed_rainbow(d, f)
        _emit({"directed": ok, "witness": None if w is None else list(w.vertices)})
        return EXIT_OK if ok else EXIT_FALSE
    rep = verify_rainbow(g, f)
    _emit(rep.to_dict())
    holds = rep.all_lie_on if args.mode == "lies_on" else rep.all_begin
    return EXIT_OK if holds else EXIT_FALSE


def cmd_sweep(args):
    try:
        data = json.loads(_read(args.config))
        if args.seed is not None:
            data["seed"] = args.seed
        if args.budget_ms is not None:
            data["budget_ms"] = args.budget_ms
        cfg = SweepConfig.from_dict(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad sweep config: {exc}") from None
    report = run_sweep(cfg)
    if args.out:
        Path(args.out).write_text(report.to_jsonl())
    summary = report.summary()
    for r in report.records:
        if r["check"] == "c7_exception":
            summary["c7_exception"] = r["detail"]
    if "conjecture" in cfg.checks:
        conj = [r for r in report.records if r["check"] == "conjecture"]
        counter = next((r for r in conj if r["status"] == "fail"), None)
        summary["counterexample"] = None if counter is None else counter["graph"]
        summary["known_exceptions"] = [r["graph"] for r in conj if r["status"] == "exception"]
    _emit(summary)
    fails = report.failures
    if not fails:
        return EXIT_OK
    for r in fails:
        print(f"FAIL {r['check']}: {r['reason']} on {r['graph']}", file=sys.stderr)
    return EXIT_BUG if any(r["check"] in THEOREM_FAILS for r in fails) else EXIT_FALSE


def build_parser():
    p = argparse.ArgumentParser(prog="rainbow-paths", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp):
        sp.add_argument("input", help="graph file (.col DIMACS, otherwise 0-based edge list)")
        sp.add_argument("--format", choices=("dimacs", "edges"), help="override extension detection")

    sp = sub.add_parser("chromatic", help="chromatic or circular chromatic number")
    graph_args(sp)
    sp.add_argument("--circular", action="store_true")
    sp.set_defaults(func=cmd_chromatic)

    sp = sub.add_parser("color", help="run one of the rainbow colouring constructions")
    graph_args(sp)
    sp.add_argument("--theorem", type=int, choices=(1, 2, 3, 4), required=True)
    sp.add_argument("--cycle", help="comma-separated vertices of a chi-cycle (theorem 3)")
    sp.add_argument("--orientation", help="arc file, one 'u v' per line (theorem 4)")
    sp.add_argument("--budget-ms", type=int)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("verify", help="check a colouring with the exact verifiers")
    graph_args(sp)
    sp.add_argument("coloring", help="'vertex color' lines or {\"k\": .., \"colors\": [..]}")
    sp.add_argument("--mode", choices=("lies_on", "begins", "directed"), default="lies_on")
    sp.add_argument("--orientation")
    sp.add_argument("--k", type=int, help="number of colours (default: largest colour used)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="run a property sweep from a JSON config")
    sp.add_argument("config")
    sp.add_argument("--out", help="write JSON-lines records here")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--budget-ms", type=int)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except (VerificationError, SearchExhausted) as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_BUG


if __name__ == "__main__":
    sys.exit(main())
