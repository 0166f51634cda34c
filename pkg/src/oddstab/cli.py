"""Command-line entry point.

Exit codes: 0 success, 1 a check failed (counterexamples are printed
first), 2 bad usage or parameters outside a statement's range, 3 refused
because a size limit was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional, Sequence

from . import __version__, graph6
from .bipartization import MAX_D2_N, MAX_MAXCUT_N, d2, gamma2
from .constructions import parse_construction
from .cycles import (
    MAX_LONG_CYCLE_N,
    circumference,
    girth,
    has_cycle_of_length,
    odd_girth,
)
from .errors import GraphError, HypothesisError, UnsupportedSizeError
from .graph import Graph, is_bipartite
from .search import (
    GraphFilter,
    conjecture_explore,
    enumerate_graphs,
    extremal_search,
    verify_theorem,
)
from .structure import peel, stability_decompose

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``6..9`` -> [6, 7, 8, 9]; ``7`` -> [7]; ``5,7`` -> [5, 7]."""
    out: list[int] = []
    for piece in text.split(","):
        lo, sep, hi = piece.partition("..")
        try:
            a = int(lo)
            b = int(hi) if sep else a
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
        if b < a:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        out.extend(range(a, b + 1))
    return sorted(set(out))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _read_graphs(source: str) -> list[Graph]:
    if source == "-":
        return list(graph6.read_lines(sys.stdin))
    return [graph6.decode(source)]


def _filter_from(args) -> GraphFilter:
    return GraphFilter(
        forbidden_cycles=frozenset(args.forbid or ()),
        triangle_free=args.triangle_free,
        non_bipartite=args.non_bipartite,
        min_d2=args.min_d2,
        min_gamma2=args.min_gamma2,
        connected=args.connected,
        min_degree=args.min_degree,
    )


def _add_filter_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--forbid", type=_int_list, help="forbidden cycle lengths, e.g. 5,7")
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("--non-bipartite", action="store_true")
    p.add_argument("--min-d2", type=int)
    p.add_argument("--min-gamma2", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--slow", action="store_true", help="allow n = 11")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--threads", type=int, default=None, help="worker processes for enumeration")

    p = _Parser(prog="oddstab", description="Odd-cycle extremal graph toolkit")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="build a named graph")
    c.add_argument("spec", help="e.g. h:n=10,t=1, turan:n=6,r=2, h0:n=9, blowup:..., blocks:...")
    c.add_argument("--stats", action="store_true")

    a = sub.add_parser("analyze", parents=[common], help="parameters of graph6 input")
    a.add_argument("graph", help="graph6 string, or - for stdin")
    a.add_argument("--d2", action="store_true")
    a.add_argument("--gamma2", action="store_true")
    a.add_argument("--oddgirth", action="store_true")
    a.add_argument("--girth", action="store_true")
    a.add_argument("--circumference", action="store_true")
    a.add_argument("--cycles", type=_int_list, help="cycle lengths to look for")

    pe = sub.add_parser("peel", parents=[common], help="min-degree peeling trace")
    pe.add_argument("graph")

    de = sub.add_parser("decompose", parents=[common], help="low-degree decomposition flags")
    de.add_argument("graph")
    de.add_argument("--t", type=int, required=True)
    de.add_argument("--k", type=int, required=True)

    en = sub.add_parser("enumerate", parents=[common], help="graph6 of every class member")
    _add_filter_flags(en)
    en.add_argument("--count", action="store_true", help="print only the count")

    ex = sub.add_parser("extremal", parents=[common], help="maximum edge count in a class")
    _add_filter_flags(ex)

    v = sub.add_parser("verify", parents=[common], help="exhaustive check of a statement")
    v.add_argument("theorem", help="T1.1, T1.2, T1.5, T1.6, H-witness, identities, solvers, F2.1, F2.3")
    v.add_argument("--n", type=parse_range, default=[], help="range like 6..9")
    v.add_argument("--k", type=int)
    v.add_argument("--t", type=int)
    v.add_argument("--max", type=int, dest="bound", help="bound for identities")
    v.add_argument("--variant", choices=("path", "cycle", "both"))
    v.add_argument("--slow", action="store_true", help="allow n = 11")

    xp = sub.add_parser("explore", parents=[common], help="compare against the conjectured families")
    xp.add_argument("--n", type=int, required=True)
    xp.add_argument("--k", type=int, required=True)
    return p


# -- subcommand bodies --------------------------------------------------------
# Each returns (results, counterexamples, passed, text lines).


def _graph_stats(g: Graph, want_d2=True, want_gamma2=True) -> dict:
    out = {"n": g.n, "e": g.e}
    if want_d2:
        out["d2"] = d2(g)[0] if g.n <= MAX_D2_N else None
    if want_gamma2:
        out["gamma2"] = gamma2(g)[0] if g.n <= MAX_MAXCUT_N else None
    out["bipartite"] = is_bipartite(g) is not None
    return out


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def _run_construct(args):
    spec = parse_construction(args.spec)
    g = spec.build()
    code = graph6.encode(g)
    res = {"spec": args.spec, "graph6": code}
    lines = [code]
    if args.stats:
        stats = _graph_stats(g)
        res["stats"] = stats
        lines += [f"{k}: {_fmt(v)}" for k, v in stats.items()]
    return [res], [], True, lines


def _run_analyze(args):
    results = []
    lines = []
    for g in _read_graphs(args.graph):
        r: dict = {"graph6": graph6.encode(g), "n": g.n, "e": g.e, "bipartite": is_bipartite(g) is not None}
        if args.d2:
            if g.n > MAX_D2_N:
                raise UnsupportedSizeError("d2", g.n, MAX_D2_N)
            k, cert = d2(g)
            r["d2"] = k
            r["d2_set"] = sorted(cert.removed)
        if args.gamma2:
            if g.n > MAX_MAXCUT_N:
                raise UnsupportedSizeError("gamma2", g.n, MAX_MAXCUT_N)
            k, cert = gamma2(g)
            r["gamma2"] = k
            r["gamma2_edges"] = sorted(list(e) for e in cert.removed)
        if args.oddgirth:
            og = odd_girth(g)
            r["odd_girth"] = og[0] if og else None
            r["odd_cycle"] = list(og[1].vertices) if og else None
        if args.girth:
            r["girth"] = girth(g)
        if args.circumference:
            if g.n > MAX_LONG_CYCLE_N:
                raise UnsupportedSizeError("circumference", g.n, MAX_LONG_CYCLE_N)
            r["circumference"] = circumference(g)
        if args.cycles:
            found = {}
            for L in args.cycles:
                if L < 3:
                    raise GraphError(f"cycle length must be >= 3, got {L}")
                cert = has_cycle_of_length(g, L)
                found[str(L)] = list(cert.vertices) if cert else None
            r["cycles"] = found
        results.append(r)
        lines.append("  ".join(f"{k}={_fmt(v) if not isinstance(v, list) else v}" for k, v in r.items()))
    return results, [], True, lines


def _run_peel(args):
    results, lines = [], []
    for g in _read_graphs(args.graph):
        d = peel(g).to_dict()
        results.append(d)
        lines.append(f"n={d['n']} removed={len(d['removed'])} remainder_order={d['remainder_order']}"
                     f" remainder_bipartite={_fmt(d['remainder_bipartite'])}")
        lines += [f"  step {s}: vertex {v} (degree {deg})" for s, v, deg in d["removed"]]
    return results, [], True, lines


def _run_decompose(args):
    results, lines = [], []
    for g in _read_graphs(args.graph):
        try:
            rep = stability_decompose(g, args.t, args.k)
        except ValueError as exc:
            raise HypothesisError(str(exc)) from exc
        d = rep.to_dict()
        results.append(d)
        lines.append(f"n={d['n']} |B|={len(d['B'])} B={d['B']} |X|={d['X_size']} |Y|={d['Y_size']}")
        lines += [f"  {name:9s} {state}" for name, state in d["flags"].items()]
        lines += [f"  hypothesis {name}: {_fmt(v)}" for name, v in d["hypotheses"].items()]
    return results, [], True, lines


def _run_enumerate(args):
    filt = _filter_from(args)
    codes = [graph6.encode(g) for g in enumerate_graphs(args.n, filt, args.threads, args.slow)]
    res = {"n": args.n, "filter": filt.to_dict(), "count": len(codes)}
    if not args.count:
        res["graphs"] = codes
    lines = [str(len(codes))] if args.count else codes
    return [res], [], True, lines


def _run_extremal(args):
    rec = extremal_search(args.n, _filter_from(args), args.threads, args.slow)
    d = rec.to_dict()
    lines = [
        f"n={rec.n} max_edges={_fmt(rec.max_edges)} witnesses={rec.witness_count}"
        f" examined={rec.graphs_examined}"
    ]
    lines += [f"  {w}" for w in rec.witness_canonical_forms]
    return [d], [], True, lines


def _run_verify(args):
    rep = verify_theorem(
        args.theorem,
        args.n,
        k=args.k,
        t=args.t,
        bound=args.bound,
        variant=args.variant,
        threads=args.threads,
        allow_slow=args.slow,
    )
    d = rep.to_dict()
    lines = [f"{rep.theorem}: {rep.statement}"]
    for p in rep.points:
        label = " ".join(f"{k}={v}" for k, v in p.params.items())
        extra = ""
        if p.expected is not None or p.observed is not None:
            extra = f" expected={p.expected} observed={p.observed}"
        lines.append(f"  {'PASS' if p.passed else 'FAIL'} {label} checked={p.checked}{extra}")
    return [d], rep.counterexamples, rep.passed, lines


def _run_explore(args):
    rep = conjecture_explore(args.n, args.k, args.threads)
    d = rep.to_dict()
    lines = [f"n={rep.n} k={rep.k} graphs={rep.graphs_examined} (exploratory, nothing asserted)"]
    for key, ms in rep.frontiers.items():
        lines.append(f"  frontier {key}: " + ", ".join(f"({m.e},{m.gamma2}) {m.spec}" for m in ms))
    for key, rows in rep.undominated.items():
        pairs = ", ".join(f"({e},{gm})x{c}" for e, gm, c, _ in rows)
        lines.append(f"  not dominated by {key}: {pairs or 'none'}")
    return [d], [], True, lines


_HANDLERS = {
    "construct": _run_construct,
    "analyze": _run_analyze,
    "peel": _run_peel,
    "decompose": _run_decompose,
    "enumerate": _run_enumerate,
    "extremal": _run_extremal,
    "verify": _run_verify,
    "explore": _run_explore,
}


def _command_echo(argv: Sequence[str]) -> list[str]:
    """argv without the thread count, which must not change the report."""
    out = []
    skip = False
    for a in argv:
        if skip:
            skip = False
            continue
        if a == "--threads":
            skip = True
            continue
        if a.startswith("--threads="):
            continue
        out.append(a)
    return out


def make_report(argv, results, counterexamples, passed, seconds, threads) -> dict:
    return {
        "tool": "oddstab",
        "version": __version__,
        "command": _command_echo(argv),
        "counterexamples": list(counterexamples),
        "results": results,
        "summary": {"passed": passed, "items": len(results)},
        "timing": {"seconds": round(seconds, 3), "threads": threads},
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"oddstab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    threads = args.threads or os.cpu_count() or 1
    args.threads = threads
    start = time.perf_counter()
    try:
        results, bad, passed, lines = _HANDLERS[args.command](args)
    except UnsupportedSizeError as exc:
        print(f"oddstab: refused: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (HypothesisError, GraphError) as exc:
        print(f"oddstab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - start
    # counterexamples go out before anything else
    for code in bad:
        print(code, file=sys.stderr if args.json else sys.stdout)
    if args.json:
        print(dumps_report(make_report(argv, results, bad, passed, elapsed, threads)))
    else:
        for line in lines:
            print(line)
        if args.command == "verify":
            print(f"{'PASS' if passed else 'FAIL'} ({elapsed:.2f}s)")
    sys.stdout.flush()
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
