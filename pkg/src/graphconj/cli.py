"""Command-line entry point: ``graphconj <subcommand> ...``.

Graphs are read as graph6 (a file path, ``-`` for stdin, or ``builtin:NAME``)
and written as graph6 or tab-separated text.  Standard output depends only on
the inputs; a timing footer goes to stderr unless ``--no-timing`` is given.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from . import conjectures, corpus, families, oracles, theorems
from . import invariants as inv
from .graph import Graph, GraphError, parse_graph6
from .invariants import InvariantId

DEFAULT_ROW = (inv.ALPHA, inv.MU, inv.GAMMA, inv.GAMMA_T, inv.GAMMA_C, inv.GAMMA_E)


class UsageError(Exception):
    pass


def _read_graphs(spec: str | None) -> list[Graph]:
    if spec is None or spec == "-":
        return corpus.ingest_stream(sys.stdin)
    return corpus.load(spec)


def _invariant_list(text: str | None, default: Sequence[InvariantId]) -> list[InvariantId]:
    if not text:
        return list(default)
    try:
        return [InvariantId.parse(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# -- subcommands -----------------------------------------------------------------------


def cmd_invariants(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.file)
    wanted = _invariant_list(args.invariants, DEFAULT_ROW)
    cache = corpus.CorpusCache(args.cache) if args.cache else None
    for G in graphs:
        cells = [G.graph6]
        for x in wanted:
            if not inv.is_defined(G, x):
                cells.append(f"{x.label}=-")
                continue
            value = cache.get_or_compute(G, x) if cache else inv.compute(G, x)
            cells.append(f"{x.label}={value}")
        print(" ".join(cells))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    try:
        tid = theorems.TheoremId.parse(args.theorem)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    graphs = _read_graphs(args.corpus)
    reports = [row[0] for row in theorems.check_corpus([tid], graphs, args.jobs)]
    if args.reports:
        for rep in reports:
            print(rep.to_line())
    summary = theorems.summarize(tid, reports, abort=False)
    print(summary.line())
    for key in summary.violations:
        print(f"violation\t{key}")
    return 1 if summary.violations else 0


def cmd_verify(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.corpus)
    suite = theorems.PROVED_SUITE
    rows = theorems.check_corpus(suite, graphs, args.jobs)
    bad = 0
    for j, tid in enumerate(suite):
        summary = theorems.summarize(tid, [row[j] for row in rows], abort=False)
        print(summary.line())
        for key in summary.violations:
            print(f"violation\t{tid}\t{key}")
        bad += len(summary.violations)
    return 1 if bad else 0


def _parse_g6_arg(text: str) -> Graph:
    try:
        return parse_graph6(text)
    except GraphError as exc:
        raise UsageError(f"bad graph6 {text!r}: {exc}") from exc


def cmd_family(args: argparse.Namespace) -> int:
    if args.G_r is not None:
        G = families.build_Gr_example(args.G_r)
    elif args.chain is not None:
        G = families.build_claw_free_chain(args.chain)
    elif args.tree is not None:
        G = families.build_1r_tree(args.tree, args.expand or [])
    else:
        T, H = (_parse_g6_arg(x) for x in args.overlay)
        G = families.overlay_regular_on_leaves(T, H)
    print(G.graph6)
    return 0


def cmd_conjecture(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.corpus)
    try:
        target = InvariantId.parse(args.target)
        invariants = _invariant_list(args.invariants, conjectures.DEFAULT_INVARIANTS)
        hyps = tuple(args.hypotheses.split(",")) if args.hypotheses else tuple(conjectures.HYPOTHESES)
        config = conjectures.EngineConfig(invariants=tuple(invariants), hypotheses=hyps,
                                          max_output=args.top)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if target not in config.invariants:
        raise UsageError(f"target {target} is not among the invariants")
    lookup = None
    if args.cache:
        cache = corpus.CorpusCache(args.cache)
        lookup = cache.get_or_compute
    table = conjectures.ValueTable(graphs, config.invariants, lookup)
    for conj in conjectures.generate(graphs, target, config, table):
        print(conj.to_line())
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    graphs = corpus.builtin(args.corpus)
    mismatches = 0
    checked = 0
    for G in graphs:
        for x in inv.CATALOG:
            if not inv.is_defined(G, x):
                continue
            fast, slow = inv.compute(G, x), oracles.compute(G, x)
            checked += 1
            if fast != slow:
                mismatches += 1
                print(f"mismatch\t{G.graph6}\t{x.key}\tsolver={fast}\toracle={slow}")
    print(f"selftest\tgraphs={len(graphs)}\tcomparisons={checked}\tmismatches={mismatches}")
    return 1 if mismatches else 0


# -- parser -------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 2 with usage, like argparse, but via main()
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphconj", description=__doc__.splitlines()[0])
    p.add_argument("--no-timing", action="store_true", help="omit the stderr timing footer")
    # also accepted after the subcommand; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                        help="omit the stderr timing footer")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("invariants", help="print invariant values per graph", parents=[common])
    s.add_argument("--file", help="graph6 file, builtin:NAME, or - for stdin (default)")
    s.add_argument("--invariants", help="comma list, e.g. alpha,gamma_t,gamma_2,alpha_L1")
    s.add_argument("--cache", help="TSV cache file to read and append")
    s.set_defaults(run=cmd_invariants)

    s = sub.add_parser("check", help="evaluate one statement over a corpus",
                       parents=[common])
    s.add_argument("--theorem", required=True, help="e.g. THM_3_2 or THM_2_4(r=3,k=1)")
    s.add_argument("--corpus", required=True)
    s.add_argument("--reports", action="store_true", help="print one report line per graph")
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default GF_JOBS or 1)")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("family", help="emit a family member as graph6",
                       parents=[common])
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--G-r", dest="G_r", type=int, metavar="R", help="the 4R-vertex member of G_R")
    g.add_argument("--chain", type=int, metavar="L", help="claw-free chain G_L")
    g.add_argument("--tree", type=int, metavar="R", help="(1,R)-tree grown from K_{1,R}")
    g.add_argument("--overlay", nargs=2, metavar=("TREE", "H"),
                   help="graph6 of a (1,r)-tree and an (r-1)-regular graph on its leaves")
    s.add_argument("--expand", type=int, nargs="*", metavar="LEAF", help="leaves to expand (--tree)")
    s.set_defaults(run=cmd_family)

    s = sub.add_parser("conjecture", help="generate ranked inequality conjectures",
                       parents=[common])
    s.add_argument("--corpus", required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--invariants", help="comma list (default: the engine catalog)")
    s.add_argument("--hypotheses", help="comma list of hypothesis names")
    s.add_argument("--top", type=int, default=50)
    s.add_argument("--cache", help="TSV cache file to read and append")
    s.set_defaults(run=cmd_conjecture)

    s = sub.add_parser("verify-corpus", help="run every proved statement over a corpus",
                       parents=[common])
    s.add_argument("--corpus", required=True)
    s.add_argument("--jobs", type=int, default=None)
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("selftest", help="compare solvers with brute force on a bundled corpus",
                       parents=[common])
    s.add_argument("--corpus", default="connected_le7", choices=corpus.BUILTIN)
    s.set_defaults(run=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    start = time.perf_counter()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"graphconj: error: {exc}", file=sys.stderr)
        return 2
    try:
        code = args.run(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"graphconj: error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, corpus.CorpusError, ValueError, OSError) as exc:
        print(f"graphconj: error: {exc}", file=sys.stderr)
        return 1
    if not args.no_timing:
        print(f"# {args.command}: {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
