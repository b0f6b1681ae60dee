"""Command-line entry point.

Subcommands: verify (structural-property campaigns over a corpus), conjecture
(two-vertex transversal scan), inspect (single-graph dump), directed-forest
(proof-forest diagnostic), generate (emit graph6 corpora).  All configuration
is explicit flags; no environment variables.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import BagContext
from .cycles import enumerate_longest_cycles
from .decomposition import exact_treewidth, full_tree_decomposition
from .generate import GenerationError
from .graph import is_biconnected, parse_graph6
from .harness import (
    DEFAULT_CHECKS,
    EXIT_CONFIG,
    CampaignOptions,
    corpus_tasks,
    directed_forest_diagnostic,
    file_tasks,
    parse_corpus_spec,
    run_conjecture,
    run_verify,
)
from .transversal import build_families, compute_lct


def _add_corpus_flags(p: argparse.ArgumentParser, default_generate: str):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--corpus", metavar="FILE", help="graph6 file, one graph per line")
    src.add_argument(
        "--generate",
        metavar="SPEC",
        help="corpus spec, e.g. 'k=3,n=9..14,count=1000,p=0.25' or 'mode=exhaustive,k=3,nmax=8'",
        default=None,
    )
    p.add_argument("--seed", type=int, default=0, help="64-bit campaign seed")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: CPU count)")
    p.add_argument("--out", metavar="FILE", help="report file (default: stdout)")
    p.add_argument("--counterexample-dir", metavar="DIR", help="where failure bundles are persisted")
    p.add_argument("--max-n", type=int, default=18, help="cycle enumeration cap")
    p.add_argument("--tw-cap", type=int, default=24, help="exact treewidth cap")
    p.set_defaults(default_generate=default_generate)


def _tasks_from_args(args):
    if args.corpus:
        return file_tasks(args.corpus)
    spec = parse_corpus_spec(args.generate or args.default_generate, seed=args.seed)
    return corpus_tasks(spec)


def _campaign_options(args, checks=None) -> CampaignOptions:
    return CampaignOptions(
        checks=checks or DEFAULT_CHECKS,
        enumeration_cap=args.max_n,
        treewidth_cap=getattr(args, "tw_cap", 24),
        strict_preconditions=getattr(args, "strict_preconditions", False),
    )


def _open_out(args):
    return open(args.out, "w") if args.out else sys.stdout


def _workers(args) -> int:
    import os

    return args.workers if args.workers else (os.cpu_count() or 1)


def cmd_verify(args) -> int:
    try:
        tasks = _tasks_from_args(args)
    except (OSError, ValueError, GenerationError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    checks = tuple(args.checks.split(",")) if args.checks else DEFAULT_CHECKS
    opts = _campaign_options(args, checks)
    out = _open_out(args)
    try:
        code, summary = run_verify(tasks, opts, out, args.counterexample_dir, _workers(args))
    finally:
        if out is not sys.stdout:
            out.close()
    print(
        f"verify: {summary.total} graphs, {summary.ok} ok, {summary.failed} failed, "
        f"{summary.out_of_scope} out-of-scope, {summary.errors} errors; "
        f"vacuous {summary.vacuous}",
        file=sys.stderr,
    )
    return code


def cmd_conjecture(args) -> int:
    try:
        tasks = _tasks_from_args(args)
    except (OSError, ValueError, GenerationError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    opts = _campaign_options(args)
    out = _open_out(args)
    try:
        code, summary = run_conjecture(tasks, opts, out, args.counterexample_dir, _workers(args))
    finally:
        if out is not sys.stdout:
            out.close()
    print(
        f"conjecture: {summary.total} graphs, {summary.ok} consistent, "
        f"{summary.counterexamples} counterexamples, {summary.errors} errors",
        file=sys.stderr,
    )
    return code


def cmd_inspect(args) -> int:
    try:
        g = parse_graph6(args.graph6)
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(f"graph6: {args.graph6.strip()}")
    print(f"n: {g.n}  m: {g.m}")
    print(f"biconnected: {'yes' if is_biconnected(g) else 'no'}")
    width, _ = exact_treewidth(g)
    print(f"treewidth: {width}")
    if g.n >= max(4, width + 1):
        k = max(3, width)
        td = full_tree_decomposition(g, k)
        print(f"full decomposition (width {k}):")
        for t, bag in enumerate(td.bags):
            print(f"  node {t}: {{{','.join(map(str, bag))}}}")
        if td.tree_edges:
            print("  edges: " + " ".join(f"{a}-{b}" for a, b in sorted(td.tree_edges)))
    else:
        td = None
        print("full decomposition: none (graph smaller than any width-3 bag)")
    lcs = enumerate_longest_cycles(g, cap=args.max_n)
    if lcs.length == 0:
        print("longest cycle: none (acyclic)")
        return 0
    print(f"longest cycle length: {lcs.length}")
    print(f"longest cycles: {len(lcs.cycles)}")
    res = compute_lct(g, family=lcs)
    print(f"lct: {res.lct}  witness: {{{','.join(map(str, res.witness))}}}")
    if args.families:
        if td is None or td.width != 3 or not td.is_full:
            print("families: need a full width-3 decomposition (treewidth <= 3, n >= 4)")
            return 0
        for t in range(td.node_count):
            fams = build_families(g, BagContext(td, t), lcs)
            print(f"node {t} bag {{{','.join(map(str, td.bags[t]))}}}:")
            print(f"  2-crossing: {len(fams.x2)}  fenced<=3: {len(fams.fenced3)}")
            for delta, tf in sorted(fams.by_triple.items()):
                j2 = {f"{p[0]}{p[1]}": len(v) for p, v in sorted(tf.jump2.items())}
                print(
                    f"  triple {{{','.join(map(str, delta))}}}: exact3 {len(tf.exact3)}, "
                    f"jump2 {j2}, jump3 {len(tf.jump3)}"
                )
    return 0


def cmd_directed_forest(args) -> int:
    try:
        g = parse_graph6(args.graph6)
        diag = directed_forest_diagnostic(g)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(json.dumps(diag, sort_keys=True, indent=2))
    return 0


def cmd_generate(args) -> int:
    try:
        spec = parse_corpus_spec(args.spec, seed=args.seed)
        tasks = corpus_tasks(spec)
    except (ValueError, GenerationError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for t in tasks:
            out.write(t["graph6"] + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"generate: {len(tasks)} graphs", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lctw",
        description="Longest-cycle transversal checks on bounded-treewidth graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification campaign over a corpus")
    _add_corpus_flags(p, "mode=exhaustive,k=3,nmax=8")
    p.add_argument("--checks", help=f"comma list; default {','.join(DEFAULT_CHECKS)}")
    p.add_argument(
        "--strict-preconditions",
        action="store_true",
        help="mark out-of-scope graphs without running applicable checks",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="scan for two-vertex transversals on partial 4-trees")
    _add_corpus_flags(p, "k=4,n=8..13,count=1000,p=0.3")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("inspect", help="dump facts about one graph6 graph")
    p.add_argument("graph6")
    p.add_argument("--families", action="store_true", help="include per-bag family sizes")
    p.add_argument("--max-n", type=int, default=18)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("directed-forest", help="directed-forest diagnostic for one graph")
    p.add_argument("graph6")
    p.set_defaults(func=cmd_directed_forest)

    p = sub.add_parser("generate", help="emit a graph6 corpus")
    p.add_argument("--spec", required=True, help="corpus spec string")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_generate)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
