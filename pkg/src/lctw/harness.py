"""Verification campaigns: per-graph check evaluation, JSON-lines reports,
counterexample bundles, and the auxiliary directed-forest diagnostic.

Records are one JSON object per line, schema-versioned, and self-contained:
every outcome is re-derivable from the graph6 string alone.  Reports are
reproducible byte-for-byte for a fixed config and seed, except the timing
field "ms".  Workers fan out over graphs; results merge back in input order
through a single writer, so worker count never changes report content.

Exit codes: 0 all checks passed or premise-not-met, 2 configuration error,
3 check failure, 4 conjecture counterexample found.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from hashlib import sha1
from itertools import combinations
from multiprocessing import Pool

from .classify import BagContext, Fencing, cross_or_fence
from .cycles import (
    Cycle,
    EnumerationBudgetExceeded,
    EnumerationCapExceeded,
    enumerate_longest_cycles,
    longest_cycle_length_td,
)
from .decomposition import (
    DecompositionError,
    TreeDecomposition,
    TreewidthCapExceeded,
    branch_at,
    branch_of_route,
    check_separator_property,
    exact_treewidth,
    full_tree_decomposition,
    has_treewidth_at_most_2,
    validate,
)
from .generate import GenSpec, GenerationError, exhaustive_small, generate_partial_k_tree
from .graph import Graph, is_biconnected, parse_graph6, write_graph6
from .transversal import (
    FAIL,
    PASS,
    PREMISE_NOT_MET,
    build_families,
    check_escape_cycle,
    check_equivalent_two_cross_jump,
    check_fenced_or_shared,
    check_min_cycle_length_premise,
    check_pairwise_and_common,
    compute_lct,
    conjecture_scan,
)

SCHEMA = "lctw.report/1"
BUNDLE_SCHEMA = "lctw.bundle/1"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CHECK_FAILURE = 3
EXIT_COUNTEREXAMPLE = 4

DEFAULT_CHECKS = ("shared_vertex", "pairwise_overlap", "fenced_or_shared", "edge_separator", "families", "min_length_side", "two_cross_jump")
OPTIONAL_CHECKS = ("jump_families", "escape_cycle", "dforest", "td_oracle")


@dataclass(frozen=True)
class CampaignOptions:
    checks: tuple[str, ...] = DEFAULT_CHECKS
    enumeration_cap: int = 18
    treewidth_cap: int = 24
    max_steps: int | None = None
    strict_preconditions: bool = False


@dataclass(frozen=True)
class CorpusSpec:
    """Parsed --generate string; the seed fully determines the task stream."""

    mode: str = "random"
    k: int = 3
    n_lo: int = 8
    n_hi: int = 14
    count: int = 100
    delete_probability: float = 0.25
    require_biconnected: bool = True
    seed: int = 0
    n_max_exhaustive: int = 8
    retry_budget: int = 200


def parse_corpus_spec(text: str, seed: int = 0) -> CorpusSpec:
    """Parse 'k=3,n=9..14,count=1000,p=0.25' style corpus descriptions."""
    fields: dict[str, str] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ValueError(f"bad corpus spec fragment {chunk!r}: expected key=value")
        key, val = chunk.split("=", 1)
        fields[key.strip()] = val.strip()
    mode = fields.pop("mode", "random")
    kw: dict = {"mode": mode, "seed": seed}
    for key, val in fields.items():
        if key == "k":
            kw["k"] = int(val)
        elif key == "n":
            if ".." in val:
                lo, hi = val.split("..")
                kw["n_lo"], kw["n_hi"] = int(lo), int(hi)
            else:
                kw["n_lo"] = kw["n_hi"] = int(val)
        elif key == "count":
            kw["count"] = int(val)
        elif key == "p":
            kw["delete_probability"] = float(val)
        elif key == "biconnected":
            kw["require_biconnected"] = val not in ("0", "false", "no")
        elif key == "seed":
            kw["seed"] = int(val)
        elif key == "nmax":
            kw["n_max_exhaustive"] = int(val)
        elif key == "retries":
            kw["retry_budget"] = int(val)
        else:
            raise ValueError(f"unknown corpus spec key {key!r}")
    return CorpusSpec(**kw)


def corpus_tasks(spec: CorpusSpec) -> list[dict]:
    """Materialize the task list for a corpus spec (deterministic in the seed)."""
    import random

    tasks = []
    if spec.mode == "exhaustive":
        for g in exhaustive_small(spec.n_max_exhaustive, spec.k):
            tasks.append({"graph6": write_graph6(g), "source": f"exhaustive(k={spec.k})"})
        return tasks
    if spec.mode != "random":
        raise ValueError(f"unknown corpus mode {spec.mode!r}")
    rng = random.Random(spec.seed)
    for i in range(spec.count):
        n = rng.randint(spec.n_lo, spec.n_hi)
        gs = GenSpec(
            n=n,
            k=spec.k,
            seed=rng.getrandbits(64),
            delete_probability=spec.delete_probability,
            require_biconnected=spec.require_biconnected,
            retry_budget=spec.retry_budget,
        )
        g, td = generate_partial_k_tree(gs)
        tasks.append(
            {
                "graph6": write_graph6(g),
                "source": f"random(k={spec.k},seed={spec.seed},i={i})",
                "td": {"bags": [list(b) for b in td.bags], "edges": [list(e) for e in sorted(td.tree_edges)]},
            }
        )
    return tasks


def file_tasks(path: str) -> list[dict]:
    tasks = []
    with open(path) as fh:
        for i, line in enumerate(fh):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tasks.append({"graph6": line, "source": f"{path}:{i + 1}"})
    return tasks


def _deserialize_td(blob) -> TreeDecomposition:
    return TreeDecomposition(
        [tuple(b) for b in blob["bags"]], [tuple(e) for e in blob["edges"]]
    )


def _outcome_dict(outcome) -> dict:
    d = {"status": outcome.status}
    if outcome.detail:
        d["detail"] = outcome.detail
    if outcome.witness:
        d["witness"] = _plain(outcome.witness)
    return d


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (frozenset, set)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, Cycle):
        return list(x.vertices)
    return x


def check_edge_separators(g: Graph, td: TreeDecomposition) -> dict:
    """Exhaustive separator-property sweep over all tree edges and vertex pairs."""
    violations = []
    pairs = 0
    for a, b in sorted(td.tree_edges):
        for t, tp in ((a, b), (b, a)):
            side_u = branch_at(td, t, tp).vertices  # already excludes the bag of t
            side_v = branch_at(td, tp, t).vertices
            for u in sorted(side_u):
                for v in sorted(side_v):
                    pairs += 1
                    if not check_separator_property(g, td, (t, tp), u, v):
                        violations.append((t, tp, u, v))
    status = PASS if not violations else FAIL
    return {"status": status, "pairs": pairs, "violations": _plain(violations)}


def check_family_consistency(g: Graph, td: TreeDecomposition, cycles) -> dict:
    """Per-node sanity of the cycle families: the 2-crossing and fenced families
    are disjoint, and every jump meets its triple 2 or 3 times."""
    for t in range(td.node_count):
        ctx = BagContext(td, t)
        fams = build_families(g, ctx, cycles)
        overlap = set(fams.x2) & set(fams.fenced3)
        if overlap:
            return {"status": FAIL, "detail": f"node {t}: crossing and fenced families overlap"}
        for delta, tf in fams.by_triple.items():
            for pair, members in tf.jump2.items():
                for c in members:
                    if len(c.vertex_set & set(delta)) != 2:
                        return {"status": FAIL, "detail": f"node {t}: bad 2-jump count"}
            for c in tf.jump3:
                if len(c.vertex_set & set(delta)) != 3:
                    return {"status": FAIL, "detail": f"node {t}: bad 3-jump count"}
    return {"status": PASS}


def check_jump_families_instance(g: Graph, td: TreeDecomposition, cycles) -> dict:
    """Pairwise-intersection and common-vertex checks at every premise-satisfying
    (node, triple); cheap exact-intersection prefilter before posture work."""
    contexts = premises = fails = 0
    first_fail = None
    for t in range(td.node_count):
        bag = td.bags[t]
        for delta in combinations(bag, 3):
            contexts += 1
            dset = set(delta)
            hit_pairs = {tuple(sorted(c.vertex_set & dset)) for c in cycles}
            if any((p[0], p[1]) not in hit_pairs for p in combinations(delta, 2)):
                continue  # some pair has no 2-intersecting cycle at all
            ctx = BagContext(td, t, delta)
            outcome = check_pairwise_and_common(g, ctx, cycles)
            if outcome.status == PREMISE_NOT_MET:
                continue
            premises += 1
            if outcome.status == FAIL:
                fails += 1
                if first_fail is None:
                    first_fail = {"node": t, "delta": list(delta), "detail": outcome.detail}
    status = FAIL if fails else (PASS if premises else PREMISE_NOT_MET)
    out = {"status": status, "contexts": contexts, "premise_met": premises}
    if first_fail:
        out["first_failure"] = first_fail
    return out


def check_escape_cycle_instance(g: Graph, td: TreeDecomposition, cycles, result) -> dict:
    """Escape-cycle check at every premise-satisfying triple."""
    premises = fails = 0
    first_fail = None
    if result.lct > 1:
        for t in range(td.node_count):
            for delta in combinations(td.bags[t], 3):
                dset = set(delta)
                hit_pairs = {tuple(sorted(c.vertex_set & dset)) for c in cycles}
                if any((p[0], p[1]) not in hit_pairs for p in combinations(delta, 2)):
                    continue
                ctx = BagContext(td, t, delta)
                outcome = check_escape_cycle(g, ctx, cycles, result)
                if outcome.status == PREMISE_NOT_MET:
                    continue
                premises += 1
                if outcome.status == FAIL:
                    fails += 1
                    if first_fail is None:
                        first_fail = {"node": t, "delta": list(delta)}
    status = FAIL if fails else (PASS if premises else PREMISE_NOT_MET)
    out = {"status": status, "premise_met": premises}
    if first_fail:
        out["first_failure"] = first_fail
    return out


def directed_forest_diagnostic(g: Graph, td: TreeDecomposition | None = None, cycles=None) -> dict:
    """Build the auxiliary directed forest over decomposition edges and follow it.

    An arc t -> t' exists when some longest cycle fenced by the bag of t,
    meeting it at most three times, lives in the branch toward t'.  The last
    arc of a maximal directed path would exhibit two antipodal fenced longest
    cycles; on a genuine width-3 graph that configuration never completes, and
    the diagnostic records where the construction halts.
    """
    if not is_biconnected(g):
        raise ValueError("diagnostic requires a 2-connected graph")
    if has_treewidth_at_most_2(g):
        raise ValueError("diagnostic requires treewidth exactly 3")
    if td is None:
        td = full_tree_decomposition(g, 3)
    if cycles is None:
        cycles = enumerate_longest_cycles(g)
    result = compute_lct(g, family=cycles)
    fenced: dict[int, list] = {}
    for t in range(td.node_count):
        bag = set(td.bags[t])
        fenced[t] = [
            c
            for c in cycles
            if len(c.vertex_set & bag) <= 3 and cross_or_fence(g, c, bag) is Fencing.FENCED
        ]
    arcs = []
    for a, b in sorted(td.tree_edges):
        for t, tp in ((a, b), (b, a)):
            for c in fenced[t]:
                br = branch_of_route(td, t, c.vertices)
                if tp in br.nodes:
                    arcs.append((t, tp))
                    break
    out = {
        "schema": SCHEMA,
        "graph6": write_graph6(g),
        "lct": result.lct,
        "arc_count": len(arcs),
        "arcs": [list(a) for a in arcs],
        "fenced_family_sizes": [len(fenced[t]) for t in range(td.node_count)],
    }
    if not arcs:
        out["halt"] = "empty-forest: no fenced cycle selects a branch"
        return out
    arc_map: dict[int, list[int]] = {}
    for t, tp in arcs:
        arc_map.setdefault(t, []).append(tp)
    start = min(arc_map)
    path = [start]
    while True:
        nxt = [x for x in arc_map.get(path[-1], []) if x not in path]
        if not nxt:
            break
        path.append(min(nxt))
    out["maximal_path"] = path
    if len(path) < 2:
        out["halt"] = "no-directed-path: arcs exist but none can be chained"
        return out
    t, tp = path[-2], path[-1]
    cyc_c = next(c for c in fenced[t] if tp in branch_of_route(td, t, c.vertices).nodes)
    cyc_d = next(
        (d for d in fenced[tp] if t in branch_of_route(td, tp, d.vertices).nodes), None
    )
    out["last_arc"] = [t, tp]
    if cyc_d is None:
        out["halt"] = f"no-returning-cycle: no fenced cycle at node {tp} lives toward node {t}"
        return out
    shared = set(td.bags[t]) & set(td.bags[tp])
    u = next(iter(set(td.bags[t]) - shared))
    w = next(iter(set(td.bags[tp]) - shared))
    inter = cyc_c.vertex_set & cyc_d.vertex_set
    out["antipodal_pair"] = {"C": list(cyc_c.vertices), "D": list(cyc_d.vertices)}
    out["pair_checks"] = {
        "private_of_t_off_C": u not in cyc_c.vertex_set,
        "private_of_tp_off_D": w not in cyc_d.vertex_set,
        "intersection_in_shared": inter <= shared,
        "intersection_at_least_2": len(inter) >= 2,
    }
    if result.lct == 1:
        out["halt"] = (
            "all longest cycles share a vertex: no longest cycle avoiding a shared "
            "bag vertex exists, so the contradiction step cannot proceed"
        )
    else:
        out["halt"] = "contradiction configuration candidate: inspect manually"
    return out


def evaluate_task(task: dict, opts: CampaignOptions) -> dict:
    """Run the configured checks on one graph; returns a self-contained record."""
    started = time.monotonic()
    record: dict = {"schema": SCHEMA, "source": task.get("source", "")}
    try:
        g = parse_graph6(task["graph6"])
    except Exception as exc:
        record.update({"graph6": task.get("graph6", ""), "status": "error", "error": str(exc)})
        record["ms"] = int((time.monotonic() - started) * 1000)
        return record
    record["graph6"] = write_graph6(g)
    record["n"] = g.n
    record["m"] = g.m
    checks: dict[str, dict] = {}
    record["checks"] = checks
    try:
        base_td = _deserialize_td(task["td"]) if task.get("td") else None
        if base_td is not None and (base_td.width > 3 or validate(g, base_td)):
            base_td = None  # width certificate useless or invalid; recompute
        biconn = is_biconnected(g)
        if base_td is not None:
            tw_le_3 = True  # a valid width-<=3 decomposition certifies it
        elif g.n <= opts.treewidth_cap:
            width, base_td = exact_treewidth(g, cap=opts.treewidth_cap)
            tw_le_3 = width <= 3
            record["tw"] = width
        else:
            raise TreewidthCapExceeded(f"n={g.n} beyond treewidth cap {opts.treewidth_cap}")
        tw_eq_3 = tw_le_3 and not has_treewidth_at_most_2(g)
        record["biconnected"] = biconn
        record["tw_le_3"] = tw_le_3
        record["tw_eq_3"] = tw_eq_3
        in_scope = biconn and tw_le_3
        if opts.strict_preconditions and not in_scope:
            record["status"] = "out-of-scope"
            record["ms"] = int((time.monotonic() - started) * 1000)
            return record

        cycles = None
        result = None
        if biconn:
            cycles = enumerate_longest_cycles(g, cap=opts.enumeration_cap, max_steps=opts.max_steps)
            if cycles.length:
                result = compute_lct(g, family=cycles)
                record["L"] = cycles.length
                record["longest_cycles"] = len(cycles)
                record["lct"] = result.lct
                record["lct_witness"] = list(result.witness)

        td3 = None
        td3_error = None
        if in_scope and g.n >= 4:
            try:
                td3 = full_tree_decomposition(g, 3, base=base_td)
            except DecompositionError as exc:
                td3_error = str(exc)

        for name in opts.checks:
            if name == "shared_vertex":
                if not (in_scope and result):
                    checks[name] = {"status": "out-of-scope", "detail": "needs a 2-connected partial 3-tree with a cycle"}
                else:
                    checks[name] = {"status": PASS if result.lct == 1 else FAIL}
            elif name == "pairwise_overlap":
                if not (biconn and cycles and cycles.length):
                    checks[name] = {"status": "out-of-scope", "detail": "needs a 2-connected graph with a cycle"}
                else:
                    bad = next(
                        (
                            (c.vertices, d.vertices)
                            for c, d in combinations(cycles.cycles, 2)
                            if len(c.vertex_set & d.vertex_set) < 2
                        ),
                        None,
                    )
                    checks[name] = (
                        {"status": PASS}
                        if bad is None
                        else {"status": FAIL, "witness": _plain(bad)}
                    )
            elif name in ("fenced_or_shared", "edge_separator", "families", "jump_families", "escape_cycle", "dforest", "td_oracle"):
                if not in_scope or result is None:
                    checks[name] = {"status": "out-of-scope"}
                    continue
                if td3 is None:
                    checks[name] = {"status": PREMISE_NOT_MET, "detail": td3_error or "no width-3 decomposition (n < 4)"}
                    continue
                if name == "fenced_or_shared":
                    if result.lct == 1:
                        checks[name] = {"status": PASS, "detail": "all longest cycles share a vertex"}
                    else:
                        rep = check_fenced_or_shared(g, td3, cycles, result)
                        checks[name] = {
                            "status": PASS if rep.ok else FAIL,
                            "failing_nodes": list(rep.failing_nodes),
                        }
                elif name == "edge_separator":
                    checks[name] = check_edge_separators(g, td3)
                elif name == "families":
                    checks[name] = check_family_consistency(g, td3, cycles)
                elif name == "jump_families":
                    checks[name] = check_jump_families_instance(g, td3, cycles)
                elif name == "escape_cycle":
                    checks[name] = check_escape_cycle_instance(g, td3, cycles, result)
                elif name == "dforest":
                    if tw_eq_3:
                        diag = directed_forest_diagnostic(g, td3, cycles)
                        checks[name] = {"status": PASS, "halt": diag["halt"], "arcs": diag["arc_count"]}
                    else:
                        checks[name] = {"status": PREMISE_NOT_MET, "detail": "treewidth below 3"}
                elif name == "td_oracle":
                    dp_len = longest_cycle_length_td(g, td3)
                    ok = dp_len == cycles.length
                    checks[name] = {"status": PASS if ok else FAIL, "dp": dp_len, "enum": cycles.length}
            elif name == "min_length_side":
                if result is None:
                    checks[name] = {"status": "out-of-scope"}
                else:
                    checks[name] = _outcome_dict(
                        check_min_cycle_length_premise(biconn, tw_eq_3, result.lct, cycles.length)
                    )
            elif name == "two_cross_jump":
                if result is None or td3 is None:
                    checks[name] = {"status": "out-of-scope"}
                else:
                    checks[name] = _outcome_dict(
                        check_equivalent_two_cross_jump(g, td3, cycles, result.lct)
                    )
            else:
                raise ValueError(f"unknown check {name!r}")
        record["status"] = "fail" if any(c.get("status") == FAIL for c in checks.values()) else "ok"
    except (EnumerationCapExceeded, EnumerationBudgetExceeded, TreewidthCapExceeded, GenerationError) as exc:
        record["status"] = "out-of-scope"
        record["error"] = str(exc)
    record["ms"] = int((time.monotonic() - started) * 1000)
    return record


def _verify_worker(args):
    task, opts = args
    return evaluate_task(task, opts)


def _conjecture_worker(args):
    task, opts = args
    return evaluate_conjecture_task(task, opts)


def evaluate_conjecture_task(task: dict, opts: CampaignOptions) -> dict:
    started = time.monotonic()
    record: dict = {"schema": SCHEMA, "source": task.get("source", "")}
    try:
        g = parse_graph6(task["graph6"])
        record["graph6"] = write_graph6(g)
        record["n"] = g.n
        td_known = False
        if task.get("td"):
            base = _deserialize_td(task["td"])
            td_known = base.width <= 4 and not validate(g, base)
        finding = conjecture_scan(
            g, cap=opts.enumeration_cap, max_steps=opts.max_steps, treewidth_known=td_known
        )
        record.update(
            {
                "finding": finding.status,
                "lct": finding.lct,
                "L": finding.length,
                "longest_cycles": finding.cycle_count,
                "witness": list(finding.witness),
                "status": "ok",
            }
        )
        if finding.refutation:
            record["refutation"] = _plain(finding.refutation)
    except Exception as exc:
        record["status"] = "error"
        record["error"] = str(exc)
    record["ms"] = int((time.monotonic() - started) * 1000)
    return record


def _run_tasks(tasks, opts, worker, workers: int):
    args = [(t, opts) for t in tasks]
    if workers <= 1:
        for a in args:
            yield worker(a)
        return
    with Pool(workers) as pool:
        yield from pool.imap(worker, args, chunksize=8)


@dataclass
class CampaignSummary:
    total: int = 0
    ok: int = 0
    failed: int = 0
    out_of_scope: int = 0
    errors: int = 0
    counterexamples: int = 0
    vacuous: dict = field(default_factory=dict)
    bundles: list = field(default_factory=list)


def run_verify(tasks, opts: CampaignOptions, out_stream, ce_dir=None, workers: int = 1):
    summary = CampaignSummary()
    code = EXIT_OK
    for record in _run_tasks(tasks, opts, _verify_worker, workers):
        summary.total += 1
        status = record.get("status")
        if status == "fail":
            summary.failed += 1
            code = EXIT_CHECK_FAILURE
            if ce_dir:
                summary.bundles.append(write_failure_bundle(ce_dir, record))
        elif status == "out-of-scope":
            summary.out_of_scope += 1
        elif status == "error":
            summary.errors += 1
        else:
            summary.ok += 1
        for name, chk in record.get("checks", {}).items():
            if chk.get("status") == "vacuous-pass":
                summary.vacuous[name] = summary.vacuous.get(name, 0) + 1
        out_stream.write(json.dumps(record, sort_keys=True) + "\n")
    return code, summary


def run_conjecture(tasks, opts: CampaignOptions, out_stream, ce_dir=None, workers: int = 1):
    summary = CampaignSummary()
    code = EXIT_OK
    for record in _run_tasks(tasks, opts, _conjecture_worker, workers):
        summary.total += 1
        if record.get("status") == "error":
            summary.errors += 1
        elif record.get("finding") == "COUNTEREXAMPLE":
            summary.counterexamples += 1
            code = EXIT_COUNTEREXAMPLE
            if ce_dir:
                summary.bundles.append(write_conjecture_bundle(ce_dir, record))
        else:
            summary.ok += 1
        out_stream.write(json.dumps(record, sort_keys=True) + "\n")
    return code, summary


def _bundle_path(ce_dir, record) -> str:
    import os

    os.makedirs(ce_dir, exist_ok=True)
    digest = sha1(record["graph6"].encode()).hexdigest()[:12]
    return str(ce_dir) + os.sep + f"ce-{digest}.txt"


def write_failure_bundle(ce_dir, record) -> str:
    path = _bundle_path(ce_dir, record)
    failing = [n for n, c in record.get("checks", {}).items() if c.get("status") == FAIL]
    lines = [
        BUNDLE_SCHEMA,
        "kind: check-failure",
        f"graph6: {record['graph6']}",
        f"failed-checks: {','.join(failing)}",
        f"record: {json.dumps(record, sort_keys=True)}",
    ]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return path


def write_conjecture_bundle(ce_dir, record) -> str:
    """Self-contained counterexample evidence: graph6, the longest-cycle family,
    and for every vertex pair one longest cycle avoiding it."""
    path = _bundle_path(ce_dir, record)
    g = parse_graph6(record["graph6"])
    cycles = enumerate_longest_cycles(g)
    lines = [
        BUNDLE_SCHEMA,
        "kind: conjecture-counterexample",
        f"graph6: {record['graph6']}",
        f"lct: {record['lct']}",
        f"longest-cycle-length: {record['L']}",
        f"longest-cycle-count: {record['longest_cycles']}",
        "cycles:",
    ]
    lines.extend("  " + " ".join(map(str, c.vertices)) for c in cycles)
    lines.append("refutation:")
    for u, v, missed in record.get("refutation", []):
        lines.append(f"  pair {u} {v} missed-by " + " ".join(map(str, missed)))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return path


def verify_conjecture_bundle(path: str) -> tuple[bool, str]:
    """Re-verify a counterexample bundle from scratch: recompute the family and
    transversal number, and check every refutation line against the family."""
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    if not lines or lines[0] != BUNDLE_SCHEMA:
        return False, "unknown bundle schema"
    fields = {}
    cycles_listed = []
    refutation = []
    section = None
    for ln in lines[1:]:
        if ln == "cycles:":
            section = "cycles"
            continue
        if ln == "refutation:":
            section = "refutation"
            continue
        if section == "cycles" and ln.startswith("  "):
            cycles_listed.append(tuple(int(x) for x in ln.split()))
            continue
        if section == "refutation" and ln.startswith("  "):
            toks = ln.split()
            refutation.append((int(toks[1]), int(toks[2]), tuple(int(x) for x in toks[4:])))
            continue
        if ": " in ln:
            key, val = ln.split(": ", 1)
            fields[key] = val
    g = parse_graph6(fields["graph6"])
    family = enumerate_longest_cycles(g)
    res = compute_lct(g, family=family)
    if res.lct != int(fields["lct"]):
        return False, f"recomputed lct {res.lct} != bundled {fields['lct']}"
    if family.length != int(fields["longest-cycle-length"]):
        return False, "longest cycle length mismatch"
    listed = {Cycle(seq) for seq in cycles_listed}
    if listed != set(family.cycles):
        return False, "cycle family mismatch"
    if res.lct >= 3:
        pairs_seen = set()
        for u, v, missed in refutation:
            cyc = Cycle(missed)
            if cyc not in listed or u in cyc.vertex_set or v in cyc.vertex_set:
                return False, f"bad refutation line for pair ({u},{v})"
            pairs_seen.add((u, v))
        need = {(u, v) for u, v in combinations(range(g.n), 2)}
        if pairs_seen != need:
            return False, "refutation does not cover every vertex pair"
    return True, "bundle re-verified"
