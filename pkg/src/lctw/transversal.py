"""Longest-cycle transversals and the per-bag cycle families with their checks.

lct(G) is the minimum size of a vertex set meeting every longest cycle.  The
computation is staged exhaustion: all single vertices, then all pairs, then
triples, and so on in lexicographic order, so the reported witness is the
lexicographically least among the minimum-size transversals and minimality is
verified exhaustively by construction.

Checkers return outcomes, not booleans: "premise-not-met" is a first-class
result distinct from pass/fail so that a checker never reports a spurious
failure on an instance outside its hypotheses, and "vacuous-pass" counts
premise-empty side conditions separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .classify import (
    BagContext,
    Fencing,
    Posture,
    cross_or_fence,
    cycle_posture,
    k_intersect,
    s_equivalent,
)
from .cycles import (
    DEFAULT_ENUMERATION_CAP,
    Cycle,
    LongestCycleSet,
    enumerate_longest_cycles,
)
from .decomposition import (
    TreeDecomposition,
    branch_of_vertex,
    branch_union,
)
from .graph import Graph, components_after_removal, is_biconnected, separates

__all__ = [
    "PASS",
    "FAIL",
    "PREMISE_NOT_MET",
    "VACUOUS_PASS",
    "TransversalResult",
    "CycleFamilies",
    "TripleFamilies",
    "ComponentFamily",
    "FencedOrSharedReport",
    "CheckOutcome",
    "ConjectureFinding",
    "compute_lct",
    "build_families",
    "check_fenced_or_shared",
    "component_family",
    "check_pairwise_and_common",
    "check_escape_cycle",
    "conjecture_scan",
    "check_min_cycle_length_premise",
    "check_equivalent_two_cross_jump",
]

PASS = "pass"
FAIL = "fail"
PREMISE_NOT_MET = "premise-not-met"
VACUOUS_PASS = "vacuous-pass"


@dataclass(frozen=True)
class TransversalResult:
    """Minimum hitting set over the vertex sets of all longest cycles."""

    lct: int
    witness: tuple[int, ...]
    family: LongestCycleSet


@dataclass(frozen=True)
class CheckOutcome:
    status: str
    detail: str = ""
    witness: tuple = ()


def compute_lct(
    g: Graph,
    cap: int = DEFAULT_ENUMERATION_CAP,
    max_steps: int | None = None,
    family: LongestCycleSet | None = None,
) -> TransversalResult:
    """Exact lct with the lexicographically least minimum witness."""
    if family is None:
        family = enumerate_longest_cycles(g, cap=cap, max_steps=max_steps)
    if family.length == 0:
        raise ValueError("graph is acyclic: transversal number undefined")
    masks = []
    for c in family.cycles:
        m = 0
        for v in c.vertices:
            m |= 1 << v
        masks.append(m)
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            probe = 0
            for v in combo:
                probe |= 1 << v
            if all(m & probe for m in masks):
                return TransversalResult(size, combo, family)
    raise AssertionError("unreachable: the full vertex set hits every cycle")


@dataclass(frozen=True)
class TripleFamilies:
    """Families attached to one triple of a bag."""

    triple: tuple[int, ...]
    exact3: tuple[Cycle, ...]  # longest cycles meeting the bag exactly at the triple
    jump2: dict[tuple[int, int], tuple[Cycle, ...]]  # 2-jump families per pair
    jump3: tuple[Cycle, ...]  # 3-jump family

    def jump_union(self) -> tuple[Cycle, ...]:
        out: list[Cycle] = []
        for pair in sorted(self.jump2):
            out.extend(self.jump2[pair])
        out.extend(self.jump3)
        return tuple(out)


@dataclass(frozen=True)
class CycleFamilies:
    """Longest-cycle families at one bag: the 2-crossing set, the fenced
    at-most-3-intersecting set, and per-triple exact/jump families."""

    ctx: BagContext
    x2: tuple[Cycle, ...]
    fenced3: tuple[Cycle, ...]
    by_triple: dict[tuple[int, ...], TripleFamilies]


def build_families(g: Graph, ctx: BagContext, cycles: LongestCycleSet | None = None) -> CycleFamilies:
    """Classify every longest cycle against one bag and all four of its triples."""
    if cycles is None:
        cycles = enumerate_longest_cycles(g)
    bag = set(ctx.bag)
    x2: list[Cycle] = []
    fenced3: list[Cycle] = []
    for c in cycles:
        count, _ = k_intersect(c, bag)
        fen = cross_or_fence(g, c, bag)
        if fen is Fencing.CROSSES and count == 2:
            x2.append(c)
        elif fen is Fencing.FENCED and count <= 3:
            fenced3.append(c)
    by_triple: dict[tuple[int, ...], TripleFamilies] = {}
    for delta in combinations(ctx.bag, 3):
        dctx = ctx.with_delta(delta)
        dset = set(delta)
        exact3 = tuple(c for c in cycles if c.vertex_set & bag == dset)
        jump2: dict[tuple[int, int], list[Cycle]] = {p: [] for p in combinations(delta, 2)}
        jump3: list[Cycle] = []
        for c in cycles:
            count, inter = k_intersect(c, dset)
            if count < 2:
                continue
            if cycle_posture(dctx, c).tag is Posture.JUMP:
                if count == 2:
                    jump2[inter].append(c)
                else:
                    jump3.append(c)
        by_triple[delta] = TripleFamilies(
            delta,
            exact3,
            {p: tuple(v) for p, v in jump2.items()},
            tuple(jump3),
        )
    return CycleFamilies(ctx, tuple(x2), tuple(fenced3), by_triple)


@dataclass(frozen=True)
class FencedOrSharedReport:
    """Per-node disjunction outcomes: transversal number 1, or a fenced longest
    cycle meeting the bag at most three times exists."""

    lct: int
    per_node: tuple[str, ...]  # PASS / FAIL per decomposition node
    failing_nodes: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failing_nodes


def check_fenced_or_shared(
    g: Graph,
    td: TreeDecomposition,
    cycles: LongestCycleSet | None = None,
    result: TransversalResult | None = None,
) -> FencedOrSharedReport:
    """At every bag: lct == 1, or some longest cycle is fenced by the bag and
    meets it at most three times.  A failing node would contradict the theory
    this tool checks, so failures carry the node id."""
    if not is_biconnected(g):
        raise ValueError("check requires a 2-connected graph")
    if not td.is_full or td.width != 3:
        raise ValueError("check requires a full width-3 decomposition")
    if cycles is None:
        cycles = enumerate_longest_cycles(g)
    if result is None:
        result = compute_lct(g, family=cycles)
    if result.lct == 1:
        statuses = tuple(PASS for _ in range(td.node_count))
        return FencedOrSharedReport(1, statuses, ())
    statuses = []
    failing = []
    for t in range(td.node_count):
        bag = set(td.bags[t])
        ok = any(
            cross_or_fence(g, c, bag) is Fencing.FENCED and len(c.vertex_set & bag) <= 3
            for c in cycles
        )
        statuses.append(PASS if ok else FAIL)
        if not ok:
            failing.append(t)
    return FencedOrSharedReport(result.lct, tuple(statuses), tuple(failing))


@dataclass(frozen=True)
class ComponentFamily:
    """Components of G minus the bag whose branch lies in the triple's branch
    union, with the anchoring neighbor node of each component."""

    components: tuple[tuple[int, ...], ...]
    anchors: tuple[int, ...]  # neighbor node of t holding each component's branch


def component_family(g: Graph, ctx: BagContext) -> ComponentFamily:
    if ctx.delta is None:
        raise ValueError("component families need a distinguished triple")
    bu = branch_union(ctx.td, ctx.t, ctx.delta)
    comps = []
    anchors = []
    for block in components_after_removal(g, ctx.bag):
        br = branch_of_vertex(ctx.td, ctx.t, block[0])
        if not br.nodes <= bu.nodes:
            continue
        neighbor = next(u for u in ctx.td.node_adj[ctx.t] if u in br.nodes)
        comps.append(block)
        anchors.append(neighbor)
    return ComponentFamily(tuple(comps), tuple(anchors))


def check_pairwise_and_common(
    g: Graph, ctx: BagContext, cycles: LongestCycleSet | None = None
) -> CheckOutcome:
    """When all three 2-jump families at the triple are nonempty, verify that

    (i) some qualifying component contains a vertex of every pairwise
        intersection of the jump-family cycles, and
    (ii) a single vertex inside the triple lies on all of them.
    """
    if ctx.delta is None:
        raise ValueError("check needs a distinguished triple")
    if cycles is None:
        cycles = enumerate_longest_cycles(g)
    fams = build_families(g, ctx, cycles).by_triple[ctx.delta]
    if any(not fams.jump2[p] for p in fams.jump2):
        empty = [p for p in sorted(fams.jump2) if not fams.jump2[p]]
        return CheckOutcome(PREMISE_NOT_MET, f"empty 2-jump families at pairs {empty}")
    family = fams.jump_union()
    comp_fam = component_family(g, ctx)
    witness_component = None
    for block in comp_fam.components:
        bset = set(block)
        if all(
            c.vertex_set & d.vertex_set & bset
            for c, d in combinations(family, 2)
        ):
            witness_component = block
            break
    if witness_component is None:
        bad = next(
            (c, d)
            for c, d in combinations(family, 2)
            if not any(c.vertex_set & d.vertex_set & set(b) for b in comp_fam.components)
        )
        return CheckOutcome(
            FAIL,
            "no qualifying component carries all pairwise intersections",
            (bad[0].vertices, bad[1].vertices),
        )
    common = set(ctx.inside_vertices())
    for c in family:
        common &= c.vertex_set
    if not common:
        return CheckOutcome(
            FAIL,
            "jump families share no vertex inside the triple",
            (witness_component,),
        )
    return CheckOutcome(PASS, witness=(witness_component, min(common)))


def check_escape_cycle(
    g: Graph,
    ctx: BagContext,
    cycles: LongestCycleSet | None = None,
    result: TransversalResult | None = None,
) -> CheckOutcome:
    """When lct > 1 and every pair of the triple has a 2-jumping longest cycle,
    some longest cycle meets the bag at most once, or is outside the triple,
    or is inside and meets it twice, or is inside, meets it three times and is
    fenced by it."""
    if ctx.delta is None:
        raise ValueError("check needs a distinguished triple")
    if cycles is None:
        cycles = enumerate_longest_cycles(g)
    if result is None:
        result = compute_lct(g, family=cycles)
    if result.lct <= 1:
        return CheckOutcome(PREMISE_NOT_MET, "all longest cycles share a vertex (lct = 1)")
    fams = build_families(g, ctx, cycles).by_triple[ctx.delta]
    if any(not fams.jump2[p] for p in fams.jump2):
        empty = [p for p in sorted(fams.jump2) if not fams.jump2[p]]
        return CheckOutcome(PREMISE_NOT_MET, f"empty 2-jump families at pairs {empty}")
    dset = set(ctx.delta)
    for c in cycles:
        if len(c.vertex_set & set(ctx.bag)) <= 1:
            return CheckOutcome(PASS, "a longest cycle meets the bag at most once", (c.vertices,))
        if len(c.vertex_set & dset) < 2:
            continue
        posture = cycle_posture(ctx, c)
        if posture.tag is Posture.OUTSIDE:
            return CheckOutcome(PASS, "a longest cycle is outside the triple", (c.vertices,))
        if posture.tag is Posture.INSIDE and posture.intersect_count == 2:
            return CheckOutcome(PASS, "an inside longest cycle meets the triple twice", (c.vertices,))
        if (
            posture.tag is Posture.INSIDE
            and posture.intersect_count == 3
            and not separates(g, dset, c.vertex_set)
        ):
            return CheckOutcome(
                PASS, "an inside longest cycle meets the triple thrice, fenced by it", (c.vertices,)
            )
    return CheckOutcome(FAIL, "no longest cycle satisfies any of the stated shapes")


@dataclass(frozen=True)
class ConjectureFinding:
    """Outcome of scanning one graph for a two-vertex transversal.

    Findings are reported, never asserted.  A counterexample (lct >= 3) carries
    an exhaustive refutation: for every vertex pair, one longest cycle missing
    both, so the finding re-verifies without this tool.
    """

    status: str  # "consistent" | "COUNTEREXAMPLE"
    lct: int
    length: int
    cycle_count: int
    witness: tuple[int, ...]
    refutation: tuple[tuple[int, int, tuple[int, ...]], ...] = field(default=())


def conjecture_scan(
    g: Graph,
    cap: int = DEFAULT_ENUMERATION_CAP,
    max_steps: int | None = None,
    treewidth_known: bool = False,
) -> ConjectureFinding:
    """Scan one 2-connected graph of treewidth <= 4 for a 2-vertex transversal."""
    if not is_biconnected(g):
        raise ValueError("conjecture scan requires a 2-connected graph")
    if not treewidth_known:
        from .decomposition import exact_treewidth

        width, _ = exact_treewidth(g)
        if width > 4:
            raise ValueError(f"conjecture scan requires treewidth <= 4, got {width}")
    res = compute_lct(g, cap=cap, max_steps=max_steps)
    if res.lct <= 2:
        return ConjectureFinding("consistent", res.lct, res.family.length, len(res.family), res.witness)
    refutation = []
    for u, v in combinations(range(g.n), 2):
        missed = next(c for c in res.family if u not in c.vertex_set and v not in c.vertex_set)
        refutation.append((u, v, missed.vertices))
    return ConjectureFinding(
        "COUNTEREXAMPLE", res.lct, res.family.length, len(res.family), res.witness, tuple(refutation)
    )


def check_min_cycle_length_premise(
    two_connected: bool, tw_is_3: bool, lct: int, length: int
) -> CheckOutcome:
    """Longest cycles have length >= 5 whenever the headline premises hold.

    The premise (2-connected, treewidth 3, lct > 1) is provably empty, so on
    real corpora this counts vacuous passes rather than testing anything."""
    if not (two_connected and tw_is_3 and lct > 1):
        return CheckOutcome(VACUOUS_PASS, "premise empty: lct = 1 or wrong width/connectivity")
    return CheckOutcome(PASS if length >= 5 else FAIL, f"longest cycle length {length}")


def check_equivalent_two_cross_jump(
    g: Graph,
    td: TreeDecomposition,
    cycles: LongestCycleSet,
    lct: int,
) -> CheckOutcome:
    """When lct > 1 and all 2-crossing longest cycles at a bag meet it in the
    same pair, each of them must jump both triples containing that pair.

    Premise-gated like the length side condition; vacuous on every graph where
    all longest cycles intersect."""
    if lct <= 1:
        return CheckOutcome(VACUOUS_PASS, "premise empty: lct = 1")
    met_anywhere = False
    for t in range(td.node_count):
        ctx = BagContext(td, t)
        bag = set(td.bags[t])
        x2 = [
            c
            for c in cycles
            if len(c.vertex_set & bag) == 2 and cross_or_fence(g, c, bag) is Fencing.CROSSES
        ]
        if not x2:
            continue
        if not all(s_equivalent(x2[0], c, bag) for c in x2[1:]):
            continue
        met_anywhere = True
        pair = tuple(sorted(x2[0].vertex_set & bag))
        triples = [tuple(sorted(set(pair) | {w})) for w in td.bags[t] if w not in pair]
        for c in x2:
            for delta in triples:
                if cycle_posture(ctx.with_delta(delta), c).tag is not Posture.JUMP:
                    return CheckOutcome(
                        FAIL,
                        f"2-crossing cycle fails to jump triple {delta} at node {t}",
                        (c.vertices,),
                    )
    if not met_anywhere:
        return CheckOutcome(VACUOUS_PASS, "no bag with an equivalent 2-crossing family")
    return CheckOutcome(PASS)
