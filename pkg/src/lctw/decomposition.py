"""Tree decompositions: validation, exact treewidth, full decompositions, branches.

Exact treewidth runs a dynamic program over vertex subsets of elimination
orders (states are sets of already-eliminated vertices), so it is exponential
in n and capped.  Full decompositions (every bag of size k+1, adjacent bags
sharing exactly k vertices) are produced constructively from any valid
decomposition: contract subset bags, pad undersized bags from neighbors, then
splice one-swap chains across edges whose intersection is still too small.
All tie-breaking is by ascending vertex/node id, so construction output is
byte-for-byte reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, separates

__all__ = [
    "TreeDecomposition",
    "Branch",
    "BranchUnion",
    "DecompositionError",
    "TreewidthCapExceeded",
    "validate",
    "exact_treewidth",
    "has_treewidth_at_most_2",
    "full_tree_decomposition",
    "branch_at",
    "branch_of_vertex",
    "branch_union",
    "branch_of_route",
    "check_separator_property",
]

DEFAULT_TREEWIDTH_CAP = 24


class DecompositionError(ValueError):
    pass


class TreewidthCapExceeded(RuntimeError):
    """Exact treewidth refused: n exceeds the configured cap.

    Signals that a larger budget is needed; heuristic fallbacks are out of scope.
    """


class TreeDecomposition:
    """A tree of bags over a host graph's vertices.

    Nodes are ids 0..len(bags)-1; ``tree_edges`` holds unordered node pairs.
    ``width`` is max bag size minus one.  ``is_full`` is derived: every bag has
    width+1 vertices and every tree edge shares exactly width vertices.
    """

    __slots__ = ("bags", "tree_edges", "width", "is_full", "node_adj")

    def __init__(self, bags: Iterable[Iterable[int]], tree_edges: Iterable[tuple[int, int]]):
        self.bags = tuple(tuple(sorted(set(b))) for b in bags)
        if not self.bags:
            raise DecompositionError("a tree decomposition needs at least one node")
        norm = set()
        for a, b in tree_edges:
            if a == b or not (0 <= a < len(self.bags) and 0 <= b < len(self.bags)):
                raise DecompositionError(f"bad tree edge ({a},{b})")
            norm.add((a, b) if a < b else (b, a))
        self.tree_edges = frozenset(norm)
        adj = [[] for _ in self.bags]
        for a, b in norm:
            adj[a].append(b)
            adj[b].append(a)
        self.node_adj = tuple(tuple(sorted(x)) for x in adj)
        self.width = max(len(b) for b in self.bags) - 1
        k = self.width
        self.is_full = all(len(b) == k + 1 for b in self.bags) and all(
            len(set(self.bags[a]) & set(self.bags[b])) == k for a, b in norm
        )

    @property
    def node_count(self) -> int:
        return len(self.bags)

    def __repr__(self):
        return f"TreeDecomposition(nodes={self.node_count}, width={self.width}, full={self.is_full})"


def validate(g: Graph, td: TreeDecomposition) -> list[str]:
    """Check the three decomposition conditions plus tree shape and fullness.

    Returns a list of violation strings (empty means valid); each violation
    names the failed condition and a witness.  Violations are data, not errors.
    """
    out = []
    nodes = td.node_count
    if len(td.tree_edges) != nodes - 1:
        out.append(f"tree-shape: {nodes} nodes need {nodes - 1} edges, found {len(td.tree_edges)}")
    seen = {0}
    stack = [0]
    while stack:
        for w in td.node_adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != nodes:
        out.append(f"tree-shape: tree is disconnected (reached {len(seen)} of {nodes} nodes)")
    for t, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < g.n:
                out.append(f"bag-range: node {t} holds out-of-range vertex {v}")
    covered = set()
    for bag in td.bags:
        covered.update(bag)
    for v in range(g.n):
        if v not in covered:
            out.append(f"vertex-cover: vertex {v} is in no bag")
    bag_sets = [set(b) for b in td.bags]
    for u, v in sorted(g.edges):
        if not any(u in bs and v in bs for bs in bag_sets):
            out.append(f"edge-cover: edge ({u},{v}) is in no bag")
    for v in range(g.n):
        holding = [t for t in range(nodes) if v in bag_sets[t]]
        if not holding:
            continue
        reach = {holding[0]}
        stack = [holding[0]]
        holding_set = set(holding)
        while stack:
            for w in td.node_adj[stack.pop()]:
                if w in holding_set and w not in reach:
                    reach.add(w)
                    stack.append(w)
        if len(reach) != len(holding):
            out.append(f"subtree-connectivity: nodes holding vertex {v} are disconnected")
    if td.is_full:
        k = td.width
        for t, bag in enumerate(td.bags):
            if len(bag) != k + 1:
                out.append(f"fullness: node {t} bag has size {len(bag)}, expected {k + 1}")
        for a, b in sorted(td.tree_edges):
            inter = len(bag_sets[a] & bag_sets[b])
            if inter != k:
                out.append(f"fullness: edge ({a},{b}) shares {inter} vertices, expected {k}")
    return out


def _subset_components(nbr_mask, s_mask: int):
    """Connected components of the induced subgraph on bitmask s_mask."""
    comps = []
    rem = s_mask
    while rem:
        start = rem & -rem
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= nbr_mask[low.bit_length() - 1]
                f ^= low
            frontier = nxt & s_mask & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def exact_treewidth(g: Graph, cap: int = DEFAULT_TREEWIDTH_CAP) -> tuple[int, TreeDecomposition]:
    """Exact treewidth with an optimal decomposition.

    Dynamic program over subsets S of eliminated vertices:
    tw(S) = min over v in S of max(tw(S - v), |Q(v, S - v)|) where Q counts the
    outside neighbors of v's component in G[S].  2^n states, so n is capped.
    """
    n = g.n
    if n > cap:
        raise TreewidthCapExceeded(f"exact treewidth needs n <= {cap}, got {n}")
    if n == 0:
        raise DecompositionError("treewidth of the empty graph is undefined here")
    if n == 1:
        return 0, TreeDecomposition([(0,)], [])
    nbr = g.nbr_mask
    full = (1 << n) - 1
    size = 1 << n
    tw = [0] * size
    pick = [0] * size
    tw[0] = -1
    for s_mask in range(1, size):
        best = n + 1
        bestv = -1
        for comp in _subset_components(nbr, s_mask):
            outside = 0
            c = comp
            while c:
                low = c & -c
                outside |= nbr[low.bit_length() - 1]
                c ^= low
            q = bin(outside & ~s_mask).count("1")
            c = comp
            while c:
                low = c & -c
                c ^= low
                prev = tw[s_mask ^ low]
                cand = q if q > prev else prev
                if cand < best:
                    best = cand
                    bestv = low.bit_length() - 1
        tw[s_mask] = best
        pick[s_mask] = bestv
    width = tw[full]
    order = []
    s_mask = full
    while s_mask:
        v = pick[s_mask]  # the vertex eliminated last within s_mask
        order.append(v)
        s_mask ^= 1 << v
    order.reverse()
    td = _decomposition_from_order(g, order)
    return width, td


def _decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """Tree decomposition induced by an elimination order (fill-in simulation)."""
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(a) for a in g.adj]
    bags = []
    higher_of = []
    for v in order:
        higher = {u for u in adj[v] if pos[u] > pos[v]}
        bags.append(tuple(sorted({v} | higher)))
        higher_of.append(higher)
        for a in higher:
            adj[a].discard(v)
            for b in higher:
                if a != b:
                    adj[a].add(b)
    node_of = {v: i for i, v in enumerate(order)}
    edges = []
    for i, v in enumerate(order):
        higher = higher_of[i]
        if higher:
            parent = min(higher, key=lambda u: pos[u])
            edges.append((i, node_of[parent]))
        elif i + 1 < len(order):
            edges.append((i, i + 1))  # keep the tree connected across components
    return TreeDecomposition(bags, edges)


def has_treewidth_at_most_2(g: Graph) -> bool:
    """Decide tw(G) <= 2 by the classical degree reduction.

    Repeatedly delete vertices of degree <= 1 and contract degree-2 vertices
    into an edge between their neighbors; tw <= 2 iff this empties the graph.
    """
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    queue = sorted(adj)
    while queue:
        nxt = []
        progressed = False
        for v in queue:
            if v not in adj:
                continue
            deg = len(adj[v])
            if deg <= 1:
                for u in adj[v]:
                    adj[u].discard(v)
                del adj[v]
                progressed = True
            elif deg == 2:
                x, y = sorted(adj[v])
                adj[x].discard(v)
                adj[y].discard(v)
                adj[x].add(y)
                adj[y].add(x)
                del adj[v]
                progressed = True
            else:
                nxt.append(v)
        if not progressed:
            return False
        queue = sorted(adj)
    return True


def full_tree_decomposition(
    g: Graph,
    k: int,
    base: TreeDecomposition | None = None,
    cap: int = DEFAULT_TREEWIDTH_CAP,
) -> TreeDecomposition:
    """A width-k decomposition with all bags of size k+1 and adjacent bags sharing k.

    Requires tw(g) <= k and n >= k+1.  ``base`` may supply a starting
    decomposition (e.g. the natural one from a generated k-tree); otherwise an
    optimal one is computed.  When tw(g) < k the bags are padded up to width
    exactly k by the same deterministic rules.
    """
    if g.n < k + 1:
        raise DecompositionError(
            f"no full decomposition of width {k} on {g.n} < {k + 1} vertices: "
            "a bag of size k+1 cannot exist"
        )
    if base is None:
        width, base = exact_treewidth(g, cap=cap)
        if width > k:
            raise DecompositionError(f"treewidth {width} exceeds requested width {k}")
    else:
        if base.width > k:
            raise DecompositionError(f"base decomposition width {base.width} exceeds {k}")
        if validate(g, base):
            raise DecompositionError("base decomposition is not valid for this graph")

    bags = {i: set(b) for i, b in enumerate(base.bags)}
    nbrs = {i: set(base.node_adj[i]) for i in range(base.node_count)}

    def contract_subset_bags():
        changed = True
        while changed:
            changed = False
            for t in sorted(bags):
                for u in sorted(nbrs[t]):
                    if bags[t] <= bags[u]:
                        for w in nbrs[t]:
                            if w != u:
                                nbrs[w].discard(t)
                                nbrs[w].add(u)
                                nbrs[u].add(w)
                        nbrs[u].discard(t)
                        del bags[t]
                        del nbrs[t]
                        changed = True
                        break
                if changed:
                    break

    contract_subset_bags()
    # Pad undersized bags from adjacent bags, smallest vertex id first.  Each
    # round either grows a bag or contracts, so this terminates.
    while any(len(b) < k + 1 for b in bags.values()):
        grew = False
        for t in sorted(bags):
            if len(bags[t]) >= k + 1:
                continue
            pool = sorted(
                v for u in sorted(nbrs[t]) for v in bags[u] if v not in bags[t]
            )
            for v in pool:
                bags[t].add(v)
                grew = True
                if len(bags[t]) == k + 1:
                    break
        contract_subset_bags()
        if not grew and any(len(b) < k + 1 for b in bags.values()):
            raise DecompositionError("padding stalled; graph too small or disconnected badly")

    # Splice one-swap chains across edges sharing fewer than k vertices.
    out_bags = {t: frozenset(b) for t, b in bags.items()}
    out_edges = set()
    next_id = max(bags) + 1
    done = set()
    for t in sorted(bags):
        for u in sorted(nbrs[t]):
            key = (min(t, u), max(t, u))
            if key in done:
                continue
            done.add(key)
            a, b = key
            drop = sorted(bags[a] - bags[b])
            add = sorted(bags[b] - bags[a])
            prev = a
            cur = set(bags[a])
            for i in range(len(drop) - 1):
                cur = set(cur)
                cur.discard(drop[i])
                cur.add(add[i])
                out_bags[next_id] = frozenset(cur)
                out_edges.add((prev, next_id))
                prev = next_id
                next_id += 1
            out_edges.add((prev, b))

    relabel = {t: i for i, t in enumerate(sorted(out_bags))}
    td = TreeDecomposition(
        [sorted(out_bags[t]) for t in sorted(out_bags)],
        [(relabel[a], relabel[b]) for a, b in out_edges],
    )
    problems = validate(g, td)
    if problems or not td.is_full or td.width != k:
        raise DecompositionError(f"full decomposition construction failed: {problems}")
    return td


@dataclass(frozen=True)
class Branch:
    """One component of the decomposition tree with node ``anchor`` removed.

    ``vertices`` is the union of the component's bags minus the anchor's bag.
    """

    anchor: int
    nodes: frozenset[int]
    vertices: frozenset[int]

    @property
    def is_empty(self) -> bool:
        return not self.nodes


@dataclass(frozen=True)
class BranchUnion:
    """Union of branches at neighbors of ``anchor`` whose bags contain a fixed triple."""

    anchor: int
    nodes: frozenset[int]
    vertices: frozenset[int]


def _component_of(td: TreeDecomposition, t: int, start: int) -> frozenset[int]:
    seen = {start}
    stack = [start]
    while stack:
        for w in td.node_adj[stack.pop()]:
            if w != t and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def _branch_vertices(td: TreeDecomposition, t: int, nodes: frozenset[int]) -> frozenset[int]:
    verts = set()
    for x in nodes:
        verts.update(td.bags[x])
    return frozenset(verts - set(td.bags[t]))


def branch_at(td: TreeDecomposition, t: int, other: int) -> Branch:
    """The component of T - t containing node ``other``."""
    if other == t:
        raise DecompositionError("branch undefined: node coincides with the removed node")
    nodes = _component_of(td, t, other)
    return Branch(t, nodes, _branch_vertices(td, t, nodes))


def branch_of_vertex(td: TreeDecomposition, t: int, v: int) -> Branch:
    """The branch of T at t holding vertex v; v must lie outside the bag of t."""
    if v in td.bags[t]:
        raise DecompositionError(f"branch of vertex {v} at node {t} undefined: vertex is in the bag")
    holders = [x for x in range(td.node_count) if v in td.bags[x]]
    if not holders:
        raise DecompositionError(f"vertex {v} appears in no bag")
    return branch_at(td, t, holders[0])


def branch_union(td: TreeDecomposition, t: int, delta: Iterable[int]) -> BranchUnion:
    """Union of branches at neighbors of t whose bags contain the triple delta."""
    dset = set(delta)
    if len(dset) != 3:
        raise DecompositionError(f"delta must be a triple, got {sorted(dset)}")
    if not dset <= set(td.bags[t]):
        raise DecompositionError("delta must be contained in the bag of t")
    if not td.is_full or td.width != 3:
        raise DecompositionError("branch unions are defined on full width-3 decompositions")
    nodes: set[int] = set()
    for u in td.node_adj[t]:
        if dset <= set(td.bags[u]):
            nodes.update(_component_of(td, t, u))
    fnodes = frozenset(nodes)
    return BranchUnion(t, fnodes, _branch_vertices(td, t, fnodes))


def branch_of_route(td: TreeDecomposition, t: int, vertices: Iterable[int]) -> Branch:
    """Branch holding a path or cycle fenced by the bag of t.

    All vertices outside the bag must share one branch (guaranteed for fenced
    routes on valid decompositions); a route inside the bag maps to the
    explicit empty branch.
    """
    outside = [v for v in set(vertices) if v not in td.bags[t]]
    if not outside:
        return Branch(t, frozenset(), frozenset())
    br = branch_of_vertex(td, t, outside[0])
    for v in outside[1:]:
        if v not in br.vertices:
            raise DecompositionError(
                f"route spans several branches at node {t}: {outside[0]} vs {v}"
            )
    return br


def check_separator_property(
    g: Graph, td: TreeDecomposition, edge: tuple[int, int], u: int, v: int
) -> bool:
    """Whether the shared bag of a tree edge separates u from v.

    Preconditions: u outside the bag of t, v outside the bag of t', u in the
    branch of t holding t', v in the branch of t' holding t.  On any valid
    decomposition the result is always True; the invariant suite asserts this.
    """
    t, tp = edge
    if (min(t, tp), max(t, tp)) not in td.tree_edges:
        raise DecompositionError(f"({t},{tp}) is not a tree edge")
    if u in td.bags[t]:
        raise DecompositionError(f"u={u} must lie outside the bag of node {t}")
    if v in td.bags[tp]:
        raise DecompositionError(f"v={v} must lie outside the bag of node {tp}")
    if u not in branch_at(td, t, tp).vertices:
        raise DecompositionError(f"u={u} is not in the branch of {t} toward {tp}")
    if v not in branch_at(td, tp, t).vertices:
        raise DecompositionError(f"v={v} is not in the branch of {tp} toward {t}")
    shared = set(td.bags[t]) & set(td.bags[tp])
    return separates(g, shared, {u, v})
