"""Cycles and cycle segments: exact enumeration of all longest cycles, an
independent length oracle over tree decompositions, and the segment algebra
(parts between marked vertices, tails at a vertex, path/cycle concatenation).

Enumeration is complete by contract: every longest cycle is returned, in
canonical form, and pruning is reachability-based so it never cuts a valid
completion.  Budgets fail loudly rather than sampling, because downstream
checks require the complete family.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import DecompositionError, TreeDecomposition, validate
from .graph import Graph

__all__ = [
    "Cycle",
    "PathSegment",
    "LongestCycleSet",
    "EnumerationCapExceeded",
    "EnumerationBudgetExceeded",
    "enumerate_longest_cycles",
    "longest_cycle_length_td",
    "parts",
    "tails",
    "join",
]

DEFAULT_ENUMERATION_CAP = 18


class EnumerationCapExceeded(RuntimeError):
    pass


class EnumerationBudgetExceeded(RuntimeError):
    """Step budget ran out; no partial result is returned."""


def _canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[1] < rot[-1]:
        return rot
    return (rot[0],) + tuple(reversed(rot[1:]))


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle, stored canonically: the rotation starting at the minimum
    vertex whose second element is the smaller of that vertex's two neighbors."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.vertices)
        if len(seq) < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got {len(seq)}")
        if len(set(seq)) != len(seq):
            raise ValueError("cycle vertices must be pairwise distinct")
        object.__setattr__(self, "vertices", _canonical(seq))

    @classmethod
    def from_sequence(cls, g: Graph, seq) -> "Cycle":
        seq = tuple(seq)
        for a, b in zip(seq, seq[1:] + seq[:1]):
            if not g.has_edge(a, b):
                raise ValueError(f"({a},{b}) is not an edge of the host graph")
        return cls(seq)

    def __len__(self):
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        cached = getattr(self, "_vset", None)
        if cached is None:
            cached = frozenset(self.vertices)
            object.__setattr__(self, "_vset", cached)
        return cached

    def edge_set(self) -> frozenset[tuple[int, int]]:
        seq = self.vertices
        return frozenset(
            (a, b) if a < b else (b, a) for a, b in zip(seq, seq[1:] + seq[:1])
        )


@dataclass(frozen=True)
class PathSegment:
    """A simple path given by its vertex sequence; a single vertex is a
    length-zero segment (it arises as a tail at an endpoint)."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.vertices)
        if not seq:
            raise ValueError("a path segment needs at least one vertex")
        if len(set(seq)) != len(seq):
            raise ValueError("path vertices must be pairwise distinct")
        object.__setattr__(self, "vertices", seq)

    @classmethod
    def from_sequence(cls, g: Graph, seq) -> "PathSegment":
        seq = tuple(seq)
        for a, b in zip(seq, seq[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"({a},{b}) is not an edge of the host graph")
        return cls(seq)

    def __len__(self):
        return len(self.vertices) - 1  # edge count

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (a, b) if a < b else (b, a) for a, b in zip(self.vertices, self.vertices[1:])
        )


@dataclass(frozen=True)
class LongestCycleSet:
    """The complete family of longest cycles of one graph.

    length == 0 with no cycles iff the graph is acyclic.  ``steps`` records the
    search effort so reports can carry the enumeration budget actually used.
    """

    length: int
    cycles: tuple[Cycle, ...]
    steps: int = field(default=0, compare=False)

    def __iter__(self):
        return iter(self.cycles)

    def __len__(self):
        return len(self.cycles)


def enumerate_longest_cycles(
    g: Graph, cap: int = DEFAULT_ENUMERATION_CAP, max_steps: int | None = None
) -> LongestCycleSet:
    """All distinct longest cycles of g, canonically deduplicated and sorted.

    Backtracking from the minimum-id vertex of each cycle.  A branch is pruned
    only when the vertices still reachable from the head cannot bring the path
    up to the target length, or cannot reconnect to the start; both bounds are
    sound for completeness.  Finding the maximum length first and then
    re-enumerating at that exact length keeps the best-length bound out of the
    completeness-critical pass.
    """
    if g.n > cap:
        raise EnumerationCapExceeded(f"enumeration needs n <= {cap}, got {g.n}")
    counter = [0]
    best = _search(g, None, counter, max_steps)
    if best == 0:
        return LongestCycleSet(0, (), steps=counter[0])
    found: set[tuple[int, ...]] = set()
    _search(g, best, counter, max_steps, found)
    cycles = tuple(sorted(Cycle(seq) for seq in found))
    return LongestCycleSet(best, cycles, steps=counter[0])


def _search(g, target, counter, max_steps, sink=None) -> int:
    """One backtracking pass over paths rooted at each cycle's minimum vertex.

    With target=None returns the maximum cycle length; with a target collects
    into ``sink`` every cycle of exactly that length (direction-deduplicated by
    requiring second vertex < last vertex at closing time).
    """
    n = g.n
    nbr = g.nbr_mask
    best = 0
    for s in range(n):
        if len(g.adj[s]) < 2:
            continue
        s_bit = 1 << s
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)  # vertices > s
        path = [s]
        used = s_bit
        stack = [iter([v for v in g.adj[s] if v > s])]
        while stack:
            advanced = False
            for w in stack[-1]:
                counter[0] += 1
                if max_steps is not None and counter[0] > max_steps:
                    raise EnumerationBudgetExceeded(
                        f"enumeration exceeded {max_steps} steps; no partial results"
                    )
                wb = 1 << w
                if nbr[w] & s_bit and len(path) >= 2:
                    clen = len(path) + 1
                    if target is None:
                        if clen > best:
                            best = clen
                    elif clen == target and path[1] < w:
                        sink.add(tuple(path) + (w,))
                goal = target if target is not None else best + 1
                if target is not None and len(path) + 1 >= target:
                    continue  # any closure after extending would exceed the target
                free = allowed & ~used & ~wb
                if len(path) + 1 + bin(free).count("1") < goal:
                    continue
                # Vertices reachable from w through unused ids bound the extension.
                comp = wb
                frontier = wb
                while frontier:
                    nxt = 0
                    f = frontier
                    while f:
                        low = f & -f
                        nxt |= nbr[low.bit_length() - 1]
                        f ^= low
                    frontier = nxt & free & ~comp
                    comp |= frontier
                if not comp & nbr[s]:
                    continue  # no way back to the start
                if len(path) + bin(comp).count("1") < goal:
                    continue
                path.append(w)
                used |= wb
                stack.append(iter([x for x in g.adj[w] if (allowed >> x) & 1 and not (used >> x) & 1]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if len(path) > 1:
                    used &= ~(1 << path.pop())
        if target is None and best >= n:
            break
    return best


def parts(c: Cycle, s) -> list[PathSegment]:
    """Segments of a cycle between consecutive marked vertices.

    Each segment starts and ends in s with no marked vertex inside;
    concatenating all segments in cyclic order reconstructs the cycle, and the
    segment count equals the number of marked vertices on the cycle.
    """
    marked = set(s) & set(c.vertices)
    if len(marked) < 2:
        raise ValueError(f"need at least 2 marked vertices on the cycle, got {len(marked)}")
    seq = c.vertices
    k = len(seq)
    idxs = [i for i, v in enumerate(seq) if v in marked]
    out = []
    for j, a in enumerate(idxs):
        b = idxs[(j + 1) % len(idxs)] + (k if j + 1 == len(idxs) else 0)
        out.append(PathSegment(tuple(seq[i % k] for i in range(a, b + 1))))
    return out


def tails(p: PathSegment, v: int) -> tuple[PathSegment, PathSegment]:
    """Split a path at v into the two subpaths meeting only at v."""
    if v not in p.vertices:
        raise ValueError(f"vertex {v} is not on the path")
    i = p.vertices.index(v)
    return PathSegment(p.vertices[: i + 1]), PathSegment(p.vertices[i:])


def join(p: PathSegment, q: PathSegment) -> PathSegment | Cycle | None:
    """Union of two segments if it forms a path or a cycle, else None.

    The union is taken as a graph (vertex union, edge union); None marks the
    'undefined' outcome when the union is neither a path nor a cycle.
    """
    edges = set(p.edge_set()) | set(q.edge_set())
    verts = set(p.vertices) | set(q.vertices)
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(nb) > 2 for nb in adj.values()):
        return None
    start = min(verts)
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(verts):
        return None
    degree1 = sorted(v for v in verts if len(adj[v]) == 1)
    if not degree1:
        if len(verts) == 1:
            return PathSegment((start,))
        walk = [start]
        prev = None
        while True:
            nxt = [w for w in adj[walk[-1]] if w != prev]
            prev = walk[-1]
            if nxt[0] == start:
                break
            walk.append(nxt[0])
        return Cycle(tuple(walk))
    if len(degree1) == 2:
        walk = [degree1[0]]
        prev = None
        while len(walk) < len(verts):
            nxt = [w for w in adj[walk[-1]] if w != prev]
            prev = walk[-1]
            walk.append(nxt[0])
        return PathSegment(tuple(walk))
    return None


# --- Longest-cycle length via dynamic programming over a nice refinement ---

def longest_cycle_length_td(g: Graph, td: TreeDecomposition) -> int:
    """Length of a longest cycle computed over a tree decomposition.

    Independent of the backtracking enumerator: per-bag states are perfect
    matchings on partial-path endpoints plus vertex degrees in {0,1,2} and a
    closed-cycle bit; transitions follow a nice refinement with explicit
    edge-introduce nodes.  Time is exponential only in the decomposition width.
    """
    problems = validate(g, td)
    if problems:
        raise DecompositionError(f"invalid decomposition: {problems[0]}")
    ops = _nice_ops(g, td)
    stack: list[dict] = []
    for kind, payload, bag in ops:
        if kind == "leaf":
            stack.append({((), (), False): 0})
        elif kind == "intro":
            stack.append(_dp_intro(stack.pop(), payload, bag))
        elif kind == "forget":
            stack.append(_dp_forget(stack.pop(), payload, bag))
        elif kind == "edge":
            stack.append(_dp_edge(stack.pop(), payload, bag))
        else:  # join
            right = stack.pop()
            left = stack.pop()
            stack.append(_dp_join(left, right, bag))
    final = stack.pop()
    best = 0
    for (degs, matching, closed), length in final.items():
        if closed and length > best:
            best = length
    return best


def _nice_ops(g: Graph, td: TreeDecomposition):
    """Post-order op list (kind, payload, bag) for the nice refinement."""
    root = 0
    order = []
    parent = {root: None}
    stack = [root]
    while stack:
        t = stack.pop()
        order.append(t)
        for w in td.node_adj[t]:
            if w != parent[t]:
                parent[w] = t
                stack.append(w)
    children: dict[int, list[int]] = {t: [] for t in order}
    for t in order[1:]:
        children[parent[t]].append(t)

    built: dict[int, list] = {}
    for t in reversed(order):
        bag = tuple(td.bags[t])
        subs = []
        for c in sorted(children[t]):
            sub = built.pop(c)
            cur = set(td.bags[c])
            for v in sorted(set(td.bags[c]) - set(bag)):
                cur.discard(v)
                sub.append(("forget", v, tuple(sorted(cur))))
            for v in sorted(set(bag) - set(td.bags[c])):
                cur.add(v)
                sub.append(("intro", v, tuple(sorted(cur))))
            subs.append(sub)
        if not subs:
            ops = [("leaf", None, ())]
            cur = set()
            for v in bag:
                cur.add(v)
                ops.append(("intro", v, tuple(sorted(cur))))
        else:
            ops = subs[0]
            for sub in subs[1:]:
                ops = ops + sub + [("join", None, bag)]
        built[t] = ops
    ops = built[root]
    cur = set(td.bags[root])
    for v in sorted(td.bags[root]):
        cur.discard(v)
        ops.append(("forget", v, tuple(sorted(cur))))

    # Place each edge once, at the first post-order op whose bag has both ends.
    for u, v in sorted(g.edges):
        for i, (kind, payload, bag) in enumerate(ops):
            if u in bag and v in bag:
                ops.insert(i + 1, ("edge", (u, v), bag))
                break
        else:
            raise DecompositionError(f"edge ({u},{v}) not covered by any bag")
    return ops


def _dp_intro(states, v, bag):
    pos = bag.index(v)
    out = {}
    for (degs, matching, closed), length in states.items():
        key = (degs[:pos] + (0,) + degs[pos:], matching, closed)
        if out.get(key, -1) < length:
            out[key] = length
    return out


def _dp_forget(states, v, bag):
    # bag here is the post-forget bag
    pos = tuple(sorted(bag + (v,))).index(v)
    out = {}
    for (degs, matching, closed), length in states.items():
        if degs[pos] == 1:
            continue  # a dangling path endpoint can never be completed
        key = (degs[:pos] + degs[pos + 1:], matching, closed)
        if out.get(key, -1) < length:
            out[key] = length
    return out


def _dp_edge(states, uv, bag):
    u, v = uv
    pu, pv = bag.index(u), bag.index(v)
    out = dict(states)

    def put(key, length):
        if out.get(key, -1) < length:
            out[key] = length

    for (degs, matching, closed), length in states.items():
        if closed or degs[pu] >= 2 or degs[pv] >= 2:
            continue
        du, dv = degs[pu], degs[pv]
        dl = list(degs)
        dl[pu] += 1
        dl[pv] += 1
        ndegs = tuple(dl)
        if du == 0 and dv == 0:
            nm = tuple(sorted(matching + ((min(u, v), max(u, v)),)))
            put((ndegs, nm, False), length + 1)
        elif du == 1 and dv == 1:
            partner = dict(matching) | {b: a for a, b in matching}
            if partner[u] == v:
                if len(matching) == 1:
                    put((ndegs, (), True), length + 1)
            else:
                x, y = partner[u], partner[v]
                nm = tuple(
                    sorted(
                        tuple(p for p in matching if u not in p and v not in p)
                        + ((min(x, y), max(x, y)),)
                    )
                )
                put((ndegs, nm, False), length + 1)
        else:
            end, fresh = (u, v) if du == 1 else (v, u)
            partner = dict(matching) | {b: a for a, b in matching}
            x = partner[end]
            nm = tuple(
                sorted(
                    tuple(p for p in matching if end not in p)
                    + ((min(x, fresh), max(x, fresh)),)
                )
            )
            put((ndegs, nm, False), length + 1)
    return out


def _dp_join(left, right, bag):
    out = {}

    def put(key, length):
        if out.get(key, -1) < length:
            out[key] = length

    for (degs1, m1, closed1), l1 in left.items():
        for (degs2, m2, closed2), l2 in right.items():
            if closed1 and closed2:
                continue
            if closed1 or closed2:
                other_degs, other_len = (degs2, l2) if closed1 else (degs1, l1)
                if other_len == 0 and all(d == 0 for d in other_degs):
                    key = (degs1, m1, True) if closed1 else (degs2, m2, True)
                    put(key, l1 + l2)
                continue
            degs = tuple(a + b for a, b in zip(degs1, degs2))
            if any(d > 2 for d in degs):
                continue
            chains, loops = _trace_links(m1, m2)
            if loops > 1:
                continue  # two disjoint closed loops can never merge back
            if loops == 1:
                if chains:
                    continue  # a pending path can never rejoin a closed cycle
                put((degs, (), True), l1 + l2)
            else:
                nm = tuple(sorted((min(a, b), max(a, b)) for a, b in chains))
                put((degs, nm, False), l1 + l2)
    return out


def _trace_links(m1, m2):
    """Chase the union of two endpoint matchings into chains and closed loops.

    Each matching contributes at most one link per vertex, so the union has
    maximum degree 2: its components are open chains (returned as endpoint
    pairs) and closed loops (counted).
    """
    links: dict[int, list[int]] = {}
    for a, b in list(m1) + list(m2):
        links.setdefault(a, []).append(b)
        links.setdefault(b, []).append(a)
    seen = set()
    chains = []
    loops = 0
    for start in sorted(links):
        if start in seen or len(links[start]) != 1:
            continue
        seen.add(start)
        prev, cur = None, start
        while True:
            options = list(links[cur])
            if prev is not None:
                options.remove(prev)
            if not options:
                break
            prev, cur = cur, options[0]
            seen.add(cur)
            if len(links[cur]) == 1:
                break
        chains.append((start, cur))
    for start in sorted(links):
        if start in seen:
            continue
        loops += 1
        prev, cur = None, start
        while True:
            seen.add(cur)
            a, b = links[cur]
            prev, cur = cur, (b if a == prev else a)
            if cur == start:
                break
    return chains, loops
