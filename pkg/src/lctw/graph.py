"""Simple undirected graphs: construction, graph6 text I/O, separation predicates.

Vertices are integer ids 0..n-1.  Graphs are immutable after construction and
every operation in this module is a pure function of its inputs, so instances
can be shared freely across concurrent workers.
"""

from __future__ import annotations

from typing import Iterable

__all__ = [
    "Graph",
    "Graph6Error",
    "parse_graph6",
    "write_graph6",
    "is_biconnected",
    "components_after_removal",
    "separates",
    "vset",
]

GRAPH6_MAX_N = 62  # single-byte size form only


class Graph6Error(ValueError):
    """Malformed graph6 text; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def vset(vertices: Iterable[int]) -> tuple[int, ...]:
    """Normalize a vertex collection to a sorted duplicate-free tuple."""
    return tuple(sorted(set(vertices)))


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``edges`` is a frozenset of (u, v) pairs with u < v; ``adj`` holds sorted
    neighbor tuples and ``nbr_mask`` the same adjacency as bitmasks (bit v of
    ``nbr_mask[u]`` set iff uv is an edge).
    """

    __slots__ = ("n", "edges", "adj", "nbr_mask", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        masks = [0] * n
        for u, v in norm:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges = frozenset(norm)
        self.adj = tuple(tuple(sorted(_bits(m))) for m in masks)
        self.nbr_mask = tuple(masks)
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def parse_graph6(text: str) -> Graph:
    """Decode one line of graph6 text (single-byte size form, n <= 62).

    Bit layout per the de-facto graph6 specification: after the size byte
    (n + 63) come ceil(n(n-1)/2 / 6) bytes, each carrying six bits offset by
    63, covering the upper triangle of the adjacency matrix in column-major
    order x(0,1), x(0,2), x(1,2), x(0,3), ...
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string: missing header byte", 0)
    head = ord(s[0])
    if head == 126:
        raise Graph6Error("multi-byte size form not supported (n > 62)", 0)
    if not 63 <= head <= 126:
        raise Graph6Error(f"malformed header byte {s[0]!r}", 0)
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated bit stream: expected {nbytes} body bytes, got {len(body)}", len(s)
        )
    if len(body) > nbytes:
        raise Graph6Error("unexpected bytes after graph6 body", 1 + nbytes)
    bits = 0
    for i, ch in enumerate(body):
        val = ord(ch)
        if not 63 <= val <= 126:
            raise Graph6Error(f"out-of-range character {ch!r}", 1 + i)
        bits = (bits << 6) | (val - 63)
    bits >>= 6 * nbytes - nbits  # drop padding
    edges = []
    k = nbits
    for col in range(1, n):
        for row in range(col):
            k -= 1
            if (bits >> k) & 1:
                edges.append((row, col))
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line; inverse of parse_graph6."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 single-byte size form caps n at {GRAPH6_MAX_N}, got {g.n}")
    bits = 0
    nbits = g.n * (g.n - 1) // 2
    for col in range(1, g.n):
        for row in range(col):
            bits = (bits << 1) | ((g.nbr_mask[row] >> col) & 1)
    pad = (6 - nbits % 6) % 6
    bits <<= pad
    out = [chr(g.n + 63)]
    for shift in range(nbits + pad - 6, -1, -6):
        out.append(chr(((bits >> shift) & 0x3F) + 63))
    return "".join(out)


def is_biconnected(g: Graph) -> bool:
    """True iff g is connected, has >= 3 vertices, and has no articulation vertex.

    Single iterative depth-first traversal with low-link values; the test
    suite validates it against the delete-one-vertex brute force.
    """
    n = g.n
    if n < 3:
        return False
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    disc[0] = low[0] = 0
    counter = 1
    root_children = 0
    stack = [(0, iter(g.adj[0]))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                stack.append((w, iter(g.adj[w])))
                advanced = True
                break
            elif w != parent[v]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != 0 and low[v] >= disc[p]:
                    return False  # p is an articulation vertex
    if counter != n:
        return False  # disconnected
    return root_children <= 1


def components_after_removal(g: Graph, s: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Connected components of G - S, each a sorted tuple, ordered by minimum vertex."""
    s_mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        s_mask |= 1 << v
    alive = ((1 << g.n) - 1) & ~s_mask
    blocks = []
    while alive:
        start = alive & -alive
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.nbr_mask[v]
            frontier = nxt & alive & ~comp
            comp |= frontier
        blocks.append(tuple(_bits(comp)))
        alive &= ~comp
    return tuple(blocks)


def separates(g: Graph, s: Iterable[int], x: Iterable[int]) -> bool:
    """True iff removing s leaves two vertices of x in different components."""
    s_set = set(s)
    outside = [v for v in set(x) if v not in s_set]
    if len(outside) < 2:
        return False
    blocks = components_after_removal(g, s_set)
    where = {}
    for i, block in enumerate(blocks):
        for v in block:
            where[v] = i
    first = where[outside[0]]
    return any(where[v] != first for v in outside[1:])
