"""Bundled test graphs.

The nine-vertex separation fixture ships with a name table because the core
is numeric: vertices are positional ids and named fixtures carry a side map
names -> ids.
"""

from __future__ import annotations

from .graph import Graph

__all__ = [
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "separation_fixture",
    "petersen",
]


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


# Nine-vertex fixture: a K4 core {a,b,c,d} with five outer vertices.  The
# canonical separator S = {a,b,c,d} splits the rest into {v1},{v2},{v3,v4},{v5}.
_SEP_NAMES = {"a": 0, "b": 1, "c": 2, "d": 3, "v1": 4, "v2": 5, "v3": 6, "v4": 7, "v5": 8}

_SEP_EDGES_NAMED = [
    ("a", "b"), ("b", "c"), ("a", "c"), ("a", "d"), ("b", "d"), ("c", "d"),
    ("b", "v1"), ("d", "v1"), ("b", "v2"), ("d", "v2"),
    ("b", "v3"), ("c", "v4"), ("v3", "v4"), ("v3", "c"), ("v4", "b"),
    ("a", "v1"), ("a", "v2"), ("a", "v5"), ("v5", "c"),
]


def separation_fixture() -> tuple[Graph, dict[str, int]]:
    """The bundled nine-vertex graph and its name->id table."""
    names = dict(_SEP_NAMES)
    edges = [(names[x], names[y]) for x, y in _SEP_EDGES_NAMED]
    return Graph(9, edges), names


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5)."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((i + 5, (i + 2) % 5 + 5))
    return Graph(10, edges)
