import itertools
import random

import pytest

from lctw.decomposition import (
    DecompositionError,
    TreeDecomposition,
    TreewidthCapExceeded,
    branch_at,
    branch_of_route,
    branch_of_vertex,
    branch_union,
    check_separator_property,
    exact_treewidth,
    full_tree_decomposition,
    has_treewidth_at_most_2,
    validate,
)
from lctw.fixtures import complete_graph, path_graph
from lctw.generate import GenSpec, generate_k_tree
from lctw.graph import Graph


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_validate_single_bag_k4(k4):
    td = TreeDecomposition([(0, 1, 2, 3)], [])
    assert validate(k4, td) == []
    assert td.width == 3 and td.is_full


def test_validate_reports_missing_vertex_and_edge(k4):
    td = TreeDecomposition([(0, 1, 2)], [])
    problems = validate(k4, td)
    assert any("vertex 3" in p for p in problems)
    assert any("edge (0,3)" in p for p in problems)


def test_validate_reports_disconnected_subtree():
    g = Graph(3, [(0, 1), (1, 2)])
    td = TreeDecomposition([(0, 1), (1, 2), (0,)], [(0, 1), (1, 2)])
    problems = validate(g, td)
    assert any("subtree-connectivity" in p and "vertex 0" in p for p in problems)


def test_validate_reports_tree_shape():
    g = Graph(2, [(0, 1)])
    td = TreeDecomposition([(0, 1), (0, 1)], [])
    assert any("tree-shape" in p for p in validate(g, td))


def test_exact_treewidth_known_values(k4, c5, petersen_graph, fig):
    assert exact_treewidth(k4)[0] == 3
    assert exact_treewidth(c5)[0] == 2
    assert exact_treewidth(petersen_graph)[0] == 4
    assert exact_treewidth(fig[0])[0] == 3
    assert exact_treewidth(path_graph(6))[0] == 1
    assert exact_treewidth(Graph(3, []))[0] == 0


def test_exact_treewidth_cap():
    with pytest.raises(TreewidthCapExceeded):
        exact_treewidth(Graph(30, []), cap=24)


def test_exact_treewidth_decomposition_validates():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        width, td = exact_treewidth(g)
        assert validate(g, td) == []
        assert td.width == width


def brute_force_treewidth(g):
    """Minimum over all elimination orders of the maximum elimination degree."""
    best = g.n
    for order in itertools.permutations(range(g.n)):
        adj = {v: set(g.adj[v]) for v in range(g.n)}
        width = 0
        for v in order:
            width = max(width, len(adj[v]))
            if width >= best:
                break
            nbrs = adj.pop(v)
            for a in nbrs:
                adj[a].discard(v)
                adj[a].update(nbrs - {a})
        else:
            best = min(best, width)
    return best


def test_exact_treewidth_agrees_with_bruteforce():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.choice([0.25, 0.45, 0.7]))
        assert exact_treewidth(g)[0] == brute_force_treewidth(g)
    # larger spot checks up to the invariant's n <= 9 bound
    for n, seed in ((8, 1), (8, 2), (9, 3)):
        g = random_graph(random.Random(seed), n, 0.35)
        assert exact_treewidth(g)[0] == brute_force_treewidth(g)


def test_treewidth_at_most_2_agrees_with_exact():
    rng = random.Random(13)
    for _ in range(150):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.35, 0.6]))
        assert has_treewidth_at_most_2(g) == (exact_treewidth(g)[0] <= 2)


def test_full_tree_decomposition_k4(k4):
    td = full_tree_decomposition(k4, 3)
    assert td.bags == ((0, 1, 2, 3),)
    assert td.is_full and td.width == 3


def test_full_tree_decomposition_fixture(fig):
    g, _ = fig
    td = full_tree_decomposition(g, 3)
    assert validate(g, td) == []
    assert td.is_full and td.width == 3
    assert td.node_count == g.n - 3  # n - k bags for connected graphs
    assert (0, 1, 2, 3) in td.bags  # the clique {a,b,c,d} must occupy some bag


def test_full_tree_decomposition_pads_below_width(c5):
    td = full_tree_decomposition(c5, 3)
    assert validate(c5, td) == [] and td.is_full and td.width == 3


def test_full_tree_decomposition_errors():
    with pytest.raises(DecompositionError):
        full_tree_decomposition(complete_graph(3), 3)  # n < k+1
    with pytest.raises(DecompositionError):
        full_tree_decomposition(complete_graph(5), 3)  # tw exceeds k


def test_full_tree_decomposition_from_generated_k_trees():
    for seed in range(25):
        g, natural = generate_k_tree(GenSpec(n=5 + seed % 8, k=3, seed=seed))
        assert validate(g, natural) == [] and natural.is_full
        td = full_tree_decomposition(g, 3, base=natural)
        assert validate(g, td) == [] and td.is_full and td.width == 3
        assert td.node_count == g.n - 3


def test_full_tree_decomposition_random_partial(small_corpus):
    for g, natural in small_corpus[:30]:
        td = full_tree_decomposition(g, 3, base=natural)
        assert validate(g, td) == [] and td.is_full and td.width == 3


def test_branch_at_path_decomposition():
    g = path_graph(5)
    td = TreeDecomposition([(0, 1), (1, 2), (2, 3), (3, 4)], [(0, 1), (1, 2), (2, 3)])
    left = branch_at(td, 1, 0)
    right = branch_at(td, 1, 2)
    assert left.nodes == frozenset({0}) and left.vertices == frozenset({0})
    assert right.nodes == frozenset({2, 3}) and right.vertices == frozenset({3, 4})
    with pytest.raises(DecompositionError):
        branch_at(td, 1, 1)


def test_branch_of_vertex(fig):
    g, nm = fig
    td = full_tree_decomposition(g, 3)
    t = td.bags.index((0, 1, 2, 3))
    br = branch_of_vertex(td, t, nm["v5"])
    assert nm["v5"] in br.vertices
    with pytest.raises(DecompositionError):
        branch_of_vertex(td, t, nm["a"])  # vertex in the bag


def test_branch_union_cases(k4):
    td = TreeDecomposition([(0, 1, 2, 3)], [])
    bu = branch_union(td, 0, (0, 1, 2))
    assert bu.nodes == frozenset() and bu.vertices == frozenset()
    with pytest.raises(DecompositionError):
        branch_union(td, 0, (0, 1))  # not a triple
    with pytest.raises(DecompositionError):
        branch_union(td, 0, (0, 1, 9))


def test_branch_union_attached_vertex():
    # 3-tree: K4 plus vertex 4 attached to triangle {0,1,2}
    g, td = generate_k_tree(GenSpec(n=5, k=3, seed=0))
    # bags: {0,1,2,3} and some {x,y,z,4}; find the triple shared by both bags
    t = 0
    delta = tuple(sorted(set(td.bags[0]) & set(td.bags[1])))
    bu = branch_union(td, t, delta)
    assert bu.nodes == frozenset({1})
    assert 4 in bu.vertices


def test_branch_of_route(fig):
    g, nm = fig
    td = full_tree_decomposition(g, 3)
    t = td.bags.index((0, 1, 2, 3))
    inside = branch_of_route(td, t, (0, 1, 3))  # wholly inside the bag
    assert inside.is_empty
    br = branch_of_route(td, t, (nm["a"], nm["v5"], nm["c"]))
    assert nm["v5"] in br.vertices
    with pytest.raises(DecompositionError):
        branch_of_route(td, t, (nm["v5"], nm["v1"]))  # spans two branches


def test_separator_property_fixture_exhaustive(fig):
    g, _ = fig
    td = full_tree_decomposition(g, 3)
    for a, b in sorted(td.tree_edges):
        for t, tp in ((a, b), (b, a)):
            side_u = branch_at(td, t, tp).vertices - set(td.bags[t])
            side_v = branch_at(td, tp, t).vertices - set(td.bags[tp])
            for u in side_u:
                for v in side_v:
                    assert check_separator_property(g, td, (t, tp), u, v)


def test_separator_property_generated_k_trees():
    for seed in range(12):
        g, td = generate_k_tree(GenSpec(n=9, k=3, seed=100 + seed))
        for a, b in sorted(td.tree_edges):
            side_u = branch_at(td, a, b).vertices - set(td.bags[a])
            side_v = branch_at(td, b, a).vertices - set(td.bags[b])
            for u in side_u:
                for v in side_v:
                    assert check_separator_property(g, td, (a, b), u, v)


def test_separator_property_precondition_errors(fig):
    g, _ = fig
    td = full_tree_decomposition(g, 3)
    a, b = sorted(td.tree_edges)[0]
    u_bag = td.bags[a][0]
    with pytest.raises(DecompositionError):
        check_separator_property(g, td, (a, b), u_bag, u_bag)
    with pytest.raises(DecompositionError):
        check_separator_property(g, td, (a, a), 0, 1)
