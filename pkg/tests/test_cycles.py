import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lctw.cycles import (
    Cycle,
    EnumerationBudgetExceeded,
    EnumerationCapExceeded,
    PathSegment,
    enumerate_longest_cycles,
    join,
    longest_cycle_length_td,
    parts,
    tails,
)
from lctw.decomposition import DecompositionError, TreeDecomposition, exact_treewidth, full_tree_decomposition
from lctw.fixtures import complete_graph, cycle_graph, path_graph
from lctw.graph import Graph


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def brute_force_longest_cycles(g):
    """Independent enumeration: vertex subsets, then all cyclic orders."""
    best = 0
    found = set()
    for k in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            first = subset[0]
            for perm in itertools.permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue  # direction dedup
                seq = (first,) + perm
                if all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                    if k > best:
                        best = k
                        found = set()
                    if k == best:
                        found.add(Cycle(seq))
    return best, found


def test_enumerate_trivial_examples(k4, c5):
    lcs = enumerate_longest_cycles(k4)
    assert lcs.length == 4 and len(lcs.cycles) == 3  # (4-1)!/2 Hamiltonian cycles
    lcs5 = enumerate_longest_cycles(c5)
    assert lcs5.length == 5 and len(lcs5.cycles) == 1
    tri = enumerate_longest_cycles(complete_graph(3))
    assert tri.length == 3 and len(tri.cycles) == 1


def test_enumerate_acyclic():
    lcs = enumerate_longest_cycles(path_graph(5))
    assert lcs.length == 0 and lcs.cycles == ()


def test_enumerate_petersen_frozen(petersen_graph):
    lcs = enumerate_longest_cycles(petersen_graph)
    assert lcs.length == 9
    assert len(lcs.cycles) == 20


def test_enumerate_matches_bruteforce():
    rng = random.Random(91)
    for _ in range(90):
        n = rng.randint(3, 8)
        g = random_graph(rng, n, rng.choice([0.25, 0.4, 0.6]))
        lcs = enumerate_longest_cycles(g)
        blen, bset = brute_force_longest_cycles(g)
        assert lcs.length == blen
        assert set(lcs.cycles) == bset
    for seed in (3, 4):
        g = random_graph(random.Random(seed), 10, 0.3)
        lcs = enumerate_longest_cycles(g)
        blen, bset = brute_force_longest_cycles(g)
        assert (lcs.length, set(lcs.cycles)) == (blen, bset)


def test_enumerate_deterministic_order(petersen_graph):
    a = enumerate_longest_cycles(petersen_graph)
    b = enumerate_longest_cycles(petersen_graph)
    assert a.cycles == b.cycles
    assert list(a.cycles) == sorted(a.cycles)


def test_enumeration_caps():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_longest_cycles(Graph(19, []), cap=18)
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_longest_cycles(complete_graph(8), max_steps=5)


def test_cycle_canonical_form():
    c = Cycle((2, 0, 1, 3))
    assert c.vertices[0] == 0
    assert c.vertices[1] < c.vertices[-1]
    with pytest.raises(ValueError):
        Cycle((0, 1))
    with pytest.raises(ValueError):
        Cycle((0, 1, 1))


@settings(max_examples=80)
@given(st.integers(3, 9), st.integers(0, 8), st.booleans())
def test_cycle_canonical_invariance(k, rot, flip):
    seq = tuple(range(10, 10 + k))
    rotated = seq[rot % k :] + seq[: rot % k]
    if flip:
        rotated = tuple(reversed(rotated))
    assert Cycle(rotated) == Cycle(seq)


def test_cycle_from_sequence_validates(k4):
    with pytest.raises(ValueError):
        Cycle.from_sequence(cycle_graph(5), (0, 1, 3))


def test_parts_fixture_example(fig):
    g, nm = fig
    c2 = Cycle.from_sequence(g, [nm["v3"], nm["v4"], nm["c"], nm["a"], nm["b"]])
    segs = parts(c2, [nm["a"], nm["b"], nm["c"]])
    by_len = sorted(len(s) for s in segs)
    assert by_len == [1, 1, 3]
    ends = {tuple(sorted(s.ends)) for s in segs}
    assert ends == {(nm["a"], nm["c"]), (nm["a"], nm["b"]), (nm["b"], nm["c"])}


def test_parts_trivial():
    tri = Cycle((0, 1, 2))
    assert [len(p) for p in parts(tri, (0, 1, 2))] == [1, 1, 1]
    c6 = Cycle(tuple(range(6)))
    segs = parts(c6, (0, 3))
    assert sorted(len(s) for s in segs) == [3, 3]
    with pytest.raises(ValueError):
        parts(c6, (0,))


def test_parts_reconstruction():
    rng = random.Random(17)
    for _ in range(80):
        n = rng.randint(3, 9)
        cyc = Cycle(tuple(rng.sample(range(12), n)))
        marks = rng.sample(cyc.vertices, rng.randint(2, n))
        segs = parts(cyc, marks)
        assert len(segs) == len(marks)
        acc = segs[0]
        for s in segs[1:]:
            acc = join(acc, s)
        assert isinstance(acc, Cycle)
        assert acc == cyc


def test_tails():
    p = PathSegment((0, 1, 2))
    a, b = tails(p, 1)
    assert a.vertices == (0, 1) and b.vertices == (1, 2)
    a, b = tails(p, 0)
    assert a.vertices == (0,) and b.vertices == (0, 1, 2)
    with pytest.raises(ValueError):
        tails(p, 9)


def test_tails_fixture(fig):
    g, nm = fig
    p2 = PathSegment.from_sequence(g, [nm["v3"], nm["c"], nm["d"], nm["b"], nm["v4"]])
    a, b = tails(p2, nm["d"])
    assert a.vertices == (nm["v3"], nm["c"], nm["d"])
    assert b.vertices == (nm["d"], nm["b"], nm["v4"])


def test_join_cases(fig):
    # two internally disjoint a-b paths of lengths 2 and 3 close into a 5-cycle
    p = PathSegment((0, 2, 1))
    q = PathSegment((0, 3, 4, 1))
    out = join(p, q)
    assert isinstance(out, Cycle) and len(out) == 5
    # sharing an internal vertex -> undefined
    assert join(PathSegment((0, 2, 1)), PathSegment((0, 2, 3))) is None
    g, nm = fig
    ca = PathSegment.from_sequence(g, [nm["c"], nm["a"]])
    ab = PathSegment.from_sequence(g, [nm["a"], nm["b"]])
    out = join(ca, ab)
    assert isinstance(out, PathSegment)
    assert out.vertices in ((nm["c"], nm["a"], nm["b"]), (nm["b"], nm["a"], nm["c"]))


def test_join_single_vertex_overlap():
    assert join(PathSegment((0,)), PathSegment((0,))).vertices == (0,)


def test_td_dp_trivial(k4, c5):
    td = full_tree_decomposition(k4, 3)
    assert longest_cycle_length_td(k4, td) == 4
    w, td5 = exact_treewidth(c5)
    assert longest_cycle_length_td(c5, td5) == 5


def test_td_dp_invalid_decomposition(k4):
    bad = TreeDecomposition([(0, 1)], [])
    with pytest.raises(DecompositionError):
        longest_cycle_length_td(k4, bad)


def test_td_dp_matches_enumeration_on_corpus(small_corpus):
    for g, natural in small_corpus:
        lcs = enumerate_longest_cycles(g)
        assert longest_cycle_length_td(g, natural) == lcs.length


def test_td_dp_matches_enumeration_arbitrary():
    rng = random.Random(55)
    for _ in range(40):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.choice([0.3, 0.5]))
        width, td = exact_treewidth(g)
        assert longest_cycle_length_td(g, td) == enumerate_longest_cycles(g).length


def test_longest_cycles_pairwise_intersection(small_corpus):
    # every pair of longest cycles in a 2-connected graph shares >= 2 vertices
    for g, _ in small_corpus[:25]:
        lcs = enumerate_longest_cycles(g)
        for c, d in itertools.combinations(lcs.cycles, 2):
            assert len(c.vertex_set & d.vertex_set) >= 2
