"""Canonical forms, isomorphism, and isomorphism-class enumeration."""
import random
from itertools import combinations, permutations

import pytest

from toughlab.canon import are_isomorphic, canonical_code, canonical_form, enumerate_graphs
from toughlab.connectivity import is_connected
from toughlab.graphs import Graph, relabel

from oracles import ref_canonical_key

# classic counts: all / connected isomorphism classes on n vertices
ALL_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {0: 1, 1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_canonical_form_is_isomorphic_relabel():
    rng = random.Random(51)
    for _ in range(60):
        g = _random_graph(rng, rng.randrange(7))
        h = canonical_form(g)
        assert h.n == g.n and h.edge_count == g.edge_count
        assert ref_canonical_key(g.n, g.edges()) == ref_canonical_key(h.n, h.edges())


def test_canonical_code_invariant_under_relabeling():
    rng = random.Random(52)
    for _ in range(60):
        g = _random_graph(rng, rng.randrange(2, 8))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_code(relabel(g, perm)) == canonical_code(g)


def test_canonical_code_separates_classes_exhaustively():
    # all labeled graphs on 5 vertices, deduplicated two ways
    cells = list(combinations(range(5), 2))
    lib_codes = set()
    ref_keys = set()
    pairs = set()
    for bits in range(1 << len(cells)):
        edges = [cells[i] for i in range(len(cells)) if bits >> i & 1]
        g = Graph.from_edges(5, edges)
        code, key = canonical_code(g), ref_canonical_key(5, edges)
        lib_codes.add(code)
        ref_keys.add(key)
        pairs.add((code, key))
    assert len(lib_codes) == len(ref_keys) == ALL_COUNTS[5]
    # the two canonical maps induce the same partition
    assert len(pairs) == ALL_COUNTS[5]


def test_are_isomorphic_positive():
    rng = random.Random(53)
    for _ in range(40):
        g = _random_graph(rng, rng.randrange(1, 8))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert are_isomorphic(g, relabel(g, perm))


def test_are_isomorphic_distinguishes_same_degree_sequence():
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert c6.degrees() == two_triangles.degrees()
    assert not are_isomorphic(c6, two_triangles)


def test_are_isomorphic_trivial_negatives():
    assert not are_isomorphic(Graph.empty(3), Graph.empty(4))
    assert not are_isomorphic(Graph.complete(3), Graph.empty(3))


@pytest.mark.parametrize("n", sorted(ALL_COUNTS))
def test_enumeration_counts(n):
    assert sum(1 for _ in enumerate_graphs(n)) == ALL_COUNTS[n]
    assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) == CONNECTED_COUNTS[n]


def test_enumeration_yields_canonical_representatives_in_order():
    for n in range(6):
        codes = [canonical_code(g) for g in enumerate_graphs(n)]
        assert codes == sorted(codes)
        assert len(set(codes)) == len(codes)
        for g in enumerate_graphs(n):
            assert canonical_form(g) == g


def test_enumeration_matches_brute_force_dedup():
    for n in range(5):
        cells = list(combinations(range(n), 2))
        seen = set()
        for bits in range(1 << len(cells)):
            edges = [cells[i] for i in range(len(cells)) if bits >> i & 1]
            seen.add(ref_canonical_key(n, edges))
        assert len(seen) == ALL_COUNTS[n]


def test_connected_filter_agrees_with_is_connected():
    for n in range(6):
        want = [g for g in enumerate_graphs(n) if is_connected(g)]
        got = list(enumerate_graphs(n, connected_only=True))
        assert got == want


def test_size_limits():
    with pytest.raises(ValueError):
        canonical_form(Graph.empty(11))
    with pytest.raises(ValueError):
        list(enumerate_graphs(11))
    with pytest.raises(ValueError):
        list(enumerate_graphs(-1))


def test_small_graphs_have_nontrivial_automorphisms():
    # every graph on 2..5 vertices has a non-trivial automorphism (the
    # smallest asymmetric graph has 6 vertices), so each labeled orbit
    # is strictly smaller than n!
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            orbit = {relabel(g, p) for p in permutations(range(n))}
            assert len(orbit) < len(list(permutations(range(n))))
