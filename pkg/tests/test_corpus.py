from itertools import permutations

from rigidkit import Graph
from rigidkit.corpus import (
    all_graphs,
    canonical_key,
    nonisomorphic_graphs,
    random_graph,
    random_graph_with_edges,
)
from rigidkit.field import Rng

# numbers of graphs / connected graphs on n unlabeled vertices
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def test_class_counts_match_the_literature():
    for n, expect in GRAPH_COUNTS.items():
        assert len(nonisomorphic_graphs(n)) == expect


def test_connected_class_counts():
    for n, expect in CONNECTED_COUNTS.items():
        assert len(nonisomorphic_graphs(n, connected=True)) == expect


def test_canonical_key_is_isomorphism_invariant():
    rng = Rng(8)
    for i in range(20):
        n = 4 + i % 4
        g = random_graph(n, 0.5, rng.child(i))
        perm = list(range(n))
        for j in range(n - 1, 0, -1):
            k = rng.next_u64() % (j + 1)
            perm[j], perm[k] = perm[k], perm[j]
        h = Graph(n, tuple((perm[a], perm[b]) for a, b in g.edges))
        assert canonical_key(g) == canonical_key(h)


def test_canonical_key_separates_all_classes():
    reps = nonisomorphic_graphs(6)
    assert len({canonical_key(g) for g in reps}) == len(reps)


def test_representatives_cover_all_labeled_graphs_n4():
    keys = {canonical_key(g) for g in all_graphs(4)}
    assert keys == {canonical_key(g) for g in nonisomorphic_graphs(4)}
    assert len(list(all_graphs(4))) == 2**6


def test_all_graphs_ascending_edge_count_start():
    first = next(iter(all_graphs(3)))
    assert first.m == 0


def test_exhaustive_small_against_permutation_classes():
    # independent classification of the 4-vertex graphs by permutation orbit
    orbits = set()
    for g in all_graphs(4):
        orbit = frozenset(
            tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in g.edges))
            for p in permutations(range(4)))
        orbits.add(orbit)
    assert len(orbits) == 11


def test_random_graph_deterministic():
    assert random_graph(8, 0.4, Rng(5)) == random_graph(8, 0.4, Rng(5))


def test_random_graph_with_edges_counts():
    rng = Rng(17)
    for i in range(10):
        g = random_graph_with_edges(9, 14, rng.child(i))
        assert (g.n, g.m) == (9, 14)
