import random

import pytest

from coronapoly.canon import (
    CONNECTED_GRAPH_COUNTS,
    GRAPH_COUNTS,
    TREE_COUNTS,
    are_isomorphic,
    canonical_code,
    enumerate_graphs,
    enumerate_trees,
)
from coronapoly.errors import ResourceLimitError
from coronapoly.graphs import Graph, cycle_graph, disjoint_union, path_graph
from knowngraphs import EQUAL_TREES10_A, EQUAL_TREES10_B, PAIR5_A, PAIR5_B


def test_relabeling_invariance():
    p = path_graph(4)
    reversed_p = Graph(4, [(3, 2), (2, 1), (1, 0)])
    assert canonical_code(p) == canonical_code(reversed_p)
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(1, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph(n, [(perm[u], perm[v]) for u, v in edges])
        assert canonical_code(g) == canonical_code(h)


def test_distinguishes_equal_polynomial_pairs():
    assert canonical_code(PAIR5_A) != canonical_code(PAIR5_B)
    assert canonical_code(EQUAL_TREES10_A) != canonical_code(EQUAL_TREES10_B)
    assert not are_isomorphic(PAIR5_A, PAIR5_B)


def test_forest_codes_cover_components():
    f1 = disjoint_union(path_graph(3), path_graph(2))
    f2 = disjoint_union(path_graph(2), path_graph(3))
    assert canonical_code(f1) == canonical_code(f2)
    assert canonical_code(f1) != canonical_code(path_graph(5))


def test_code_limits():
    with pytest.raises(ResourceLimitError):
        canonical_code(cycle_graph(11))
    # forests are fine well past the general cap
    canonical_code(path_graph(40))


def test_tree_counts():
    for n, expect in list(TREE_COUNTS.items())[:10]:
        trees = enumerate_trees(n)
        assert len(trees) == expect
        codes = {canonical_code(t) for t in trees}
        assert len(codes) == expect


def test_tree_enumeration_range():
    with pytest.raises(ValueError):
        enumerate_trees(0)
    with pytest.raises(ValueError):
        enumerate_trees(17)


def test_graph_counts_small():
    for n in range(1, 7):
        gs = enumerate_graphs(n)
        assert len(gs) == GRAPH_COUNTS[n]
        assert sum(1 for g in gs if len(g.adj) == n) == len(gs)
        cc = enumerate_graphs(n, connected=True)
        assert len(cc) == CONNECTED_GRAPH_COUNTS[n]


def test_graph_enumeration_caps():
    with pytest.raises(ResourceLimitError):
        enumerate_graphs(9)
    with pytest.raises(ValueError):
        enumerate_graphs(0)
