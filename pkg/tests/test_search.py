import json
import random

from coronapoly.graphs import (
    Graph,
    complete_graph,
    corona,
    disjoint_union,
    encode_graph6,
    is_tree,
    is_well_covered,
    parse_graph6,
    path_graph,
    star_graph,
)
from coronapoly.indpoly import independence_polynomial
from coronapoly.search import (
    conjecture2_scan,
    corona_equivalence_check,
    group_by_polynomial,
    hamidoune_scan,
    merge_partitions,
    partition_graphs,
    spider_uniqueness_scan,
    well_covered_trees,
)
from corpus import graphs_upto, trees_exactly
from knowngraphs import (
    C4_PLUS_K1,
    CHAIR_TREE,
    DENSE6_A,
    DENSE6_B,
    EQUAL_TREES10_A,
    EQUAL_TREES10_B,
    EQUAL_TREES10_POLY,
    PAIR5_A,
    PAIR5_B,
    PAIR5_POLY,
    PAIR6_A,
    PAIR6_B,
    PAIR6_POLY,
)


def test_known_pairs_classify_together():
    from oracles import isomorphic_by_permutation_search

    report = group_by_polynomial([PAIR5_A, PAIR5_B])
    assert len(report.classes) == 1
    cls = report.classes[0]
    assert cls.coefficients == PAIR5_POLY
    assert cls.all_isomorphic is False
    assert len(set(cls.codes)) == 2

    report = group_by_polynomial([PAIR6_A, PAIR6_B])
    assert report.classes[0].coefficients == PAIR6_POLY
    assert report.classes[0].all_isomorphic is False

    # re-verify the non-isomorphism verdicts by explicit permutation search
    assert not isomorphic_by_permutation_search(PAIR5_A, PAIR5_B)
    assert not isomorphic_by_permutation_search(PAIR6_A, PAIR6_B)
    assert not isomorphic_by_permutation_search(DENSE6_A, DENSE6_B)
    assert not isomorphic_by_permutation_search(EQUAL_TREES10_A, EQUAL_TREES10_B)
    assert isomorphic_by_permutation_search(PAIR5_A, PAIR5_A)


def test_verdicts_match_permutation_search():
    from oracles import isomorphic_by_permutation_search

    report = group_by_polynomial(graphs_upto(5))
    for cls in report.classes:
        graphs = [parse_graph6(m) for m in cls.members]
        pairwise_iso = all(
            isomorphic_by_permutation_search(graphs[0], h) for h in graphs[1:]
        )
        assert cls.all_isomorphic == pairwise_iso


def test_partition_recovers_input_multiset():
    graphs = graphs_upto(5, connected=True) * 2
    report = group_by_polynomial(graphs, isomorphism_verdicts=False)
    members = [m for c in report.classes for m in c.members]
    assert sorted(members) == sorted(encode_graph6(g) for g in graphs)
    assert report.graphs_seen == len(graphs)


def test_order_independence():
    graphs = [encode_graph6(g) for g in graphs_upto(5)]
    a = group_by_polynomial(graphs, isomorphism_verdicts=False)
    rng = random.Random(3)
    shuffled = graphs[:]
    rng.shuffle(shuffled)
    b = group_by_polynomial(shuffled, isomorphism_verdicts=False)
    assert [(c.coefficients, sorted(c.members)) for c in a.classes] == [
        (c.coefficients, sorted(c.members)) for c in b.classes
    ]


def test_merge_contract():
    graphs = [encode_graph6(g) for g in graphs_upto(6)]
    whole = partition_graphs(graphs)
    third = len(graphs) // 3
    pieces = [
        partition_graphs(graphs[:third]),
        partition_graphs(graphs[third : 2 * third]),
        partition_graphs(graphs[2 * third :]),
    ]
    merged = merge_partitions(merge_partitions(pieces[0], pieces[1]), pieces[2])
    assert {k: sorted(v) for k, v in merged[0].items()} == {
        k: sorted(v) for k, v in whole[0].items()
    }
    assert merged[1] == whole[1]


def test_stream_errors_recorded_not_fatal():
    report = group_by_polynomial(["A_", "!!notgraph6!!", "B?"], isomorphism_verdicts=False)
    assert report.graphs_seen == 2
    assert len(report.errors) == 1


def test_trees10_contains_known_class():
    report = group_by_polynomial(trees_exactly(10))
    targets = [c for c in report.classes if c.coefficients == EQUAL_TREES10_POLY]
    assert len(targets) == 1
    cls = targets[0]
    assert len(cls.members) >= 2
    assert cls.all_isomorphic is False
    codes = {encode_graph6(EQUAL_TREES10_A), encode_graph6(EQUAL_TREES10_B)}
    # members are canonical representatives, so compare up to isomorphism
    from coronapoly.canon import canonical_code

    member_codes = {canonical_code(parse_graph6(m)) for m in cls.members}
    known_codes = {canonical_code(parse_graph6(s)) for s in codes}
    assert known_codes <= member_codes


def test_corona_equivalence_check():
    assert corona_equivalence_check(EQUAL_TREES10_A, EQUAL_TREES10_B)
    assert corona_equivalence_check(complete_graph(2), path_graph(3))
    rng = random.Random(29)
    graphs = graphs_upto(6, connected=True)
    for _ in range(200):
        g, h = rng.choice(graphs), rng.choice(graphs)
        assert corona_equivalence_check(g, h)


def test_equal_polynomial_closed_under_corona():
    assert independence_polynomial(corona(EQUAL_TREES10_A)) == independence_polynomial(
        corona(EQUAL_TREES10_B)
    )
    u1 = disjoint_union(EQUAL_TREES10_A, EQUAL_TREES10_A)
    u2 = disjoint_union(EQUAL_TREES10_B, EQUAL_TREES10_B)
    assert independence_polynomial(u1) == independence_polynomial(u2)
    assert independence_polynomial(u1) == independence_polynomial(EQUAL_TREES10_A) ** 2


def test_classes_closed_under_corona():
    # every equivalence class found at small order stays one class after
    # taking coronas of all members
    report = group_by_polynomial(graphs_upto(6), isomorphism_verdicts=False)
    for cls in report.nontrivial_classes():
        polys = {
            independence_polynomial(corona(parse_graph6(m))).coeffs
            for m in cls.members
        }
        assert len(polys) == 1, cls.members


def test_spider_uniqueness_small():
    report = spider_uniqueness_scan(6)
    assert report.violations == []
    # one star per skeleton order matches
    assert [n for n, _ in report.matches] == [2, 3, 4, 5, 6]
    for n, g6 in report.matches:
        from coronapoly.graphs import is_star

        assert is_star(parse_graph6(g6))


def test_well_covered_trees_catalog():
    trees = well_covered_trees(10)
    assert all(is_tree(t) for t in trees)
    assert all(is_well_covered(t) for t in trees)
    orders = {t.n for t in trees}
    assert orders == {1, 2, 4, 6, 8, 10}
    # counts match the skeleton counts: one corona per tree on k vertices
    assert sum(1 for t in trees if t.n == 10) == len(trees_exactly(5))


def test_conjecture2_clean_on_small_corpus():
    report = conjecture2_scan(graphs_upto(6, connected=True), max_tree_order=12)
    assert report.clean
    assert report.supporting_matches > 0
    assert report.skipped_disconnected == 0
    payload = json.loads(report.to_jsonl_lines()[0])
    assert "no counterexample" in payload["verdict"]


def test_conjecture2_skips_disconnected():
    report = conjecture2_scan([disjoint_union(complete_graph(2), Graph(1))], 8)
    assert report.skipped_disconnected == 1
    assert report.graphs_scanned == 0


def test_graph_variant_of_the_tree_statement_fails():
    # a well-covered graph and a non-well-covered tree share a polynomial,
    # so replacing "tree" with "graph" in the statement is false
    assert independence_polynomial(CHAIR_TREE) == independence_polynomial(C4_PLUS_K1)
    assert is_tree(CHAIR_TREE) and not is_well_covered(CHAIR_TREE)
    assert is_well_covered(C4_PLUS_K1) and not is_tree(C4_PLUS_K1)
    # and a well-covered non-tree sharing a non-well-covered graph's polynomial
    assert independence_polynomial(DENSE6_A) == independence_polynomial(DENSE6_B)
    assert is_well_covered(DENSE6_B) and not is_well_covered(DENSE6_A)


def test_hamidoune_scan_small():
    report = hamidoune_scan(graphs_upto(6, connected=True))
    assert report.clean
    assert report.claw_free_count > 0
    assert report.nonreal_contrast_count > 0
    # the star with three leaves is the canonical claw: skipped by the filter
    claws = [star_graph(3)]
    sub = hamidoune_scan(claws)
    assert sub.claw_free_count == 0


def test_hamidoune_paths_and_cycles():
    from coronapoly.graphs import cycle_graph

    stream = [path_graph(n) for n in range(1, 13)]
    stream += [cycle_graph(n) for n in range(3, 13)]
    report = hamidoune_scan(stream)
    assert report.clean
    assert report.claw_free_count == len(stream)
