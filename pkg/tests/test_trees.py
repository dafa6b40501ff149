from fractions import Fraction

import pytest

from ferrers_lab import (
    BipartiteGraph,
    BudgetExceeded,
    Graph,
    MultiPoly,
    Partition,
    bridge_join,
    conjugate,
    enumerate_spanning_trees,
    ferrers_from_partition,
    sigma_bruteforce,
    sigma_formula,
    tau,
    tree_report,
)

from conftest import (
    bipartite_cycle,
    complete_bipartite,
    connected_ferrers_partitions,
    example_staircase,
    random_connected_graph,
)


def test_tau_worked_example():
    assert tau(example_staircase()) == 36


def test_tau_complete_bipartite_grid():
    for m in range(1, 6):
        for n in range(1, 6):
            assert tau(complete_bipartite(m, n)) == m ** (n - 1) * n ** (m - 1)


def test_tau_trees_and_disconnected():
    assert tau(Graph(4, [(1, 2), (2, 3), (3, 4)])) == 1
    assert tau(Graph(4, [(1, 2), (3, 4)])) == 0
    assert tau(Graph(1, [])) == 1
    with pytest.raises(ValueError):
        tau(Graph(0, []))


def test_enumeration_small_cases():
    c4 = Graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert len(enumerate_spanning_trees(c4)) == 4
    assert len(enumerate_spanning_trees(example_staircase())) == 36
    p4 = Graph(4, [(1, 2), (2, 3), (3, 4)])
    assert enumerate_spanning_trees(p4) == [((1, 2), (2, 3), (3, 4))]


def test_enumeration_is_sorted_and_unique():
    trees = enumerate_spanning_trees(example_staircase())
    assert trees == sorted(set(trees))
    for tree in trees:
        assert len(tree) == 6  # spanning trees on 7 vertices


def test_enumeration_matches_tau(rng):
    for _ in range(15):
        g = random_connected_graph(rng, max_n=7)
        assert len(enumerate_spanning_trees(g)) == tau(g)


def test_enumeration_budget_error():
    k55 = complete_bipartite(5, 5)
    with pytest.raises(BudgetExceeded, match="10"):
        enumerate_spanning_trees(k55, budget=10)


def test_enumeration_requires_connected():
    with pytest.raises(ValueError):
        enumerate_spanning_trees(Graph(4, [(1, 2), (3, 4)]))


def test_sigma_bruteforce_single_edge():
    poly = sigma_bruteforce(complete_bipartite(1, 1))
    assert poly == MultiPoly.monomial(2, (1, 1))


def test_sigma_bruteforce_counts_trees(rng):
    g = example_staircase()
    poly = sigma_bruteforce(g)
    assert poly.evaluate([1] * (g.m + g.n)) == 36


def test_sigma_formula_single_edge():
    lam = Partition((1,))
    assert sigma_formula(lam, conjugate(lam)) == MultiPoly.monomial(2, (1, 1))


def test_sigma_formula_matches_bruteforce_k22():
    lam = Partition((2, 2))
    graph = ferrers_from_partition(lam, 2)
    assert sigma_formula(lam, conjugate(lam)) == sigma_bruteforce(graph)


def test_sigma_formula_evaluates_to_tau():
    for parts in [(3, 3, 2, 1), (4, 2, 1), (2, 2, 2), (5, 1)]:
        lam = Partition(parts)
        poly = sigma_formula(lam, conjugate(lam))
        graph = ferrers_from_partition(lam, lam[0])
        assert poly.evaluate([1] * (graph.m + graph.n)) == tau(graph)


def test_sigma_formula_rejects_mismatched_dual():
    with pytest.raises(ValueError):
        sigma_formula(Partition((2, 2)), Partition((2, 1, 1)))
    with pytest.raises(ValueError):
        sigma_formula(Partition((2, 1)), Partition((2, 2)))


def test_sigma_formula_matches_bruteforce_small_staircases():
    for lam in connected_ferrers_partitions(8):
        if lam.size > 8:
            continue
        graph = ferrers_from_partition(lam, lam[0])
        assert sigma_formula(lam, conjugate(lam)) == sigma_bruteforce(graph)


def test_tree_report_values():
    rep = tree_report(example_staircase())
    assert (rep.tau, rep.ferrers_invariant, rep.ferrers_good) == (36, 36, True)
    c6 = bipartite_cycle(3)
    rep = tree_report(c6)
    assert rep.tau == 6
    assert rep.ferrers_invariant == Fraction(64, 9)
    assert rep.ferrers_good
    disconnected = BipartiteGraph(2, 2, [0b01, 0b01])
    rep = tree_report(disconnected)
    assert rep.tau == 0
    assert rep.ferrers_good


def test_edge_deletion_monotone_in_tau(rng):
    for _ in range(10):
        g = random_connected_graph(rng, max_n=6)
        base = tau(g)
        for e in g.sorted_edges():
            reduced = g.delete_edge(e)
            if reduced.is_connected():
                assert tau(reduced) < base
            else:
                assert tau(reduced) == 0


def test_bridge_join_tau_product():
    g1 = example_staircase()
    g2 = complete_bipartite(2, 2)
    h = bridge_join(g1, g2, 2, 1)
    assert tau(h) == tau(g1) * tau(g2)


def test_multipoly_arithmetic():
    x = MultiPoly.variable_sum(3, [0])
    y = MultiPoly.variable_sum(3, [1])
    p = (x + y) * (x + y)
    assert p.terms == {(2, 0, 0): 1, (1, 1, 0): 2, (0, 2, 0): 1}
    assert p.evaluate([2, 3, 10]) == 25
    assert (p + MultiPoly.monomial(3, (2, 0, 0), -1)).terms[(1, 1, 0)] == 2
