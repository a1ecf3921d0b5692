import random

import pytest

from priomatch.graph import Graph, Matching
from priomatch.oracle import (
    BudgetExceeded, EnumerationBudget, enumerate_edge_sets, enumerate_matchings,
    oracle_best_score, oracle_has_i_augmenting_path, oracle_max_cardinality,
    oracle_summary,
)

from builders import cycle_graph, naive_best_score, naive_matchings, random_graph


def count(g):
    return sum(1 for _ in enumerate_matchings(g))


def test_small_counts():
    assert count(Graph(3, [(1, 2), (2, 3), (1, 3)], [1] * 3)) == 4
    assert count(Graph(3, [(1, 2), (2, 3)], [1] * 3)) == 3
    assert count(Graph(4, [(1, 2), (3, 4)], [1] * 4)) == 4


def test_each_matching_once():
    rng = random.Random(0)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 7), 12)
        sets = list(enumerate_edge_sets(g))
        assert len(sets) == len(set(sets))
        assert sorted(sets) == sorted(naive_matchings(g))


def test_best_score_examples():
    assert oracle_best_score(Graph(2, [(1, 2)], [1, 1])).digits == (2, 0)
    assert oracle_best_score(cycle_graph(5)).digits == (4, 0, 0, 0, 0)
    assert oracle_best_score(Graph(3, [(1, 2), (2, 3)], [1, 2, 1])).digits == (1, 1, 0)


def test_best_score_matches_naive():
    rng = random.Random(1)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 7), 12)
        assert oracle_best_score(g).digits == naive_best_score(g)


def test_summary_matches_separate_calls():
    rng = random.Random(2)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 7), 12)
        other = [rng.randint(1, g.n) for _ in range(g.n)]
        scores, size = oracle_summary(g, [g.priorities(), other])
        assert scores[0] == oracle_best_score(g)
        assert scores[1] == oracle_best_score(g.with_priorities(other))
        assert size == oracle_max_cardinality(g)


def test_has_i_augmenting_path_examples():
    g = Graph(2, [(1, 2)], [1, 1])
    assert oracle_has_i_augmenting_path(g, Matching(g), 1)
    assert not oracle_has_i_augmenting_path(g, Matching(g, [0]), 1)
    c5 = cycle_graph(5)
    m = Matching(c5, [c5.edge_index(2, 3), c5.edge_index(4, 5)])
    assert not oracle_has_i_augmenting_path(c5, m, 1)


def test_disjoint_union_count_is_product():
    rng = random.Random(3)
    for _ in range(30):
        a = random_graph(rng, rng.randint(1, 5), 6)
        b = random_graph(rng, rng.randint(1, 5), 6)
        edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
        n = a.n + b.n
        union = Graph(n, edges, [1] * n)
        assert count(union) == count(a) * count(b)


def test_relabeling_invariance():
    rng = random.Random(4)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8), 12)
        perm = list(range(1, g.n + 1))
        rng.shuffle(perm)
        relabel = dict(zip(range(1, g.n + 1), perm))
        prio = [0] * g.n
        for u in g.vertices():
            prio[relabel[u] - 1] = g.priority[u]
        h = Graph(g.n, [(relabel[u], relabel[v]) for u, v in g.edges], prio)
        assert oracle_best_score(h) == oracle_best_score(g)


def test_budget():
    big = Graph(13, [], [1] * 13)
    with pytest.raises(BudgetExceeded):
        oracle_best_score(big)
    dense = Graph(7, [(u, v) for u in range(1, 8) for v in range(u + 1, 8)], [1] * 7)
    with pytest.raises(BudgetExceeded):
        oracle_best_score(dense)
    with pytest.raises(BudgetExceeded):
        oracle_best_score(dense, EnumerationBudget(max_edges=30, max_matchings=10))
