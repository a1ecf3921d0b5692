"""Exhaustive ground truth for small graphs.

Nothing here shares code with the path searches: optimal scores come from
enumerating every matching, and the existence of an i-augmenting path is
decided by comparing scores, not by looking for paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, Matching
from .score import ScoreVector, priority_score


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    max_vertices: int = 12
    max_edges: int = 20
    max_matchings: int = 2_000_000

    def check(self, graph: Graph) -> None:
        if graph.n > self.max_vertices:
            raise BudgetExceeded(
                f"{graph.n} vertices exceeds the oracle limit of {self.max_vertices}")
        if graph.m > self.max_edges:
            raise BudgetExceeded(
                f"{graph.m} edges exceeds the oracle limit of {self.max_edges}")


DEFAULT_BUDGET = EnumerationBudget()


def enumerate_edge_sets(graph: Graph,
                        budget: EnumerationBudget = DEFAULT_BUDGET
                        ) -> Iterator[tuple[int, ...]]:
    """Yield every matching as a sorted tuple of edge indices, exactly once.

    Backtracks over edge indices in increasing order, keeping an edge only
    if neither endpoint is already covered.
    """
    budget.check(graph)
    edges = graph.edges
    m = len(edges)
    used = [False] * (graph.n + 1)
    chosen: list[int] = []
    produced = 0

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        nonlocal produced
        if k == m:
            produced += 1
            if produced > budget.max_matchings:
                raise BudgetExceeded(
                    f"more than {budget.max_matchings} matchings")
            yield tuple(chosen)
            return
        yield from rec(k + 1)
        u, v = edges[k]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            chosen.append(k)
            yield from rec(k + 1)
            chosen.pop()
            used[u] = used[v] = False

    yield from rec(0)


def enumerate_matchings(graph: Graph,
                        budget: EnumerationBudget = DEFAULT_BUDGET
                        ) -> Iterator[Matching]:
    for ks in enumerate_edge_sets(graph, budget):
        yield Matching(graph, ks)


def _score_of(graph: Graph, ks: tuple[int, ...]) -> tuple[int, ...]:
    digits = [0] * graph.n
    prio = graph.priority
    for k in ks:
        u, v = graph.edges[k]
        digits[prio[u] - 1] += 1
        digits[prio[v] - 1] += 1
    return tuple(digits)


def oracle_best_score(graph: Graph,
                      budget: EnumerationBudget = DEFAULT_BUDGET) -> ScoreVector:
    """Largest priority score over all matchings of ``graph``."""
    return ScoreVector(max(_score_of(graph, ks)
                           for ks in enumerate_edge_sets(graph, budget)))


def oracle_max_cardinality(graph: Graph,
                           budget: EnumerationBudget = DEFAULT_BUDGET) -> int:
    return max(len(ks) for ks in enumerate_edge_sets(graph, budget))


def oracle_summary(graph: Graph, priority_sets: list[list[int]],
                   budget: EnumerationBudget = DEFAULT_BUDGET
                   ) -> tuple[list[ScoreVector], int]:
    """Best score for each priority assignment plus the maximum cardinality,
    from a single enumeration of the graph's matchings."""
    budget.check(graph)
    edges = graph.edges
    best = [None] * len(priority_sets)
    size = 0
    prios = [[0, *p] for p in priority_sets]
    n = graph.n
    for ks in enumerate_edge_sets(graph, budget):
        size = max(size, len(ks))
        for j, prio in enumerate(prios):
            digits = [0] * n
            for k in ks:
                u, v = edges[k]
                digits[prio[u] - 1] += 1
                digits[prio[v] - 1] += 1
            t = tuple(digits)
            if best[j] is None or t > best[j]:
                best[j] = t
    return [ScoreVector(b) for b in best], size


def oracle_has_i_augmenting_path(graph: Graph, matching: Matching, i: int,
                                 budget: EnumerationBudget = DEFAULT_BUDGET) -> bool:
    """True iff some matching has the same (i-1)-score as ``matching`` and a
    strictly larger i-score."""
    current = priority_score(graph, matching).digits
    prefix, target = current[:i - 1], current[:i]
    for ks in enumerate_edge_sets(graph, budget):
        s = _score_of(graph, ks)
        if s[:i - 1] == prefix and s[:i] > target:
            return True
    return False
