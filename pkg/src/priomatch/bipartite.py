"""Augmenting-path search for bipartite graphs with a favoured vertex set.

Given a matching and a set ``S``, an augmenting path starts at an unmatched
vertex of ``S`` and alternates between non-matching and matching edges; if
its far end is matched, that vertex lies outside ``S``. Flipping the path
matches one more vertex of ``S`` and unmatches nothing in ``S``.

No odd cycles exist, so trees never meet themselves and no blossoms arise.
"""

from __future__ import annotations

import time
from collections import deque
from typing import Callable, Iterable, Optional

from .graph import Graph, Matching, two_coloring
from .paths import AugPath, FailurePropertyError, augment
from .score import priority_score

UNREACHED, EVEN, ODD = 0, 1, 2

Trace = Callable[[dict], None]


class NotBipartiteError(ValueError):
    pass


class BipartiteSearch:
    """One search; trees are rooted at the unmatched members of ``s``."""

    def __init__(self, graph: Graph, matching: Matching, s: Iterable[int],
                 trace: Optional[Trace] = None, check: bool = True):
        if check and two_coloring(graph) is None:
            raise NotBipartiteError("graph has an odd cycle")
        n = graph.n
        self.graph = graph
        self.matching = matching
        self.mate = matching.mate_of
        self.trace = trace
        self.in_s = [False] * (n + 1)
        for u in s:
            self.in_s[u] = True
        self.label = [UNREACHED] * (n + 1)
        self.parent = [0] * (n + 1)
        self.root = [0] * (n + 1)
        self.queue: deque[tuple[int, int]] = deque()
        self.result: Optional[AugPath] = None
        self.finished = False

        self.roots = [u for u in graph.vertices()
                      if self.in_s[u] and not self.mate[u]]
        for u in self.roots:
            self.label[u] = EVEN
            self.root[u] = u
            self.queue.extend((u, v) for v in graph.adj[u])

    def run(self) -> Optional[AugPath]:
        while not self.finished:
            self.step()
        return self.result

    def step(self) -> Optional[AugPath]:
        if self.finished:
            return self.result
        if not self.queue:
            self.finished = True
            return None
        return self.process(*self.queue.popleft())

    def process(self, u: int, v: int) -> Optional[AugPath]:
        label, mate = self.label, self.mate
        if label[u] != EVEN:
            raise AssertionError(f"eligible edge ({u}, {v}) from non-even {u}")
        lv = label[v]
        if lv == UNREACHED:
            w = mate[v]
            if not w:
                return self._found(u, v, "odd-path",
                                   self.tree_path(u)[::-1] + [v])
            r = self.root[u]
            label[v], self.parent[v], self.root[v] = ODD, u, r
            label[w], self.parent[w], self.root[w] = EVEN, v, r
            if not self.in_s[w]:
                return self._found(u, v, "even-path",
                                   self.tree_path(u)[::-1] + [v, w])
            self.queue.extend((w, x) for x in self.graph.adj[w] if x != v)
            self._emit(u, v, "grow")
            return None
        if lv == EVEN:
            if self.root[u] == self.root[v]:
                raise NotBipartiteError(
                    f"edge ({u}, {v}) joins two even vertices of one tree")
            return self._found(u, v, "odd-path",
                               self.tree_path(u)[::-1] + self.tree_path(v))
        self._emit(u, v, "ignore")
        return None

    def tree_path(self, u: int) -> list[int]:
        out = [u]
        parent = self.parent
        while parent[u]:
            u = parent[u]
            out.append(u)
        return out

    def _found(self, u: int, v: int, case: str, vertices: list[int]) -> AugPath:
        self.result = AugPath(tuple(vertices), case)
        self.finished = True
        self._emit(u, v, case, path=vertices)
        return self.result

    def _emit(self, u: int, v: int, case: str, **extra) -> None:
        if self.trace is not None:
            self.trace({"event": "edge", "u": u, "v": v, "case": case, **extra})


def bipartite_augmenting_path(graph: Graph, matching: Matching,
                              s: Iterable[int],
                              trace: Optional[Trace] = None) -> Optional[AugPath]:
    """Find an augmenting path for ``s`` in a bipartite graph, or None if
    there is none. Raises :class:`NotBipartiteError` on an odd cycle."""
    return BipartiteSearch(graph, matching, s, trace).run()


def failure_violations(search: BipartiteSearch) -> list[tuple[str, str]]:
    """Invariants of a search that ended without a path.

    1. roots are unmatched members of S; one unmatched vertex per tree
    2. matching edges are unreached-unreached or odd parent / even child
    3. edges inside one tree join an odd and an even vertex
    4. every edge touching a tree has an odd endpoint
    5. every even vertex is in S
    """
    g, mate, label = search.graph, search.mate, search.label
    root, parent = search.root, search.parent
    out: list[tuple[str, str]] = []

    unmatched: dict[int, int] = {}
    for x in g.vertices():
        if label[x] != UNREACHED and not mate[x]:
            unmatched[root[x]] = unmatched.get(root[x], 0) + 1
    for r in search.roots:
        if mate[r] or not search.in_s[r]:
            out.append(("1", f"root {r} is matched or outside S"))
        if unmatched.get(r, 0) != 1:
            out.append(("1", f"tree {r} has {unmatched.get(r, 0)} unmatched vertices"))

    for k in search.matching.edges:
        a, b = g.edges[k]
        la, lb = label[a], label[b]
        if la == lb == UNREACHED:
            continue
        if {la, lb} != {EVEN, ODD}:
            out.append(("2", f"matching edge ({a}, {b}) has labels {la}/{lb}"))
        elif parent[a if la == EVEN else b] != (b if la == EVEN else a):
            out.append(("2", f"matching edge ({a}, {b}) is not odd parent / even child"))

    for a, b in g.edges:
        la, lb = label[a], label[b]
        if la != UNREACHED and lb != UNREACHED and root[a] == root[b]:
            if {la, lb} != {EVEN, ODD}:
                out.append(("3", f"edge ({a}, {b}) inside tree {root[a]} is not odd-even"))
        if (la != UNREACHED or lb != UNREACHED) and ODD not in (la, lb):
            out.append(("4", f"edge ({a}, {b}) touches a tree without an odd endpoint"))

    for x in g.vertices():
        if label[x] == EVEN and not search.in_s[x]:
            out.append(("5", f"even vertex {x} is not in S"))
    return out


def assert_failure_properties(search: BipartiteSearch) -> bool:
    """Raise :class:`FailurePropertyError` on the first violated property of
    a failed search; return True when all hold."""
    if not search.finished or search.result is not None:
        raise ValueError("search has not failed")
    problems = failure_violations(search)
    if problems:
        raise FailurePropertyError(*problems[0])
    return True


def bipartite_priority_matching(graph: Graph,
                                trace: Optional[Trace] = None,
                                on_search: Optional[Callable[[int, BipartiteSearch], None]] = None):
    """Maximum priority matching of a bipartite graph using only the
    bipartite search.

    Priorities are swept in increasing order; at priority ``i`` the favoured
    set is every vertex of priority at most ``i``, so paths may end at a
    matched vertex only if its priority exceeds ``i``.
    """
    from .driver import SolveReport

    if two_coloring(graph) is None:
        raise NotBipartiteError("graph has an odd cycle")
    start = time.perf_counter()
    matching = Matching(graph)
    prio = graph.priority
    classes = sorted(set(prio[1:]))
    counts: dict[int, int] = {}
    searches = 0
    favoured: list[int] = []
    by_class = {p: [u for u in graph.vertices() if prio[u] == p] for p in classes}
    for i in classes:
        favoured.extend(by_class[i])
        counts[i] = 0
        while True:
            search = BipartiteSearch(graph, matching, favoured, trace, check=False)
            path = search.run()
            searches += 1
            if on_search is not None:
                on_search(i, search)
            if path is None:
                break
            augment(matching, path)
            counts[i] += 1
    return SolveReport(matching, priority_score(graph, matching), counts,
                       searches, time.perf_counter() - start, 0)
