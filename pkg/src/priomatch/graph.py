"""Undirected graphs with vertex priorities, and matchings over them.

Vertices are numbered 1..n. Priorities are integers in [1, n] where 1 is
the highest priority class.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Base class for graph validation errors."""


class VertexRangeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class PriorityRangeError(GraphError):
    pass


class MatchingError(GraphError):
    pass


class Graph:
    """Immutable simple undirected graph with a priority per vertex.

    ``edges[k]`` is the k-th edge as given at construction (0-based edge
    index). ``adj[u]`` lists the neighbours of ``u`` and ``adj_edges[u]``
    the matching edge indices, in edge-index order. Index 0 of every
    per-vertex list is unused.
    """

    __slots__ = ("n", "edges", "priority", "adj", "adj_edges", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 priorities: Sequence[int]):
        if n < 0:
            raise VertexRangeError(f"vertex count must be non-negative, got {n}")
        priorities = list(priorities)
        if len(priorities) != n:
            raise PriorityRangeError(
                f"expected {n} priorities, got {len(priorities)}")
        for u, p in enumerate(priorities, 1):
            if not 1 <= p <= n:
                raise PriorityRangeError(
                    f"priority {p} of vertex {u} outside [1, {n}]")

        edge_list: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        adj_edges: list[list[int]] = [[] for _ in range(n + 1)]
        for k, (u, v) in enumerate(edges):
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexRangeError(
                    f"edge {k} ({u}, {v}) has an endpoint outside [1, {n}]")
            if u == v:
                raise SelfLoopError(f"edge {k} ({u}, {v}) is a self-loop")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise DuplicateEdgeError(
                    f"edge {k} ({u}, {v}) duplicates edge {index[key]}")
            index[key] = k
            edge_list.append((u, v))
            adj[u].append(v)
            adj_edges[u].append(k)
            adj[v].append(u)
            adj_edges[v].append(k)

        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(edge_list)
        self.priority: tuple[int, ...] = (0, *priorities)
        self.adj = tuple(tuple(a) for a in adj)
        self.adj_edges = tuple(tuple(a) for a in adj_edges)
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def priorities(self) -> list[int]:
        return list(self.priority[1:])

    def edge_index(self, u: int, v: int) -> Optional[int]:
        return self._index.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_index(u, v) is not None

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def with_priorities(self, priorities: Sequence[int]) -> "Graph":
        return Graph(self.n, self.edges, priorities)

    def is_bipartite(self) -> bool:
        return two_coloring(self) is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.edges == other.edges
                and self.priority == other.priority)

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.priority))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]],
                priorities: Sequence[int]) -> Graph:
    """Validate and construct a :class:`Graph`.

    Raises one of :class:`VertexRangeError`, :class:`SelfLoopError`,
    :class:`DuplicateEdgeError` or :class:`PriorityRangeError`.
    """
    return Graph(n, edges, priorities)


def two_coloring(graph: Graph) -> Optional[list[int]]:
    """Return a 0/1 side per vertex (index 0 unused), or None if the graph
    has an odd cycle."""
    side = [-1] * (graph.n + 1)
    for s in graph.vertices():
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in graph.adj[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    stack.append(v)
                elif side[v] == side[u]:
                    return None
    return side


class Matching:
    """A set of vertex-disjoint edges of a graph with O(1) mate lookup.

    ``mate_of[u]`` is 0 when ``u`` is unmatched.
    """

    __slots__ = ("graph", "mate_of", "_edges")

    def __init__(self, graph: Graph, edges: Iterable[int] = ()):
        self.graph = graph
        self.mate_of = [0] * (graph.n + 1)
        self._edges: set[int] = set()
        for k in edges:
            self.add_edge(k)

    def mate(self, u: int) -> Optional[int]:
        w = self.mate_of[u]
        return w or None

    def is_matched(self, u: int) -> bool:
        return self.mate_of[u] != 0

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def __contains__(self, k: int) -> bool:
        return k in self._edges

    def pairs(self) -> list[tuple[int, int]]:
        """Matched edges as vertex pairs, in edge-index order."""
        return [self.graph.edges[k] for k in sorted(self._edges)]

    def matched_vertices(self) -> Iterator[int]:
        return (u for u in self.graph.vertices() if self.mate_of[u])

    def add_edge(self, k: int) -> None:
        if not 0 <= k < self.graph.m:
            raise MatchingError(f"edge index {k} out of range")
        u, v = self.graph.edges[k]
        if self.mate_of[u] or self.mate_of[v]:
            shared = u if self.mate_of[u] else v
            raise MatchingError(f"vertex {shared} is already matched")
        self.mate_of[u] = v
        self.mate_of[v] = u
        self._edges.add(k)

    def remove_edge(self, k: int) -> None:
        if k not in self._edges:
            raise MatchingError(f"edge index {k} is not in the matching")
        u, v = self.graph.edges[k]
        self.mate_of[u] = 0
        self.mate_of[v] = 0
        self._edges.remove(k)

    def copy(self) -> "Matching":
        other = Matching.__new__(Matching)
        other.graph = self.graph
        other.mate_of = list(self.mate_of)
        other._edges = set(self._edges)
        return other

    def audit(self) -> None:
        """Check that the mate map is an involution consistent with the
        edge set. Raises :class:`MatchingError` on the first problem."""
        mate = self.mate_of
        for u in self.graph.vertices():
            w = mate[u]
            if w and mate[w] != u:
                raise MatchingError(f"mate map is not an involution at {u}")
        paired = set()
        for k in self._edges:
            u, v = self.graph.edges[k]
            if mate[u] != v:
                raise MatchingError(f"edge {k} missing from the mate map")
            paired.update((u, v))
        if paired != set(self.matched_vertices()):
            raise MatchingError("mate map has pairs outside the edge set")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.graph is other.graph and self._edges == other._edges

    def __repr__(self) -> str:
        return f"Matching({self.pairs()})"


def empty_matching(graph: Graph) -> Matching:
    return Matching(graph)


def is_valid_matching(graph: Graph,
                      edges: Iterable[int]) -> tuple[bool, Optional[int]]:
    """Check that the given edge indices are pairwise vertex-disjoint.

    Returns ``(True, None)`` or ``(False, v)`` where ``v`` is the first
    vertex found to be covered twice. Raises :class:`MatchingError` for an
    edge index out of range.
    """
    seen: set[int] = set()
    for k in edges:
        if not 0 <= k < graph.m:
            raise MatchingError(f"edge index {k} out of range")
        for x in graph.edges[k]:
            if x in seen:
                return False, x
            seen.add(x)
    return True, None
