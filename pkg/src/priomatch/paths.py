"""Alternating paths, their validation, and augmentation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .graph import Graph, Matching


class InvalidPathError(ValueError):
    pass


@dataclass(frozen=True)
class AugPath:
    """An alternating path in the original graph.

    ``vertices[0]`` is the unmatched start vertex. The first edge is not in
    the matching, the second is, and so on. ``shrunken`` optionally records
    the path in the shrunken graph as ``(entry, exit)`` vertex pairs, one
    per shrunken vertex; ``case`` names the search case that produced it.
    """

    vertices: tuple[int, ...]
    case: str = ""
    shrunken: Optional[tuple[tuple[int, int], ...]] = field(
        default=None, compare=False)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def path_problem(graph: Graph, matching: Matching, vertices: Sequence[int],
                 start_ok: Callable[[int], bool],
                 end_ok: Callable[[int], bool]) -> Optional[str]:
    """Describe why ``vertices`` is not an augmenting path, or return None.

    ``start_ok`` is asked about the (unmatched) first vertex; ``end_ok``
    about the last vertex when it is matched.
    """
    if len(vertices) < 2:
        return "path needs at least one edge"
    if len(set(vertices)) != len(vertices):
        return "path repeats a vertex"
    for x in vertices:
        if not 1 <= x <= graph.n:
            return f"vertex {x} out of range"
    mate = matching.mate_of
    u0 = vertices[0]
    if mate[u0]:
        return f"start vertex {u0} is matched"
    if not start_ok(u0):
        return f"start vertex {u0} is not an admissible root"
    for k in range(len(vertices) - 1):
        a, b = vertices[k], vertices[k + 1]
        if not graph.has_edge(a, b):
            return f"({a}, {b}) is not an edge"
        in_matching = mate[a] == b
        if in_matching != (k % 2 == 1):
            return f"edge ({a}, {b}) breaks alternation at position {k}"
    t = len(vertices) - 1
    ut = vertices[-1]
    if t % 2 == 1:
        if mate[ut]:
            return f"odd-length path ends at matched vertex {ut}"
    elif not end_ok(ut):
        return f"matched end vertex {ut} is not admissible"
    return None


def i_path_problem(graph: Graph, matching: Matching, vertices: Sequence[int],
                   i: int) -> Optional[str]:
    prio = graph.priority
    return path_problem(graph, matching, vertices,
                        lambda u: prio[u] == i, lambda u: prio[u] > i)


def is_i_augmenting_path(graph: Graph, matching: Matching,
                         vertices: Sequence[int], i: int) -> bool:
    return i_path_problem(graph, matching, vertices, i) is None


def is_s_augmenting_path(graph: Graph, matching: Matching,
                         vertices: Sequence[int], s: set[int]) -> bool:
    """Two-priority form: start unmatched in ``s``, matched end outside it."""
    return path_problem(graph, matching, vertices,
                        lambda u: u in s, lambda u: u not in s) is None


def augment(matching: Matching, path: AugPath | Sequence[int]) -> Matching:
    """Flip matching membership of every edge on ``path``, in place.

    Returns ``matching`` for convenience. Every vertex matched before stays
    matched except the far end of an even-length path, which is released.
    """
    vertices = tuple(path.vertices if isinstance(path, AugPath) else path)
    graph = matching.graph
    problem = path_problem(graph, matching, vertices,
                           lambda u: True, lambda u: True)
    if problem is not None:
        raise InvalidPathError(problem)
    index = graph.edge_index
    steps = range(len(vertices) - 1)
    for k in steps:
        if k % 2 == 1:
            matching.remove_edge(index(vertices[k], vertices[k + 1]))
    for k in steps:
        if k % 2 == 0:
            matching.add_edge(index(vertices[k], vertices[k + 1]))
    return matching


class FailurePropertyError(AssertionError):
    """A search ended without a path but one of its end-state invariants
    does not hold."""

    def __init__(self, prop: str, detail: str):
        super().__init__(f"property {prop}: {detail}")
        self.prop = prop
        self.detail = detail
