"""Priority sweep: repeatedly search for i-augmenting paths, raising i when
none is left."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .blossom import BlossomSearch, Trace
from .graph import Graph, Matching
from .paths import AugPath, augment
from .score import ScoreVector, priority_score


@dataclass
class SolveReport:
    matching: Matching
    score: ScoreVector
    augmentations: dict[int, int]
    searches: int
    elapsed: float
    blossoms: int = 0

    @property
    def size(self) -> int:
        return len(self.matching)


@dataclass
class SearchRecord:
    """One search made during a solve. ``matching`` is the matching the
    search ran against (a snapshot only when requested)."""

    i: int
    matching: Matching
    path: Optional[AugPath]
    search: BlossomSearch = field(repr=False)


def solve_steps(graph: Graph, trace: Optional[Trace] = None,
                snapshot: bool = False) -> Iterator[SearchRecord]:
    """Run the priority sweep, yielding every search before its path (if
    any) is applied.

    With ``snapshot=True`` each record carries a copy of the matching;
    otherwise the live matching is shared and changes after the record is
    yielded. Only the priority classes present in the graph are probed; a
    class without vertices has no roots and its search would fail at once.
    """
    matching = Matching(graph)
    for i in sorted(set(graph.priority[1:])):
        if trace is not None:
            trace({"event": "priority", "i": i})
        while True:
            search = BlossomSearch(graph, matching, i, trace)
            path = search.run()
            yield SearchRecord(i, matching.copy() if snapshot else matching,
                               path, search)
            if path is None:
                break
            augment(matching, path)
            if trace is not None:
                trace({"event": "augment", "i": i, "path": list(path.vertices)})


def max_priority_matching(graph: Graph,
                          trace: Optional[Trace] = None) -> SolveReport:
    """Compute a matching of maximum priority score.

    The result is also a maximum-size matching, since every vertex carries
    a priority and matching two more vertices always raises the score.
    """
    start = time.perf_counter()
    counts: dict[int, int] = {}
    searches = blossoms = 0
    matching = Matching(graph)
    for rec in solve_steps(graph, trace):
        matching = rec.matching
        searches += 1
        blossoms += len(rec.search.blossoms)
        counts.setdefault(rec.i, 0)
        if rec.path is not None:
            counts[rec.i] += 1
    return SolveReport(matching, priority_score(graph, matching), counts,
                       searches, time.perf_counter() - start, blossoms)


def two_priority_matching(graph: Graph, s: Iterable[int],
                          trace: Optional[Trace] = None) -> SolveReport:
    """Maximum-size matching that matches as many vertices of ``s`` as
    possible. Members of ``s`` get priority 1 and all others priority 2
    (the graph's own priorities are ignored)."""
    s = set(s)
    prio = [1 if u in s else 2 for u in graph.vertices()]
    if graph.n == 1:
        prio = [1]
    return max_priority_matching(graph.with_priorities(prio), trace)


def max_size_matching(graph: Graph,
                      trace: Optional[Trace] = None) -> SolveReport:
    """Maximum-cardinality matching: every vertex gets priority 1."""
    return max_priority_matching(graph.with_priorities([1] * graph.n), trace)
