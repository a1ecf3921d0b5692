"""Search for i-augmenting paths in general graphs by growing alternating
trees and shrinking blossoms.

Trees are rooted at the unmatched vertices of priority ``i``. A search
returns a path whose first vertex is such a root and whose far end is either
unmatched, or matched with priority greater than ``i``. Augmenting along it
keeps the counts of priorities ``< i`` and raises the count of priority ``i``.

The shrunken graph is kept in a union-find structure over the original
vertices; each set records the base of its outermost blossom. Vertex labels
are never rewritten when a blossom forms: an odd vertex that is absorbed
into a blossom keeps its odd label and gains a *bridge*, the oriented
non-tree edge that closed the blossom. Paths in the original graph are
rebuilt from parent pointers, mates and bridges.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .graph import Graph, Matching
from .paths import AugPath, FailurePropertyError

logger = logging.getLogger(__name__)

UNREACHED, EVEN, ODD = 0, 1, 2
LABEL_NAMES = {UNREACHED: "unreached", EVEN: "even", ODD: "odd"}

Trace = Callable[[dict], None]
Segment = tuple[int, int]


class EligibleQueue:
    """FIFO of eligible edges, each oriented ``(u, v)`` with ``u`` on the
    even side.

    Edges are pushed in batches: every edge from ``u`` to a neighbour in
    ``targets``, skipping up to two excluded neighbours. A batch is expanded
    one edge at a time as it is consumed, which keeps the FIFO order of the
    individual edges while making a push O(1). Duplicates are allowed;
    callers re-check labels when an edge comes out.
    """

    __slots__ = ("_batches", "_pos")

    def __init__(self):
        self._batches: deque[tuple[int, Sequence[int], int, int]] = deque()
        self._pos = 0

    def push_incident(self, u: int, neighbours: Sequence[int],
                      skip_a: int = 0, skip_b: int = 0) -> None:
        self._batches.append((u, neighbours, skip_a, skip_b))

    def push_edge(self, u: int, v: int) -> None:
        self._batches.append((u, (v,), 0, 0))

    def pop(self) -> Optional[tuple[int, int]]:
        batches = self._batches
        while batches:
            u, targets, a, b = batches[0]
            pos = self._pos
            while pos < len(targets):
                v = targets[pos]
                pos += 1
                if v != a and v != b:
                    self._pos = pos
                    return u, v
            batches.popleft()
            self._pos = 0
        return None

    def clear(self) -> None:
        self._batches.clear()
        self._pos = 0

    def pending(self) -> list[tuple[int, int]]:
        out = []
        for k, (u, targets, a, b) in enumerate(self._batches):
            start = self._pos if k == 0 else 0
            out.extend((u, v) for v in targets[start:] if v != a and v != b)
        return out

    def __bool__(self) -> bool:
        return bool(self.pending())


@dataclass
class Blossom:
    """A shrunken odd cycle.

    ``cycle`` lists the shrunken vertices of the cycle, each named by its
    base vertex, starting with the blossom's own base. ``children`` holds
    the ids of blossoms that appear on the cycle.
    """

    id: int
    cycle: tuple[int, ...]
    bridge: tuple[int, int]
    base: int
    children: tuple[int, ...] = ()
    own_vertices: tuple[int, ...] = field(default=(), repr=False)


class BlossomSearch:
    """State of one i-augmenting path search.

    The matching is read but never modified. Use :meth:`run` to search to
    completion, or :meth:`step`/:meth:`process` to drive it edge by edge.
    """

    def __init__(self, graph: Graph, matching: Matching, i: int,
                 trace: Optional[Trace] = None, seed_queue: bool = True):
        n = graph.n
        self.graph = graph
        self.matching = matching
        self.mate = matching.mate_of
        self.i = i
        self.trace = trace
        self.label = [UNREACHED] * (n + 1)
        self.parent = [0] * (n + 1)
        self.root = [0] * (n + 1)
        self.bridge: dict[int, tuple[int, int]] = {}
        # union-find over original vertices; per representative: base vertex
        # and outermost blossom id (-1 for a single external vertex)
        self._link = list(range(n + 1))
        self._size = [1] * (n + 1)
        self._base = list(range(n + 1))
        self._outer = [-1] * (n + 1)
        self._mark = [0] * (n + 1)
        self._stamp = 0
        self.blossoms: list[Blossom] = []
        self.queue = EligibleQueue()
        self.result: Optional[AugPath] = None
        self.finished = False

        prio = graph.priority
        mate = self.mate
        self.roots = [u for u in graph.vertices()
                      if not mate[u] and prio[u] == i]
        for u in self.roots:
            self.label[u] = EVEN
            self.root[u] = u
        if __debug__ and logger.isEnabledFor(logging.DEBUG):
            low = [u for u in graph.vertices() if not mate[u] and prio[u] < i]
            if low:
                logger.debug("unmatched vertices with priority < %d: %s",
                             i, low)
        if seed_queue:
            for u in self.roots:
                self.queue.push_incident(u, graph.adj[u])

    # shrunken-graph queries

    def find(self, x: int) -> int:
        link = self._link
        while link[x] != x:
            link[x] = link[link[x]]
            x = link[x]
        return x

    def base_of(self, x: int) -> int:
        """Base vertex of beta(x), the outermost blossom containing x (x
        itself when x is external)."""
        return self._base[self.find(x)]

    def blossom_of(self, x: int) -> Optional[Blossom]:
        bid = self._outer[self.find(x)]
        return self.blossoms[bid] if bid >= 0 else None

    def is_internal(self, x: int) -> bool:
        return self._outer[self.find(x)] >= 0

    def shrunken_label(self, x: int) -> int:
        """Label of beta(x): blossoms are always even."""
        return self.label[self.base_of(x)]

    def _shrunken_parent(self, b: int) -> int:
        # b is the base of an even shrunken vertex; returns the base of the
        # even shrunken vertex two levels up, or 0 at a root
        if self.parent[b] == 0:
            return 0
        return self.base_of(self.parent[self.mate[b]])

    # main loop

    def run(self) -> Optional[AugPath]:
        while not self.finished:
            self.step()
        return self.result

    def step(self) -> Optional[AugPath]:
        """Process one eligible edge. Marks the search finished when a path
        is found or the queue is exhausted."""
        if self.finished:
            return self.result
        edge = self.queue.pop()
        if edge is None:
            self.finished = True
            return None
        return self.process(*edge)

    def process(self, u: int, v: int) -> Optional[AugPath]:
        """Apply the search case for eligible edge ``(u, v)``, where beta(u)
        is even."""
        label, mate = self.label, self.mate
        bu = self.base_of(u)
        if label[bu] != EVEN:
            raise AssertionError(f"eligible edge ({u}, {v}) has beta({u}) not even")

        if label[v] == UNREACHED:
            w = mate[v]
            if not w:
                segs = self._reversed(self._up(u, self.root[bu])) + [(v, v)]
                return self._found(u, v, "found-path", segs)
            r = self.root[bu]
            label[v], self.parent[v], self.root[v] = ODD, u, r
            label[w], self.parent[w], self.root[w] = EVEN, v, r
            if self.graph.priority[w] > self.i:
                segs = self._reversed(self._up(u, r)) + [(v, v), (w, w)]
                return self._found(u, v, "found-path", segs)
            self.queue.push_incident(w, self.graph.adj[w], v)
            self._emit(u, v, "grow")
            return None

        bv = self.base_of(v)
        if label[bv] == ODD or bu == bv:
            self._emit(u, v, "ignore")
            return None
        ru, rv = self.root[bu], self.root[bv]
        if ru != rv:
            segs = self._reversed(self._up(u, ru)) + self._up(v, rv)
            return self._found(u, v, "cross-path", segs)
        return self.form_blossom(u, v)

    def form_blossom(self, u: int, v: int) -> Optional[AugPath]:
        """Handle an edge joining two even shrunken vertices of one tree.

        Returns an augmenting path through the new cycle if one of its odd
        vertices has priority above ``i``; otherwise shrinks the cycle and
        returns None.
        """
        mate, parent, prio, i = self.mate, self.parent, self.graph.priority, self.i
        bu, bv = self.base_of(u), self.base_of(v)
        nca = self._nearest_common_ancestor(bu, bv)

        def side(b: int) -> list[int]:
            out = []
            while b != nca:
                o = mate[b]
                out.append(b)
                out.append(o)
                b = self.base_of(parent[o])
            return out

        u_side, v_side = side(bu), side(bv)
        for x, (near, far) in ([(x, (u, v)) for x in u_side[1::2]]
                               + [(x, (v, u)) for x in v_side[1::2]]):
            if prio[x] > i:
                # x, down its matching edge to near, across the bridge, then
                # up to the root
                down = self._reversed(self._up(near, mate[x]))
                segs = [(x, x)] + down + self._up(far, self.root[nca])
                return self._found(u, v, "blossom-path",
                                   self._reversed(segs))

        cycle = (nca, *reversed(u_side), *v_side)
        bid = len(self.blossoms)
        children = tuple(sorted({self._outer[self.find(b)] for b in cycle
                                 if self._outer[self.find(b)] >= 0}))
        own = tuple(b for b in cycle if not self.is_internal(b))
        blossom = Blossom(bid, cycle, (u, v), self._base[self.find(nca)],
                          children, own)
        self.blossoms.append(blossom)

        for x in u_side[1::2]:
            self.bridge[x] = (u, v)
        for x in v_side[1::2]:
            self.bridge[x] = (v, u)
        rep = self.find(nca)
        for b in cycle:
            rep = self._union(rep, self.find(b))
        self._base[rep] = blossom.base
        self._outer[rep] = bid
        adj = self.graph.adj
        for x in u_side[1::2] + v_side[1::2]:
            self.queue.push_incident(x, adj[x], mate[x], parent[x])

        self._emit(u, v, "blossom")
        if self.trace is not None:
            self.trace({"event": "blossom", "id": bid, "cycle": list(cycle),
                        "base": blossom.base, "bridge": [u, v],
                        "children": list(children)})
        return None

    def _union(self, a: int, b: int) -> int:
        if a == b:
            return a
        size = self._size
        if size[a] < size[b]:
            a, b = b, a
        self._link[b] = a
        size[a] += size[b]
        return a

    def _nearest_common_ancestor(self, x: int, y: int) -> int:
        self._stamp += 1
        stamp, mark = self._stamp, self._mark
        while True:
            if x:
                if mark[x] == stamp:
                    return x
                mark[x] = stamp
                x = self._shrunken_parent(x)
            x, y = y, x

    # paths

    def _up(self, p: int, stop: int) -> list[Segment]:
        """Segments of the shrunken tree path from beta(p) up to the shrunken
        vertex whose base is ``stop``; each segment is (entry, exit) with the
        exit at the base of its shrunken vertex."""
        mate, parent = self.mate, self.parent
        b = self.base_of(p)
        segs = [(p, b)]
        while b != stop:
            o = mate[b]
            segs.append((o, o))
            p = parent[o]
            b = self.base_of(p)
            segs.append((p, b))
        return segs

    @staticmethod
    def _reversed(segs: list[Segment]) -> list[Segment]:
        return [(b, a) for a, b in reversed(segs)]

    def _found(self, u: int, v: int, case: str,
               segs: list[Segment]) -> AugPath:
        path = AugPath(tuple(self.expand_path(segs)), case, tuple(segs))
        self.result = path
        self.finished = True
        self._emit(u, v, case, path=list(path.vertices))
        return path

    def expand_path(self, segments: Sequence[Segment]) -> list[int]:
        """Expand a path in the shrunken graph into the original graph.

        ``segments`` gives, for each shrunken vertex in order, the original
        vertex where the path enters it and the one where it leaves. Inside a
        blossom one of the two is its base; the walk between them runs
        around the nested cycles so that matching and non-matching edges
        keep alternating.
        """
        out: list[int] = []
        for a, c in segments:
            if a == c:
                out.append(a)
            elif self.base_of(a) == c:
                self._walk(a, c, out, False)
            elif self.base_of(c) == a:
                self._walk(c, a, out, True)
            else:
                raise ValueError(f"segment ({a}, {c}) does not touch a base")
        return out

    def _walk(self, v: int, w: int, out: list[int], rev: bool) -> None:
        # Appends the even-length alternating path from v up to its ancestor
        # base w (starting with v's matching edge), or its reverse.
        label, mate, parent, bridge = self.label, self.mate, self.parent, self.bridge
        stack: list = [(v, w, rev)]
        while stack:
            item = stack.pop()
            if type(item) is int:
                out.append(item)
                continue
            v, w, rev = item
            if v == w:
                out.append(v)
            elif label[v] == EVEN:
                m = mate[v]
                if rev:
                    stack += (v, m, (parent[m], w, True))
                else:
                    out += (v, m)
                    stack.append((parent[m], w, False))
            else:
                x, y = bridge[v]
                m = mate[v]
                if rev:
                    stack += (v, (x, m, False), (y, w, True))
                else:
                    out.append(v)
                    stack += ((y, w, False), (x, m, True))

    def tree_path(self, u: int) -> list[int]:
        """Original-graph path from ``u`` up to the root of its tree, starting
        with the matching edge at ``u``. ``u`` must be even or internal."""
        return self.expand_path(self._up(u, self.root[self.base_of(u)]))

    def _emit(self, u: int, v: int, case: str, **extra) -> None:
        if self.trace is not None:
            self.trace({"event": "edge", "u": u, "v": v, "case": case, **extra})

    # introspection

    def shrunken_vertices(self) -> Iterator[int]:
        """Bases of the current shrunken vertices that lie in some tree."""
        for x in self.graph.vertices():
            if self.label[x] != UNREACHED and self.base_of(x) == x:
                yield x

    def blossom_members(self, bid: int) -> list[int]:
        out = []
        stack = [bid]
        while stack:
            b = self.blossoms[stack.pop()]
            out.extend(b.own_vertices)
            stack.extend(b.children)
        return sorted(out)


def find_i_augmenting_path(graph: Graph, matching: Matching, i: int,
                           trace: Optional[Trace] = None) -> Optional[AugPath]:
    """Search for an i-augmenting path with respect to ``matching``.

    The returned path starts at an unmatched vertex of priority ``i``. It is
    expected that ``matching`` has a maximum (i-1)-score; the search runs
    regardless, but without that precondition a missing path does not prove
    that the i-score is maximum.
    """
    return BlossomSearch(graph, matching, i, trace).run()


def form_blossom(search: BlossomSearch, u: int, v: int) -> Optional[AugPath]:
    return search.form_blossom(u, v)


def expand_path(search: BlossomSearch,
                segments: Sequence[Segment]) -> AugPath:
    return AugPath(tuple(search.expand_path(segments)), "", tuple(segments))


def failure_violations(search: BlossomSearch) -> list[tuple[str, str]]:
    """Check the invariants that must hold when a search ends without a
    path. Returns ``(property, detail)`` pairs, empty when all hold.

    1. roots are unmatched with priority i; one unmatched vertex per tree
    2. matching edges are unreached-unreached or odd parent / even child
    3. beta(x) is even for internal x; unmatched internal x has an
       unmatched base
    4. edges between even-or-internal vertices lie inside one blossom, and
       no even-or-internal vertex has an unreached neighbour
    5. even-or-internal vertices have priority <= i
    """
    g, mate, label, parent = search.graph, search.mate, search.label, search.parent
    i = search.i
    out: list[tuple[str, str]] = []

    unmatched_per_tree: dict[int, int] = {}
    for x in g.vertices():
        if label[x] != UNREACHED and not mate[x]:
            r = search.root[x]
            unmatched_per_tree[r] = unmatched_per_tree.get(r, 0) + 1
    for r in search.roots:
        if mate[r] or g.priority[r] != i:
            out.append(("1", f"root {r} is matched or has priority != {i}"))
        if unmatched_per_tree.get(r, 0) != 1:
            out.append(("1", f"tree {r} has {unmatched_per_tree.get(r, 0)} "
                             "unmatched vertices"))

    for k in search.matching.edges:
        a, b = g.edges[k]
        la, lb = label[a], label[b]
        if la == lb == UNREACHED:
            continue
        if {la, lb} != {EVEN, ODD}:
            out.append(("2", f"matching edge ({a}, {b}) labelled "
                             f"{LABEL_NAMES[la]}/{LABEL_NAMES[lb]}"))
            continue
        even, odd = (a, b) if la == EVEN else (b, a)
        if parent[even] != odd:
            out.append(("2", f"even {even} is not the child of odd {odd}"))

    def even_or_internal(x: int) -> bool:
        return label[x] == EVEN or search.is_internal(x)

    for x in g.vertices():
        if search.is_internal(x):
            b = search.base_of(x)
            if label[b] != EVEN:
                out.append(("3", f"internal {x} has non-even beta"))
            if not mate[x] and mate[b]:
                out.append(("3", f"unmatched internal {x} has matched base {b}"))
        if even_or_internal(x) and g.priority[x] > i:
            out.append(("5", f"even/internal {x} has priority {g.priority[x]} > {i}"))

    for a, b in g.edges:
        ea, eb = even_or_internal(a), even_or_internal(b)
        if ea and eb and search.base_of(a) != search.base_of(b):
            out.append(("4", f"edge ({a}, {b}) joins even/internal vertices "
                             "outside a common blossom"))
        if (ea and label[b] == UNREACHED) or (eb and label[a] == UNREACHED):
            out.append(("4", f"edge ({a}, {b}) leaves the forest from an "
                             "even vertex"))
    return out


def assert_failure_properties_general(search: BlossomSearch) -> bool:
    """Raise :class:`FailurePropertyError` for the first violated failure
    property of a finished, unsuccessful search; return True otherwise."""
    if not search.finished or search.result is not None:
        raise ValueError("search has not failed")
    problems = failure_violations(search)
    if problems:
        raise FailurePropertyError(*problems[0])
    return True
