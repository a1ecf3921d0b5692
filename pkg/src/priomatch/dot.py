"""Graphviz DOT output for matchings and search forests.

Even vertices are marked ``+``, odd ones ``-``; tree edges point from child
to parent; blossoms are drawn as nested clusters; matching edges are bold.
"""

from __future__ import annotations

from typing import Callable, Optional

from .blossom import EVEN, ODD, BlossomSearch
from .graph import Graph, Matching
from .paths import augment

MARK = {EVEN: "+", ODD: "-"}


def matching_to_dot(graph: Graph, matching: Matching, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for u in graph.vertices():
        lines.append(f'  {u} [label="{u}\\np{graph.priority[u]}"];')
    for k, (u, v) in enumerate(graph.edges):
        style = ' [penwidth=3]' if k in matching else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def search_to_dot(search: BlossomSearch, name: str = "search") -> str:
    g, label, mate, parent = search.graph, search.label, search.mate, search.parent
    lines = [f"digraph {name} {{", "  node [shape=circle];"]

    def node(u: int) -> str:
        mark = MARK.get(label[u], "")
        fill = ', style=filled, fillcolor="#dddddd"' if g.priority[u] <= search.i else ""
        return f'{u} [label="{u}{mark}"{fill}];'

    placed: set[int] = set()

    def cluster(bid: int, depth: int) -> None:
        b = search.blossoms[bid]
        pad = "  " * depth
        lines.append(f'{pad}subgraph cluster_b{bid} {{')
        lines.append(f'{pad}  label="B{bid + 1}";')
        for child in b.children:
            cluster(child, depth + 1)
        for u in b.own_vertices:
            lines.append(f"{pad}  {node(u)}")
            placed.add(u)
        lines.append(f"{pad}}}")

    outer = {search.blossom_of(x).id for x in g.vertices() if search.is_internal(x)}
    for bid in sorted(outer):
        cluster(bid, 1)
    for u in g.vertices():
        if u not in placed:
            lines.append(f"  {node(u)}")

    for u, v in g.edges:
        if mate[u] == v:
            child, par = (u, v) if parent[u] == v else (v, u)
            if parent[child] == par:
                lines.append(f"  {child} -> {par} [penwidth=3];")
            else:
                lines.append(f"  {u} -> {v} [penwidth=3, dir=none];")
        elif parent[u] == v:
            lines.append(f"  {u} -> {v};")
        elif parent[v] == u:
            lines.append(f"  {v} -> {u};")
        else:
            lines.append(f"  {u} -> {v} [dir=none, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_solve(graph: Graph, emit: Callable[[dict], None],
                snapshot: Optional[Callable[[int, str], None]] = None) -> Matching:
    """Run the priority sweep one eligible edge at a time.

    Every event goes to ``emit``. When ``snapshot`` is given it receives a
    running event counter and the DOT text of the search state after each
    processed edge.
    """
    matching = Matching(graph)
    counter = 0
    for i in sorted(set(graph.priority[1:])):
        emit({"event": "priority", "i": i})
        while True:
            pending: list[dict] = []
            search = BlossomSearch(graph, matching, i, pending.append)
            while not search.finished:
                search.step()
                for ev in pending:
                    emit(ev)
                if pending and snapshot is not None:
                    snapshot(counter, search_to_dot(search, f"step{counter}"))
                counter += len(pending)
                pending.clear()
            path = search.result
            if path is None:
                emit({"event": "exhausted", "i": i})
                break
            augment(matching, path)
            emit({"event": "augment", "i": i, "path": list(path.vertices)})
    return matching
