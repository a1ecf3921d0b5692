"""Text formats for graphs and matchings, plus seeded random instances.

Graph file::

    # comment
    p mpm <n> <m>
    v <id> <priority>      (optional; unlisted vertices get priority n)
    e <u> <v>              (exactly m lines)

Matching file::

    s <d1> <d2> ... <dn>
    m <u> <v>              (one line per matching edge)
"""

from __future__ import annotations

import random
from typing import Mapping, Optional, Sequence, Union

from .graph import Graph, GraphError, Matching, MatchingError
from .score import ScoreVector, priority_score


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(line: str) -> list[tuple[str, int]]:
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def _int(tok: tuple[str, int], lineno: int, what: str) -> int:
    text, col = tok
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {text!r}", lineno, col) from None


def parse_graph(text: str) -> Graph:
    header: Optional[tuple[int, int]] = None
    prio: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    edge_lines: list[tuple[int, int]] = []

    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks or toks[0][0].startswith("#"):
            continue
        kind, col = toks[0]
        if kind == "p":
            if header is not None:
                raise ParseError("second header line", lineno, col)
            if len(toks) != 4 or toks[1][0] != "mpm":
                raise ParseError("header must be 'p mpm <n> <m>'", lineno, col)
            n, m = _int(toks[2], lineno, "n"), _int(toks[3], lineno, "m")
            if n < 0 or m < 0:
                raise ParseError("negative count in header", lineno, toks[2][1])
            header = (n, m)
            continue
        if header is None:
            raise ParseError("missing 'p mpm' header before data", lineno, col)
        n = header[0]
        if kind == "v":
            if len(toks) != 3:
                raise ParseError("vertex line must be 'v <id> <priority>'", lineno, col)
            u, p = _int(toks[1], lineno, "vertex id"), _int(toks[2], lineno, "priority")
            if not 1 <= u <= n:
                raise ParseError(f"vertex id {u} outside [1, {n}]", lineno, toks[1][1])
            if not 1 <= p <= n:
                raise ParseError(f"priority {p} outside [1, {n}]", lineno, toks[2][1])
            if u in prio:
                raise ParseError(f"duplicate vertex line for {u}", lineno, col)
            prio[u] = p
        elif kind == "e":
            if len(toks) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", lineno, col)
            u, v = _int(toks[1], lineno, "vertex id"), _int(toks[2], lineno, "vertex id")
            for x, tok in ((u, toks[1]), (v, toks[2])):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex id {x} outside [1, {n}]", lineno, tok[1])
            edges.append((u, v))
            edge_lines.append((lineno, col))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno, col)

    if header is None:
        raise ParseError("missing 'p mpm' header", max(1, len(text.splitlines())))
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}",
                         len(text.splitlines()) or 1)
    seen: dict[tuple[int, int], int] = {}
    for k, (u, v) in enumerate(edges):
        lineno, col = edge_lines[k]
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno, col)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u}, {v}), first on line {seen[key]}",
                             lineno, col)
        seen[key] = lineno
    try:
        return Graph(n, edges, [prio.get(u, n) for u in range(1, n + 1)])
    except GraphError as exc:
        raise ParseError(str(exc), 1) from exc


def render_graph(graph: Graph) -> str:
    lines = [f"p mpm {graph.n} {graph.m}"]
    lines += [f"v {u} {graph.priority[u]}" for u in graph.vertices()]
    lines += [f"e {u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def render_matching(graph: Graph, matching: Matching) -> str:
    lines = [f"s {priority_score(graph, matching).render()}".rstrip()]
    lines += [f"m {u} {v}" for u, v in matching.pairs()]
    return "\n".join(lines) + "\n"


def parse_matching(graph: Graph, text: str) -> tuple[Matching, ScoreVector]:
    """Read a matching file against ``graph``; returns the matching and the
    score stated in the file (not recomputed)."""
    score: Optional[ScoreVector] = None
    matching = Matching(graph)
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks or toks[0][0].startswith("#"):
            continue
        kind, col = toks[0]
        if kind == "s":
            if score is not None:
                raise ParseError("second score line", lineno, col)
            score = ScoreVector(tuple(_int(t, lineno, "digit") for t in toks[1:]))
        elif kind == "m":
            if len(toks) != 3:
                raise ParseError("matching line must be 'm <u> <v>'", lineno, col)
            u, v = _int(toks[1], lineno, "vertex id"), _int(toks[2], lineno, "vertex id")
            k = graph.edge_index(u, v) if 1 <= u <= graph.n and 1 <= v <= graph.n else None
            if k is None:
                raise ParseError(f"({u}, {v}) is not an edge of the graph", lineno, col)
            try:
                matching.add_edge(k)
            except MatchingError as exc:
                raise ParseError(str(exc), lineno, col) from exc
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno, col)
    if score is None:
        raise ParseError("missing score line", max(1, len(text.splitlines())))
    return matching, score


PrioritySpec = Union[None, Sequence[int], Mapping[int, float], str]


def parse_priority_spec(spec: str) -> Union[list[int], dict[int, float]]:
    """``"1,2,3"`` or ``"1-3"`` for a uniform choice, ``"1:0.2,2:0.8"`` for
    explicit weights."""
    spec = spec.strip()
    if ":" in spec:
        weights = {}
        for part in spec.split(","):
            p, w = part.split(":")
            weights[int(p)] = float(w)
        return weights
    values: list[int] = []
    for part in spec.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return values


def generate_random(n: int, m: int, priorities: PrioritySpec = None,
                    seed: int = 0) -> Graph:
    """Uniform random simple graph with ``m`` edges, by rejection sampling.

    ``priorities`` is None (uniform over 1..n), a sequence of values to draw
    uniformly from, a mapping from priority to weight, or a string accepted
    by :func:`parse_priority_spec`.
    """
    if m > n * (n - 1) // 2 or m < 0:
        raise ValueError(f"cannot place {m} edges on {n} vertices")
    rng = random.Random(seed)
    chosen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    while len(edges) < m:
        u = rng.randint(1, n)
        v = rng.randint(1, n)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in chosen:
            continue
        chosen.add(key)
        edges.append(key)

    if isinstance(priorities, str):
        priorities = parse_priority_spec(priorities)
    if priorities is None:
        prio = [rng.randint(1, n) for _ in range(n)]
    elif isinstance(priorities, Mapping):
        values = sorted(priorities)
        prio = rng.choices(values, weights=[priorities[p] for p in values], k=n)
    else:
        values = list(priorities)
        prio = [rng.choice(values) for _ in range(n)]
    return Graph(n, edges, prio)


def random_bipartite(n: int, p: float, rng: random.Random,
                     priorities: Optional[Sequence[int]] = None) -> Graph:
    """Random bipartite graph: vertices split into two random halves and
    each cross pair joined with probability ``p``."""
    side = [rng.random() < 0.5 for _ in range(n + 1)]
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if side[u] != side[v] and rng.random() < p]
    if priorities is None:
        priorities = [rng.randint(1, n) for _ in range(n)]
    return Graph(n, edges, priorities)
