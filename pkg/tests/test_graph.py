import pytest
from hypothesis import given, strategies as st

from priomatch.graph import (
    DuplicateEdgeError, Graph, Matching, MatchingError, PriorityRangeError,
    SelfLoopError, VertexRangeError, build_graph, empty_matching,
    is_valid_matching, two_coloring,
)
from priomatch.score import priority_score


def triangle():
    return build_graph(3, [(1, 2), (2, 3), (3, 1)], [1, 1, 1])


def test_isolated_vertex():
    g = build_graph(1, [], [1])
    assert g.n == 1 and g.m == 0 and g.adj[1] == ()


def test_single_edge():
    g = build_graph(2, [(1, 2)], [1, 1])
    assert g.edges == ((1, 2),)
    assert g.adj[1] == (2,) and g.adj[2] == (1,)
    assert g.adj_edges[1] == (0,) and g.adj_edges[2] == (0,)


@pytest.mark.parametrize("n, edges, prio, error", [
    (2, [(1, 1)], [1, 1], SelfLoopError),
    (2, [(1, 2), (2, 1)], [1, 1], DuplicateEdgeError),
    (2, [(1, 3)], [1, 1], VertexRangeError),
    (2, [(0, 1)], [1, 1], VertexRangeError),
    (2, [(1, 2)], [1, 3], PriorityRangeError),
    (2, [(1, 2)], [0, 1], PriorityRangeError),
    (2, [(1, 2)], [1], PriorityRangeError),
])
def test_validation_errors(n, edges, prio, error):
    with pytest.raises(error):
        build_graph(n, edges, prio)


def test_validation_errors_are_distinct():
    kinds = {SelfLoopError, DuplicateEdgeError, VertexRangeError, PriorityRangeError}
    assert len(kinds) == 4
    assert all(issubclass(k, ValueError) for k in kinds)


def test_empty_matching():
    g = triangle()
    m = empty_matching(g)
    assert len(m) == 0
    assert all(m.mate(u) is None for u in g.vertices())
    assert priority_score(g, m).digits == (0, 0, 0)


def test_is_valid_matching_examples():
    g = triangle()
    assert is_valid_matching(g, [0]) == (True, None)
    assert is_valid_matching(g, [0, 1]) == (False, 2)
    assert is_valid_matching(g, []) == (True, None)
    with pytest.raises(MatchingError):
        is_valid_matching(g, [3])


def test_matching_mutation_and_audit():
    g = build_graph(4, [(1, 2), (2, 3), (3, 4)], [1] * 4)
    m = Matching(g, [0, 2])
    assert m.mate(1) == 2 and m.mate(4) == 3
    with pytest.raises(MatchingError):
        m.add_edge(1)
    m.remove_edge(0)
    m.remove_edge(2)
    m.add_edge(1)
    m.audit()
    assert m.pairs() == [(2, 3)]
    with pytest.raises(MatchingError):
        m.remove_edge(0)


def test_audit_catches_corruption():
    g = build_graph(3, [(1, 2), (2, 3)], [1] * 3)
    m = Matching(g, [0])
    m.mate_of[3] = 2
    with pytest.raises(MatchingError):
        m.audit()


def test_two_coloring():
    assert two_coloring(triangle()) is None
    side = two_coloring(build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)], [1] * 4))
    assert side[1] != side[2] and side[1] == side[3]


@st.composite
def graph_and_edge_subset(draw):
    n = draw(st.integers(1, 7))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, edges, [1] * n)
    subset = draw(st.lists(st.integers(0, max(g.m - 1, 0)), unique=True)) if g.m else []
    return g, subset


@given(graph_and_edge_subset())
def test_is_valid_matching_agrees_with_construction(case):
    g, subset = case
    ok, vertex = is_valid_matching(g, subset)
    try:
        m = Matching(g, subset)
    except MatchingError:
        assert not ok and vertex is not None
    else:
        assert ok
        m.audit()
        for u in g.vertices():
            w = m.mate(u)
            assert w is None or m.mate(w) == u
