import random

import pytest
from hypothesis import given, settings, strategies as st

from priomatch.blossom import (
    EVEN, BlossomSearch, assert_failure_properties_general, expand_path,
    failure_violations, find_i_augmenting_path,
)
from priomatch.graph import Graph, Matching
from priomatch.oracle import oracle_has_i_augmenting_path
from priomatch.paths import InvalidPathError, augment, i_path_problem
from priomatch.score import i_score, priority_score

from builders import (
    blossom_example, blossom_example_state, cycle_graph, names, random_graph, vid,
)


def test_single_edge():
    g = Graph(2, [(1, 2)], [1, 1])
    assert find_i_augmenting_path(g, Matching(g), 1).vertices == (1, 2)


def test_c5_shrinks_one_blossom_and_fails():
    g = cycle_graph(5)
    m = Matching(g, [g.edge_index(2, 3), g.edge_index(4, 5)])
    search = BlossomSearch(g, m, 1)
    assert search.run() is None
    assert len(search.blossoms) == 1
    b = search.blossoms[0]
    assert sorted(b.cycle) == [1, 2, 3, 4, 5] and b.base == 1
    assert set(b.bridge) == {3, 4}
    assert assert_failure_properties_general(search)
    assert not oracle_has_i_augmenting_path(g, m, 1)


def test_triangle_blossom():
    g = Graph(3, [(1, 2), (2, 3), (1, 3)], [1, 1, 1])
    m = Matching(g, [1])
    search = BlossomSearch(g, m, 1)
    assert search.run() is None
    assert [len(b.cycle) for b in search.blossoms] == [3]
    assert search.blossoms[0].base == 1
    assert all(search.base_of(x) == 1 for x in (1, 2, 3))
    assert not oracle_has_i_augmenting_path(g, m, 1)


def test_triangle_odd_vertex_with_low_priority_gives_path():
    g = Graph(3, [(1, 2), (2, 3), (1, 3)], [1, 3, 1])
    m = Matching(g, [1])
    search = BlossomSearch(g, m, 1)
    path = search.run()
    assert path.case == "blossom-path"
    assert path.vertices == (1, 3, 2)
    assert search.blossoms == []


def test_example_blossoms_form_as_described():
    search = blossom_example_state()
    for u, v in ("hf", "gd", "gk"):
        assert search.process(vid(u), vid(v)) is None
    assert search.blossoms == []
    assert search.process(vid("e"), vid("g")) is None
    assert search.process(vid("j"), vid("m")) is None
    b1, b2 = search.blossoms
    assert names(sorted(search.blossom_members(b1.id))) == "cdefg" and b1.base == vid("c")
    assert names(sorted(search.blossom_members(b2.id))) == "jkm" and b2.base == vid("j")
    # hf and gk are eligible again
    pending = {(names([u]), names([v])) for u, v in search.queue.pending()}
    assert ("f", "h") in pending and ("k", "g") in pending


def example_after_blossoms():
    search = blossom_example_state()
    search.process(vid("e"), vid("g"))
    search.process(vid("j"), vid("m"))
    return search


@pytest.mark.parametrize("edge, expected", [("fh", "abcdegfh"), ("kg", "abcfgkmjih")])
def test_example_paths_after_shrinking(edge, expected):
    search = example_after_blossoms()
    path = search.process(vid(edge[0]), vid(edge[1]))
    assert path.case == "cross-path"
    assert expected in (names(path.vertices), names(path.vertices[::-1]))
    assert i_path_problem(search.graph, search.matching, path.vertices, 1) is None


def test_example_run_to_completion():
    search = example_after_blossoms()
    path = search.run()
    assert names(path.vertices) in ("abcdegfh", "abcfgkmjih", "hfgedcba", "hijmkgfcba")


def test_example_without_d_favoured():
    search = blossom_example_state(d_favoured=False)
    path = search.process(vid("e"), vid("g"))
    assert path.case == "blossom-path"
    assert names(path.vertices) == "abcfged"
    assert search.blossoms == []


@pytest.mark.parametrize("d_favoured", [True, False])
def test_example_default_order_finds_valid_path(d_favoured):
    g, m = blossom_example(d_favoured)
    path = find_i_augmenting_path(g, m, 1)
    assert i_path_problem(g, m, path.vertices, 1) is None
    assert oracle_has_i_augmenting_path(g, m, 1)


def test_expand_path_examples():
    search = blossom_example_state()
    assert expand_path(search, [(1, 1), (2, 2)]).vertices == (1, 2)
    search.process(vid("e"), vid("g"))
    a, b, c, f, h = (vid(x) for x in "abcfh")
    assert names(expand_path(search, [(a, a), (b, b), (c, f), (h, h)])) == "abcdegfh"
    search.process(vid("j"), vid("m"))
    g_, k, j, i = (vid(x) for x in "gkji")
    segs = [(a, a), (b, b), (c, g_), (k, j), (i, i), (h, h)]
    assert names(expand_path(search, segs)) == "abcfgkmjih"


def test_search_tolerates_unmatched_high_priority_vertices():
    # vertex 3 (priority 1) stays unmatched; searching at i=2 still works
    g = Graph(3, [(1, 2)], [2, 2, 1])
    path = find_i_augmenting_path(g, Matching(g), 2)
    assert path.vertices == (1, 2)


def test_failure_properties_vacuous_without_roots():
    g = Graph(3, [(1, 2), (2, 3)], [1, 1, 1])
    search = BlossomSearch(g, Matching(g, [0]), 2)
    assert search.run() is None and search.roots == []
    assert assert_failure_properties_general(search)


def test_failure_properties_single_root():
    g = Graph(1, [], [1])
    search = BlossomSearch(g, Matching(g), 1)
    assert search.run() is None
    assert search.label[1] == EVEN
    assert assert_failure_properties_general(search)


def test_augment_examples():
    g = Graph(3, [(1, 2), (2, 3)], [1, 1, 1])
    m = Matching(g)
    augment(m, [1, 2])
    assert m.pairs() == [(1, 2)]
    g2 = Graph(3, [(1, 2), (2, 3)], [1, 1, 2])
    m2 = Matching(g2, [1])
    augment(m2, [1, 2, 3])
    assert m2.pairs() == [(1, 2)] and not m2.is_matched(3)


def test_augment_rejects_bad_paths():
    g = Graph(3, [(1, 2), (2, 3)], [1, 1, 1])
    m = Matching(g, [0])
    with pytest.raises(InvalidPathError):
        augment(m, [1, 2, 3])
    with pytest.raises(InvalidPathError):
        augment(Matching(g), [1, 3])


def prepared_instance(seed):
    """Random graph, priority i, and a matching with maximum (i-1)-score
    reached by running the sweep up to priority i and stopping early at a
    random augmentation."""
    from priomatch.driver import solve_steps

    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 8), 14, rng.choice(["uniform", "two-class", "distinct"]))
    records = list(solve_steps(g, snapshot=True))
    return g, rng.choice(records)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31))
def test_search_sound_and_complete(seed):
    g, rec = prepared_instance(seed)
    search = BlossomSearch(g, rec.matching, rec.i)
    path = search.run()
    assert (path is not None) == oracle_has_i_augmenting_path(g, rec.matching, rec.i)
    if path is None:
        assert failure_violations(search) == []
    else:
        assert i_path_problem(g, rec.matching, path.vertices, rec.i) is None


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31))
def test_augment_raises_i_score_keeps_prefix(seed):
    g, rec = prepared_instance(seed)
    m = rec.matching
    path = find_i_augmenting_path(g, m, rec.i)
    if path is None:
        return
    before = priority_score(g, m)
    matched_before = set(m.matched_vertices())
    size_before = len(m)
    augment(m, path)
    m.audit()
    after = priority_score(g, m)
    i = rec.i
    assert i_score(after, i) > i_score(before, i)
    if i > 1:
        assert i_score(after, i - 1) == i_score(before, i - 1)
    lost = matched_before - set(m.matched_vertices())
    if path.length % 2:
        assert not lost and len(m) == size_before + 1
    else:
        assert lost == {path.end} and len(m) == size_before


def test_trace_records_blossoms():
    events = []
    g = cycle_graph(5)
    m = Matching(g, [g.edge_index(2, 3), g.edge_index(4, 5)])
    find_i_augmenting_path(g, m, 1, trace=events.append)
    cases = [e["case"] for e in events if e["event"] == "edge"]
    assert cases.count("grow") == 2 and "blossom" in cases
    (b,) = [e for e in events if e["event"] == "blossom"]
    assert sorted(b["cycle"]) == [1, 2, 3, 4, 5] and b["base"] == 1
