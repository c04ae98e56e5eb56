import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import multigraphs, walk
from walkshift import (
    KINDS,
    BudgetExceeded,
    InputError,
    ShiftSequence,
    Walk,
    WalkKind,
    check_Hr,
    delete_closed_neighborhood,
    enumerate_walks,
    is_avoidable,
    is_shift,
    is_simplicial,
    path_shifting_dfs,
    path_shifting_via_line_graph,
    refined_shifting,
    shift_reachable,
    shifting_induced,
    shifts_of,
    verify_shift_sequence,
    walk_shifting,
)
from walkshift.corpus import connected_graphs, random_multigraphs
from walkshift.families import cycle_graph, family, path_graph
from walkshift.shifting import path_from_edges, shift_class


def _avoidable(g, t):
    return lambda w: is_avoidable(g, w, t)


# -- the shift relation ---------------------------------------------------------


def test_shifts_of_examples(p4, c5):
    k2 = family("complete", 2)
    assert shifts_of(k2, Walk.single(0), "wlk") == [Walk.single(1)]
    assert shifts_of(p4, walk(p4, 1, 2), "ind") == [walk(p4, 0, 1), walk(p4, 2, 3)]
    assert shifts_of(c5, walk(c5, 0, 1), "ind") == [walk(c5, 0, 4), walk(c5, 1, 2)]


def test_is_shift_by_definition(k4):
    a, b = walk(k4, 0, 1, 2), walk(k4, 1, 2, 3)
    assert is_shift(k4, a, b, "trl") and is_shift(k4, b, a, "trl")
    assert not is_shift(k4, a, b, "ind")
    assert not is_shift(k4, a, walk(k4, 0, 1), "wlk")


@settings(max_examples=200, deadline=None)
@given(multigraphs(), st.sampled_from(KINDS), st.data())
def test_shift_relation_is_symmetric(g, t, data):
    ws = enumerate_walks(g, t, data.draw(st.integers(0, 2)))
    if not ws:
        return
    w = data.draw(st.sampled_from(ws))
    for s in shifts_of(g, w, t):
        assert is_shift(g, w, s, t) and is_shift(g, s, w, t)
        assert w.canonical() in shifts_of(g, s, t) or s.canonical() == w.canonical()


# -- breadth-first reachability -----------------------------------------------------


def test_shift_reachable_examples(p4, k4):
    seq = shift_reachable(p4, walk(p4, 1, 2), "ind", _avoidable(p4, "ind"))
    assert [s.vertices for s in seq.steps] == [(1, 2), (2, 3)]
    assert seq.p == 1
    assert shift_reachable(k4, walk(k4, 0, 1, 2), "trl", _avoidable(k4, "trl")) is None


def test_shift_reachable_keeps_start_orientation(p4):
    start = walk(p4, 2, 1)
    seq = shift_reachable(p4, start, "ind", lambda w: w.canonical() == walk(p4, 2, 3))
    assert seq.first == start and seq.last.canonical() == walk(p4, 2, 3)


def test_shift_reachable_budget(c6):
    with pytest.raises(BudgetExceeded):
        shift_reachable(c6, walk(c6, 0, 1), "pth", lambda w: False, budget=2)


def _independent_distances(g, t, ell, start):
    """Shift graph built pairwise from ``is_shift``; BFS distances from ``start``."""
    ws = enumerate_walks(g, t, ell)
    sg = nx.Graph()
    sg.add_nodes_from(ws)
    for a, b in itertools.combinations(ws, 2):
        if is_shift(g, a, b, t):
            sg.add_edge(a, b)
    return nx.single_source_shortest_path_length(sg, start.canonical())


def test_bfs_sequences_are_shortest():
    graphs = list(connected_graphs(5)) + [g for g in random_multigraphs(40, seed=3) if g.order <= 5]
    checked = 0
    for g in graphs:
        for t in (WalkKind.TRL, WalkKind.PTH, WalkKind.IND):
            for ell in range(3):
                for w in enumerate_walks(g, t, ell):
                    goal = _avoidable(g, t)
                    seq = shift_reachable(g, w, t, goal)
                    dist = _independent_distances(g, t, ell, w)
                    best = min((d for x, d in dist.items() if goal(x)), default=None)
                    if best is None:
                        assert seq is None
                    else:
                        assert seq is not None and seq.p == best
                        assert verify_shift_sequence(g, seq).passed
                    checked += 1
    assert checked > 500


# -- induced paths --------------------------------------------------------------------


def test_shifting_induced_examples(p4, c5):
    seq = shifting_induced(p4, walk(p4, 1, 2))
    assert seq.first == walk(p4, 1, 2)
    assert verify_shift_sequence(p4, seq).passed
    assert is_avoidable(p4, seq.last, "ind", "oracle")
    w = walk(c5, 1, 2, 3)
    assert is_simplicial(c5, w, "ind")
    assert shifting_induced(c5, w).steps == (w,)


def test_shifting_induced_single_vertex_reaches_avoidable_vertex():
    for g in connected_graphs(6):
        for v in g.vertices:
            seq = shifting_induced(g, Walk.single(v))
            assert seq.first == Walk.single(v)
            assert verify_shift_sequence(g, seq).passed
            assert seq.stats.fallback is None


def test_shifting_induced_rejects_non_induced(k4):
    with pytest.raises(InputError):
        shifting_induced(k4, walk(k4, 0, 1, 2))


def test_shifting_induced_budget_keeps_partial_trace(c6):
    with pytest.raises(BudgetExceeded) as info:
        shifting_induced(c6, walk(c6, 0, 1, 2), budget=1)
    assert info.value.partial == [(0, 1, 2)]


def test_refined_shifting_on_c6(c6):
    p = walk(c6, 0, 1, 2)
    seq = refined_shifting(c6, p)
    assert seq.first == Walk.single(0)
    assert seq.stats.depth >= 1
    h = delete_closed_neighborhood(c6, {2})
    assert verify_shift_sequence(h, seq, require_avoidable_end=False).passed
    assert verify_shift_sequence(c6, seq).passed


def test_refined_shifting_base_case():
    # head 0 has no extension once N[3] is gone, and 0-1 has no one-sided extension
    g = path_graph(4)
    seq = refined_shifting(g, walk(g, 0, 1, 2, 3))
    assert seq.steps == (walk(g, 0, 1),)


def test_refined_shifting_needs_three_vertices(p4):
    with pytest.raises(InputError):
        refined_shifting(p4, walk(p4, 0, 1))


@settings(max_examples=150, deadline=None)
@given(multigraphs(6), st.data())
def test_shifting_induced_on_random_multigraphs(g, data):
    ws = enumerate_walks(g, "ind", data.draw(st.integers(0, 3)))
    if ws:
        p = data.draw(st.sampled_from(ws))
        seq = shifting_induced(g, p)
        assert seq.first == p
        assert verify_shift_sequence(g, seq).passed


# -- paths ------------------------------------------------------------------------------


def test_path_shifting_dfs_examples(c6, k4):
    p5 = path_graph(5)
    seq = path_shifting_dfs(p5, walk(p5, 1, 2))
    assert verify_shift_sequence(p5, seq).passed
    assert is_simplicial(p5, seq.last, "pth")
    seq = path_shifting_dfs(c6, walk(c6, 2, 3))
    assert is_avoidable(c6, walk(c6, 2, 3), "pth")
    assert verify_shift_sequence(c6, seq).passed
    seq = path_shifting_dfs(k4, walk(k4, 0, 1))
    assert is_avoidable(k4, seq.last, "pth", "oracle")


def test_path_shifting_dfs_rejects_non_path(k4):
    with pytest.raises(InputError):
        path_shifting_dfs(k4, walk(k4, 0, 1, 0))


def test_line_graph_route_length_zero_ends_at_non_cut_vertex():
    for g in connected_graphs(6):
        if g.order < 2:
            continue
        for v in g.vertices:
            seq = path_shifting_via_line_graph(g, Walk.single(v))
            assert verify_shift_sequence(g, seq).passed
            assert g.without_vertices([seq.last.first]).is_connected()


def test_line_graph_route_on_p4(p4):
    seq = path_shifting_via_line_graph(p4, walk(p4, 1, 2))
    assert verify_shift_sequence(p4, seq).passed
    assert seq.last.canonical() in (walk(p4, 0, 1), walk(p4, 2, 3))


def test_both_path_routes_on_small_corpus():
    for g in list(connected_graphs(5)) + random_multigraphs(40, seed=5):
        for ell in range(4):
            for p in enumerate_walks(g, "pth", ell):
                for fn in (path_shifting_dfs, path_shifting_via_line_graph):
                    seq = fn(g, p)
                    assert seq.first == p
                    rep = verify_shift_sequence(g, seq)
                    assert rep.passed, (fn.__name__, g.edges, p, rep.detail)


def test_path_from_edges():
    g = path_graph(4)
    assert path_from_edges(g, [2, 1, 0]) == walk(g, 3, 2, 1, 0)
    assert path_from_edges(g, [0, 2]) is None
    c3 = cycle_graph(3)
    assert path_from_edges(c3, [0, 1, 2]) is None


# -- walks --------------------------------------------------------------------------------


def test_walk_shifting_examples(triangle):
    k2 = family("complete", 2)
    assert walk_shifting(k2, Walk.single(0), Walk.single(0)).steps == (Walk.single(0),)
    assert walk_shifting(k2, Walk.single(0), Walk.single(1)).steps == (Walk.single(0), Walk.single(1))
    seq = walk_shifting(triangle, walk(triangle, 0, 1), walk(triangle, 2, 0))
    assert seq.first == walk(triangle, 0, 1) and seq.last == walk(triangle, 2, 0)
    assert verify_shift_sequence(triangle, seq, require_avoidable_end=False).passed


def test_walk_shifting_errors():
    g = family("complete", 2)
    two = g.without_edges([0])
    with pytest.raises(InputError):
        walk_shifting(two, Walk.single(0), Walk.single(1))
    with pytest.raises(InputError):
        walk_shifting(g, Walk.single(0), walk(g, 0, 1))


def test_walks_form_one_shift_class():
    for g in connected_graphs(5):
        for ell in range(3):
            ws = enumerate_walks(g, "wlk", ell)
            if ws:
                assert shift_class(g, ws[0], "wlk") == set(ws)


# -- verification -------------------------------------------------------------------------


def test_verify_reports_the_jump(p4):
    seq = ShiftSequence("ind", [walk(p4, 0, 1), walk(p4, 1, 2), walk(p4, 0, 1), walk(p4, 2, 3)])
    rep = verify_shift_sequence(p4, seq)
    assert not rep.passed and rep.index == 3 and rep.witnesses
    rep = verify_shift_sequence(p4, ShiftSequence("ind", [walk(p4, 1, 2)]))
    assert not rep.passed and "avoidable" in rep.detail


# -- the H_r property------------------------------------------------------------------------


def test_check_hr_vacuous_and_small_corpus(w6):
    assert check_Hr(w6, 2, 6)
    for g in connected_graphs(6):
        for v in g.vertices:
            for k in (1, 2, 3):
                assert check_Hr(g, k, v)


def test_check_hr_errors(p4):
    with pytest.raises(InputError):
        check_Hr(p4, 0, 0)
    with pytest.raises(InputError):
        check_Hr(p4, 1, 9)
