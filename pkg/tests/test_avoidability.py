import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import multigraphs, to_nx, walk
from walkshift import (
    KINDS,
    BudgetExceeded,
    InputError,
    Walk,
    WalkKind,
    classify_closed,
    closing_walk,
    enumerate_walks,
    extensions,
    is_avoidable,
    is_closable,
    is_simplicial,
    non_closable_extensions,
)
from walkshift.corpus import connected_graphs, random_multigraphs
from walkshift.families import family


def _contains(cycle: Walk, w: Walk) -> bool:
    """Is ``w`` a contiguous subwalk of the closed walk ``cycle`` in either direction?"""
    L, k = cycle.length, w.length
    if k > L:
        return False
    for c in (cycle, cycle.reversed()):
        vs = c.vertices[:-1] * 2 + c.vertices[:1]
        es = c.edges * 2
        for i in range(L):
            if vs[i:i + k + 1] == w.vertices and es[i:i + k] == w.edges:
                return True
    return False


def _contains_vertices(cycle: list[int], vs: tuple[int, ...]) -> bool:
    L, k = len(cycle), len(vs)
    if k > L:
        return False
    for c in (cycle, cycle[::-1]):
        ring = c * 2
        if any(tuple(ring[i:i + k]) == vs for i in range(L)):
            return True
    return False


# -- examples ----------------------------------------------------------------------


def test_k4_trail_has_three_extensions_two_unclosable(k4):
    w = walk(k4, 0, 1, 2)
    exts = extensions(k4, w, "trl")
    assert len(exts) == 3
    assert all(x.base == w and x.walk.vertices[1:-1] == w.vertices for x in exts)
    bad = non_closable_extensions(k4, w, "trl")
    assert len(bad) == 2
    assert {x.vertices for x in bad} == {(2, 0, 1, 2, 3), (3, 0, 1, 2, 0)}
    for x in bad:
        assert not is_closable(k4, x, "trl", "oracle")
    assert not is_avoidable(k4, w, "trl")


def test_c5_middle_path_is_simplicial(c5):
    w = walk(c5, 1, 2, 3)
    assert extensions(c5, w, "ind") == []
    assert is_simplicial(c5, w, "ind")
    assert is_avoidable(c5, w, "ind")


def test_loop_pair_unique_extension():
    g = family("loop-pair")
    exts = extensions(g, Walk.single(0), "trl")
    assert len(exts) == 1
    loop_u = g.edges_between(0, 0)[0]
    uv = g.edges_between(0, 1)[0]
    want = Walk((1, 0, 0), (uv, loop_u))
    x = exts[0].walk
    assert x.canonical() == want.canonical()
    assert not is_avoidable(g, Walk.single(0), "trl", "oracle")


def test_simplicial_examples(w6):
    g = family("complete", 4)
    assert is_simplicial(g, Walk.single(0), "ind")
    k2 = family("complete", 2)
    assert is_simplicial(k2, walk(k2, 0, 1), "pth")
    assert not is_simplicial(w6, Walk.single(0), "ind")


def test_closable_examples(triangle, w6):
    assert is_closable(triangle, walk(triangle, 0, 1), "ind")
    for w in enumerate_walks(w6, "iso", 2):
        assert not is_closable(w6, w, "iso")
        assert not is_closable(w6, w, "iso", "oracle")


def test_avoidable_examples(p4, w6, k4):
    for g in (p4, w6, k4, family("loop-pair")):
        for w in enumerate_walks(g, "wlk", 2):
            assert is_avoidable(g, w, "wlk")
    for mode in ("fast", "oracle"):
        assert not is_avoidable(p4, walk(p4, 1, 2), "ind", mode)
    for v in w6.vertices:
        assert not is_avoidable(w6, Walk.single(v), "iso")


def test_type_mismatch_rejected(k4):
    with pytest.raises(InputError):
        is_avoidable(k4, walk(k4, 0, 1, 2), "ind")
    with pytest.raises(InputError):
        extensions(k4, walk(k4, 0, 1, 0), "trl")
    with pytest.raises(InputError):
        is_closable(k4, walk(k4, 0, 1), "ind", mode="guess")


def test_oracle_budget(w6):
    w = enumerate_walks(w6, "iso", 2)[0]
    with pytest.raises(BudgetExceeded):
        is_closable(w6, w, "iso", "oracle", budget=1)


def test_closing_walk_witness(k4, w6):
    for g in (k4, w6, family("dipole", 3), family("loop-pair")):
        for t in KINDS:
            for ell in range(3):
                for w in enumerate_walks(g, t, ell):
                    c = closing_walk(g, w, t)
                    assert (c is not None) == is_closable(g, w, t)
                    if c is not None:
                        assert classify_closed(g, c, t) and _contains(c, w)


# -- independent routes -------------------------------------------------------------


def test_path_closability_against_networkx_cycles():
    for g in connected_graphs(6):
        ng = nx.Graph(to_nx(g))
        dist = dict(nx.all_pairs_shortest_path_length(ng))
        cycles = {"pth": list(nx.simple_cycles(ng))}
        cycles["ind"] = list(nx.chordless_cycles(ng))
        cycles["iso"] = [c for c in cycles["ind"]
                         if all(dist[a][b] == min(abs(i - j), len(c) - abs(i - j))
                                for i, a in enumerate(c) for j, b in enumerate(c))]
        for t, cyc in cycles.items():
            for ell in range(4):
                for w in enumerate_walks(g, t, ell):
                    want = any(len(c) >= 3 and _contains_vertices(c, w.vertices) for c in cyc)
                    assert is_closable(g, w, t) == want, (g.edges, t, w)


def test_trail_closability_by_closed_enumeration():
    graphs = [g for g in random_multigraphs(60, seed=11) if g.size <= 7]
    assert len(graphs) >= 10
    for g in graphs:
        closed = [c for L in range(1, g.size + 1) for c in enumerate_walks(g, "trl", L, closed=True)]
        for ell in range(4):
            for w in enumerate_walks(g, "trl", ell):
                assert is_closable(g, w, "trl") == any(_contains(c, w) for c in closed)


# -- properties --------------------------------------------------------------------


def _pick(data, g, t):
    ell = data.draw(st.integers(0, 3))
    ws = enumerate_walks(g, t, ell)
    return data.draw(st.sampled_from(ws)) if ws else None


@settings(max_examples=200, deadline=None)
@given(multigraphs(), st.sampled_from(KINDS), st.data())
def test_closability_is_reversal_invariant(g, t, data):
    w = _pick(data, g, t)
    if w is not None:
        assert is_closable(g, w, t) == is_closable(g, w.reversed(), t)
        assert is_avoidable(g, w, t) == is_avoidable(g, w.reversed(), t)


@settings(max_examples=200, deadline=None)
@given(multigraphs(), st.sampled_from(KINDS), st.data())
def test_simplicial_implies_avoidable(g, t, data):
    w = _pick(data, g, t)
    if w is not None and is_simplicial(g, w, t):
        assert is_avoidable(g, w, t, "oracle")


@settings(max_examples=300, deadline=None)
@given(multigraphs(), st.sampled_from(KINDS), st.data())
def test_fast_agrees_with_oracle(g, t, data):
    w = _pick(data, g, t)
    if w is not None:
        assert is_closable(g, w, t, "fast") == is_closable(g, w, t, "oracle")


@settings(max_examples=100, deadline=None)
@given(multigraphs(), st.data())
def test_walks_are_always_avoidable(g, data):
    w = _pick(data, g, WalkKind.WLK)
    if w is not None:
        assert is_avoidable(g, w, "wlk", "oracle")
