import itertools
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import multigraphs, to_nx, walk
from walkshift import (
    KINDS,
    InputError,
    MultiGraph,
    Walk,
    WalkKind,
    canonical_form,
    classify,
    classify_closed,
    enumerate_walks,
    is_closed,
)
from walkshift.corpus import connected_graphs, random_multigraphs
from walkshift.families import family

# -- independent reference: generate every edge sequence, filter by definition


def _oriented(g: MultiGraph, length: int):
    if length == 0:
        for v in g.vertices:
            yield (v,), ()
        return
    darts = [(e, a, b) for e, (a, b) in g.edges.items()] + [
        (e, b, a) for e, (a, b) in g.edges.items() if a != b]
    for seq in itertools.product(darts, repeat=length):
        if all(seq[i][2] == seq[i + 1][1] for i in range(length - 1)):
            yield (seq[0][1],) + tuple(d[2] for d in seq), tuple(d[0] for d in seq)


def _ref_is(g: MultiGraph, vs, es, t: WalkKind, dist) -> bool:
    if t is WalkKind.WLK:
        return True
    if len(set(es)) < len(es):
        return False
    if t is WalkKind.TRL:
        return True
    if len(set(vs)) < len(vs):
        return False
    if t is WalkKind.PTH:
        return True
    inside = [e for e, (a, b) in g.edges.items() if a in vs and b in vs]
    if len(inside) != len(es):
        return False
    if t is WalkKind.IND:
        return True
    return all(dist[vs[i]].get(vs[j]) == j - i for i in range(len(vs)) for j in range(i, len(vs)))


def reference_walks(g, t, length):
    dist = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    out = set()
    for vs, es in _oriented(g, length):
        if _ref_is(g, vs, es, t, dist):
            out.add(min((vs, es), (vs[::-1], es[::-1])))
    return out


# -- classification -------------------------------------------------------------


def test_classify_examples(c6, k4):
    # ends of a 3-edge arc of C6 are 3 apart either way round, so it is still isometric
    assert classify(c6, walk(c6, 0, 1, 2, 3), "iso")
    w = walk(c6, 0, 1, 2, 3, 4)
    assert classify(c6, w, "pth") and classify(c6, w, "ind") and not classify(c6, w, "iso")
    for t in KINDS:
        assert classify(k4, Walk.single(0), t)
    w = walk(k4, 0, 1, 2)
    assert classify(k4, w, WalkKind.PTH) and not classify(k4, w, WalkKind.IND)


def test_classify_rejects_broken_incidence(p4):
    with pytest.raises(InputError):
        classify(p4, Walk((0, 2), (0,)), "wlk")


def test_loops_and_parallels_block_induced():
    g = MultiGraph.from_edge_list(3, [(0, 1), (0, 1), (1, 2), (2, 2)])
    assert classify(g, Walk((0, 1), (0,)), "pth")
    assert not classify(g, Walk((0, 1), (0,)), "ind")
    assert not classify(g, Walk.single(2), "ind")
    assert classify(g, Walk.single(2), "pth")


def test_is_closed_examples(triangle):
    g = MultiGraph.from_edge_list(1, [(0, 0)])
    assert is_closed(Walk((0, 0), (0,)))
    assert not is_closed(Walk.single(0))
    assert is_closed(walk(triangle, 0, 1, 2, 0))
    assert classify_closed(triangle, walk(triangle, 0, 1, 2, 0), "iso")
    assert classify_closed(g, Walk((0, 0), (0,)), "ind")


def test_closed_semantics_of_multigraph_cycles():
    dip = family("dipole", 2)
    c = Walk((0, 1, 0), (0, 1))
    assert classify_closed(dip, c, "pth") and classify_closed(dip, c, "ind")
    dip3 = family("dipole", 3)
    assert classify_closed(dip3, c, "pth") and not classify_closed(dip3, c, "ind")
    assert not classify_closed(dip, Walk((0, 1, 0), (0, 0)), "trl")


@settings(max_examples=200, deadline=None)
@given(multigraphs(), st.data())
def test_classification_is_monotone(g, data):
    walks = enumerate_walks(g, "wlk", data.draw(st.integers(0, 3)))
    if not walks:
        return
    w = data.draw(st.sampled_from(walks))
    flags = [classify(g, w, t) for t in KINDS]
    assert flags == sorted(flags, reverse=True)
    if w.length <= 1:
        assert flags[1]
        assert flags[2] == (w.length == 0 or w.first != w.last)


# -- enumeration -------------------------------------------------------------------


def test_enumeration_examples(k4, c6):
    assert len(enumerate_walks(k4, "trl", 2)) == 12
    for g in (k4, c6, family("loop-pair")):
        assert len(enumerate_walks(g, "ind", 0)) == sum(not g.has_loop(v) for v in g.vertices)
    assert len(enumerate_walks(family("dipole", 3), "trl", 1)) == 3


@pytest.mark.parametrize("t", KINDS)
def test_enumeration_matches_generate_and_filter(t):
    graphs = list(connected_graphs(5)) + random_multigraphs(25, seed=7)
    for g in graphs:
        if g.order > 5 or g.size > 8:
            continue
        for length in range(4):
            got = {(w.vertices, w.edges) for w in enumerate_walks(g, t, length)}
            assert got == reference_walks(g, t, length), (g.edges, t, length)


def test_enumeration_is_canonical_and_sorted(k4):
    ws = enumerate_walks(k4, "pth", 3)
    assert ws == sorted(ws)
    assert all(w == canonical_form(w) == canonical_form(w.reversed()) for w in ws)


def test_closed_enumeration_against_networkx_cycles():
    for g in connected_graphs(6):
        ng = nx.Graph(to_nx(g))
        simple = Counter(len(c) for c in nx.simple_cycles(ng))
        chordless = Counter(len(c) for c in nx.chordless_cycles(ng))
        for length in range(3, g.order + 1):
            assert len(enumerate_walks(g, "pth", length, closed=True)) == simple[length]
            assert len(enumerate_walks(g, "ind", length, closed=True)) == chordless[length]


def test_closed_enumeration_on_multigraphs():
    g = family("loop-pair")
    assert len(enumerate_walks(g, "pth", 1, closed=True)) == 2
    assert enumerate_walks(g, "pth", 2, closed=True) == []
    assert len(enumerate_walks(family("dipole", 3), "pth", 2, closed=True)) == 3
    assert enumerate_walks(g, "wlk", 0, closed=True) == []


def test_isometric_cycles_of_w6(w6):
    assert len(enumerate_walks(w6, "iso", 3, closed=True)) == 6
    assert enumerate_walks(w6, "iso", 6, closed=True) == []
    assert len(enumerate_walks(w6, "ind", 6, closed=True)) == 1


@settings(max_examples=200, deadline=None)
@given(multigraphs(), st.data())
def test_canonical_form_is_idempotent(g, data):
    walks = enumerate_walks(g, "wlk", data.draw(st.integers(0, 3)))
    if walks:
        w = data.draw(st.sampled_from(walks))
        assert canonical_form(canonical_form(w)) == canonical_form(w) == canonical_form(w.reversed())


def test_negative_length_rejected(k4):
    with pytest.raises(InputError):
        enumerate_walks(k4, "wlk", -1)
