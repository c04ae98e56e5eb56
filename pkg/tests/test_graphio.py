import pytest
from hypothesis import given, settings

from conftest import multigraphs
from walkshift import InputError, MultiGraph, ParseError, Walk, parse_graph, parse_walk, serialize_graph, to_dot
from walkshift.corpus import connected_graphs, random_multigraphs
from walkshift.families import FAMILIES, family
from walkshift.graphio import format_walk


def test_parse_examples():
    g = parse_graph("v 0\nv 1\ne 0 0 1\ne 1 0 0")
    assert g.order == 2 and g.size == 2 and g.has_loop(0) and g.multiplicity(0, 1) == 1
    g = parse_graph("v 0\nv 1\ne 0 0 1\ne 1 0 1\ne 2 0 1")
    assert g.multiplicity(0, 1) == 3


def test_comments_labels_and_blank_lines():
    g = parse_graph("# header\n\nv 3 left side  # trailing\nv 7\ne 4 7 3\n")
    assert g.vertices == (3, 7)
    assert g.label(3) == "left side"
    assert g.endpoints(4) == (3, 7)


@pytest.mark.parametrize("text,line", [
    ("e 0 0 1", 1),
    ("v 0\nv 0", 2),
    ("v 0\nv 1\ne 0 0 1\ne 0 1 0", 4),
    ("v 0\nx 1", 2),
    ("v 0\ne 0 0", 2),
    ("v a", 1),
    ("v", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_round_trip_on_corpus_and_families():
    graphs = list(connected_graphs(6)) + random_multigraphs(50)
    defaults = {"dipole": (3,), "complete": (4,), "complete-bipartite": (2, 3), "wheel": (6,),
                "path-graph": (4,), "cycle-graph": (5,), "grid-product": (3, 3), "torus-strip": (5,)}
    graphs += [family(f, *defaults.get(f, ())) for f in FAMILIES]
    for g in graphs:
        h = parse_graph(serialize_graph(g))
        assert h.vertices == g.vertices and dict(h.edges) == dict(g.edges)
        assert dict(h.labels) == dict(g.labels)


@settings(max_examples=200, deadline=None)
@given(multigraphs(7))
def test_round_trip_property(g):
    h = parse_graph(serialize_graph(g))
    assert dict(h.edges) == dict(g.edges) and h.vertices == g.vertices


def test_unserializable_label():
    with pytest.raises(InputError):
        serialize_graph(MultiGraph([0], {}, {0: "a#b"}))


def test_parse_walk():
    g = parse_graph("v 0\nv 1\nv 2\ne 0 0 1\ne 1 0 1\ne 5 1 2\n")
    assert parse_walk(g, "1,2") == Walk((1, 2), (5,))
    w = parse_walk(g, "0,1:1,2")
    assert w == Walk((0, 1, 2), (1, 5))
    assert format_walk(w) == "0,1:1,2:5"
    assert parse_walk(g, format_walk(w)) == w
    for bad in ("0,1", "", "0:1", "0,2", "x", "0,1:5", "9"):
        with pytest.raises(InputError):
            parse_walk(g, bad)


def test_dot_export():
    g = family("dipole", 2)
    text = to_dot(g, Walk((0, 1), (1,)))
    assert text.startswith("graph G {") and text.rstrip().endswith("}")
    lines = [ln for ln in text.splitlines() if "--" in ln]
    assert len(lines) == 2
    assert 'id="e1"' in lines[1] and "penwidth=3" in lines[1]
    assert "bold" not in lines[0]
    assert 'label="u"' in text
    assert to_dot(family("loop-pair")).count("--") == 3
