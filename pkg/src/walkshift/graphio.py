"""The ``.mg`` text format, walk arguments and DOT export.

``.mg`` is line oriented::

    # comment
    v <id> [label]
    e <id> <u> <v>

Ids are decimal. Record order does not matter, but ids may not repeat.
"""

from __future__ import annotations

from .errors import InputError, ParseError
from .graph import MultiGraph
from .walks import Walk, validate

HEADER = "# walkshift multigraph"


def parse_graph(text: str) -> MultiGraph:
    vertices: dict[int, tuple[str | None, int]] = {}
    edges: dict[int, tuple[int, int, int]] = {}

    def num(tok: str, lineno: int, what: str) -> int:
        if not tok.isdigit():
            raise ParseError(f"{what} must be a non-negative decimal integer, got {tok!r}", lineno)
        return int(tok)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "v":
            if len(parts) < 2:
                raise ParseError("vertex record needs an id", lineno)
            vid = num(parts[1], lineno, "vertex id")
            if vid in vertices:
                raise ParseError(f"duplicate vertex id {vid}", lineno)
            label = " ".join(parts[2:]) or None
            vertices[vid] = (label, lineno)
        elif kind == "e":
            if len(parts) != 4:
                raise ParseError("edge record is 'e <id> <u> <v>'", lineno)
            eid, a, b = (num(p, lineno, "id") for p in parts[1:])
            if eid in edges:
                raise ParseError(f"duplicate edge id {eid}", lineno)
            edges[eid] = (a, b, lineno)
        else:
            raise ParseError(f"unknown record kind {kind!r}", lineno)
    for eid, (a, b, lineno) in edges.items():
        for x in (a, b):
            if x not in vertices:
                raise ParseError(f"edge {eid} has dangling endpoint {x}", lineno)
    labels = {v: lab for v, (lab, _) in vertices.items() if lab is not None}
    return MultiGraph(vertices, {e: (a, b) for e, (a, b, _) in edges.items()}, labels)


def serialize_graph(g: MultiGraph) -> str:
    lines = [HEADER]
    for v in g.vertices:
        lab = g.labels.get(v)
        if lab is not None and ("#" in lab or lab != " ".join(lab.split()) or not lab):
            raise InputError(f"label of vertex {v} cannot be written to .mg: {lab!r}")
        lines.append(f"v {v} {lab}" if lab is not None else f"v {v}")
    for e, (a, b) in g.edges.items():
        lines.append(f"e {e} {a} {b}")
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> MultiGraph:
    if path == "-":
        import sys

        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def parse_walk(g: MultiGraph, spec: str) -> Walk:
    """Parse ``"v0,v1:e1,v2,..."``.

    Each item after the first may name the edge used to reach it. Without one,
    the step needs exactly one edge between the two vertices.
    """
    items = [s.strip() for s in spec.split(",") if s.strip()]
    if not items:
        raise InputError("empty walk")
    vs: list[int] = []
    es: list[int] = []
    for i, item in enumerate(items):
        vtok, _, etok = item.partition(":")
        try:
            v = int(vtok)
            e = int(etok) if etok else None
        except ValueError:
            raise InputError(f"bad walk item {item!r}") from None
        g.check_vertex(v)
        if i == 0:
            if e is not None:
                raise InputError("the first walk item cannot name an edge")
        else:
            if e is None:
                between = g.edges_between(vs[-1], v)
                if len(between) != 1:
                    why = "no edge" if not between else "parallel edges"
                    raise InputError(f"{why} between {vs[-1]} and {v}; write {v}:<edge id>")
                e = between[0]
            es.append(e)
        vs.append(v)
    w = Walk(tuple(vs), tuple(es))
    validate(g, w)
    return w


def format_walk(w: Walk) -> str:
    """Inverse of :func:`parse_walk` with every edge named."""
    parts = [str(w.vertices[0])]
    parts += [f"{v}:{e}" for v, e in zip(w.vertices[1:], w.edges)]
    return ",".join(parts)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: MultiGraph, walk: Walk | None = None, name: str = "G") -> str:
    """DOT text; each parallel edge and loop is its own line, walk edges are bold."""
    marked = set(walk.edges) if walk is not None else set()
    on_walk = set(walk.vertices) if walk is not None else set()
    out = [f"graph {name} {{"]
    for v in g.vertices:
        attrs = [f"label={_quote(g.label(v))}"]
        if v in on_walk:
            attrs.append("penwidth=2")
        out.append(f"  {v} [{', '.join(attrs)}];")
    for e, (a, b) in g.edges.items():
        attrs = [f"id={_quote('e' + str(e))}"]
        if e in marked:
            attrs += ["style=bold", "penwidth=3"]
        out.append(f"  {a} -- {b} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"
