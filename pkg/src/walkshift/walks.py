"""Walks and the five walk types.

A :class:`Walk` is an alternating vertex/edge sequence stored as two tuples.
Classification is always relative to a host :class:`MultiGraph`.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import InputError
from .graph import MultiGraph, is_isometric_subgraph


class WalkKind(str, enum.Enum):
    WLK = "wlk"
    TRL = "trl"
    PTH = "pth"
    IND = "ind"
    ISO = "iso"

    @property
    def rank(self) -> int:
        return _RANK[self]

    def __str__(self) -> str:
        return self.value


_RANK = {k: i for i, k in enumerate(WalkKind)}
KINDS = tuple(WalkKind)


def as_kind(t: WalkKind | str) -> WalkKind:
    try:
        return WalkKind(t)
    except ValueError:
        raise InputError(f"unknown walk type {t!r}") from None


@dataclass(frozen=True, order=True)
class Walk:
    vertices: tuple[int, ...]
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.vertices or len(self.edges) != len(self.vertices) - 1:
            raise InputError("a walk needs l+1 vertices and l edges, l >= 0")

    @classmethod
    def single(cls, v: int) -> Walk:
        return cls((v,), ())

    @classmethod
    def from_vertices(cls, g: MultiGraph, vertices: Iterable[int]) -> Walk:
        """Walk through ``vertices`` where each consecutive pair has exactly one joining edge."""
        vs = tuple(vertices)
        es = []
        for a, b in zip(vs, vs[1:]):
            g.check_vertex(a)
            between = g.edges_between(a, b)
            if len(between) != 1:
                what = "no edge" if not between else "parallel edges"
                raise InputError(f"{what} between {a} and {b}; give the edge explicitly")
            es.append(between[0])
        if vs:
            g.check_vertex(vs[-1])
        return cls(vs, tuple(es))

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> Walk:
        return Walk(self.vertices[::-1], self.edges[::-1])

    def canonical(self) -> Walk:
        r = self.reversed()
        return r if (r.vertices, r.edges) < (self.vertices, self.edges) else self

    def concat(self, other: Walk) -> Walk:
        if self.last != other.first:
            raise InputError("walks do not meet")
        return Walk(self.vertices + other.vertices[1:], self.edges + other.edges)

    def window(self, start: int, length: int) -> Walk:
        return Walk(self.vertices[start:start + length + 1], self.edges[start:start + length])

    def __str__(self) -> str:
        parts = [str(self.vertices[0])]
        for e, v in zip(self.edges, self.vertices[1:]):
            parts.append(f"-{e}-{v}")
        return "".join(parts)


def validate(g: MultiGraph, w: Walk) -> None:
    for v in w.vertices:
        g.check_vertex(v)
    for i, e in enumerate(w.edges):
        a, b = g.endpoints(e)
        u, v = w.vertices[i], w.vertices[i + 1]
        if not ((a == u and b == v) or (a == v and b == u)):
            raise InputError(f"edge {e} does not join {u} and {v}")


def is_closed(w: Walk) -> bool:
    return w.length >= 1 and w.first == w.last


# -- classification ---------------------------------------------------------


def _is_induced_path(g: MultiGraph, vs: tuple[int, ...]) -> bool:
    n = len(vs)
    for i in range(n):
        if g.has_loop(vs[i]):
            return False
        for j in range(i + 1, n):
            if g.multiplicity(vs[i], vs[j]) != (1 if j == i + 1 else 0):
                return False
    return True


def _is_isometric_path(g: MultiGraph, vs: tuple[int, ...]) -> bool:
    for i in range(len(vs)):
        d = g.distances_from(vs[i])
        for j in range(i + 2, len(vs)):
            if d.get(vs[j]) != j - i:
                return False
    return True


def classify_unchecked(g: MultiGraph, w: Walk, t: WalkKind) -> bool:
    if t is WalkKind.WLK:
        return True
    if len(set(w.edges)) != len(w.edges):
        return False
    if t is WalkKind.TRL:
        return True
    if len(set(w.vertices)) != len(w.vertices):
        return False
    if t is WalkKind.PTH:
        return True
    if not _is_induced_path(g, w.vertices):
        return False
    if t is WalkKind.IND:
        return True
    return _is_isometric_path(g, w.vertices)


def classify(g: MultiGraph, w: Walk, t: WalkKind | str) -> bool:
    """Is ``w`` a walk of type ``t`` in ``g``?"""
    validate(g, w)
    return classify_unchecked(g, w, as_kind(t))


def classify_closed_unchecked(g: MultiGraph, c: Walk, t: WalkKind) -> bool:
    if not is_closed(c):
        return False
    if t is WalkKind.WLK:
        return True
    if len(set(c.edges)) != len(c.edges):
        return False
    if t is WalkKind.TRL:
        return True
    cyc = c.vertices[:-1]
    L = len(cyc)
    if len(set(cyc)) != L:
        return False
    if t is WalkKind.PTH:
        return True
    # induced: the cycle's edges are all the edges of g among its vertices
    if L == 1:
        if g.multiplicity(cyc[0], cyc[0]) != 1:
            return False
    else:
        for i in range(L):
            if g.has_loop(cyc[i]):
                return False
        if L == 2:
            if g.multiplicity(cyc[0], cyc[1]) != 2:
                return False
        else:
            for i in range(L):
                for j in range(i + 1, L):
                    gap = j - i
                    want = 1 if gap == 1 or gap == L - 1 else 0
                    if g.multiplicity(cyc[i], cyc[j]) != want:
                        return False
    if t is WalkKind.IND:
        return True
    for i in range(L):
        d = g.distances_from(cyc[i])
        for j in range(i + 1, L):
            if d.get(cyc[j]) != min(j - i, L - j + i):
                return False
    return True


def classify_closed(g: MultiGraph, c: Walk, t: WalkKind | str) -> bool:
    """Is ``c`` a closed walk of type ``t``: closed walk, closed trail, cycle, induced or isometric cycle?"""
    validate(g, c)
    return classify_closed_unchecked(g, c, as_kind(t))


def strongest_kind(g: MultiGraph, w: Walk) -> WalkKind:
    best = WalkKind.WLK
    for t in KINDS[1:]:
        if not classify(g, w, t):
            break
        best = t
    return best


def subgraph_is_isometric(g: MultiGraph, w: Walk) -> bool:
    """Generic isometry test of the subgraph traced by ``w`` (slow; used for cross-checks)."""
    return is_isometric_subgraph(g, w.vertices, w.edges)


# -- canonical forms --------------------------------------------------------


def canonical_form(w: Walk) -> Walk:
    return w.canonical()


def canonical_closed(c: Walk) -> Walk:
    """Least representative of a closed walk under rotation and reversal."""
    L = c.length
    vs, es = c.vertices[:-1], c.edges
    best = None
    for seq_v, seq_e in ((vs, es), (_rev_cycle(vs), es[::-1])):
        for i in range(L):
            rv = seq_v[i:] + seq_v[:i]
            re = seq_e[i:] + seq_e[:i]
            cand = (rv + (rv[0],), re)
            if best is None or cand < best:
                best = cand
    return Walk(*best)


def _rev_cycle(vs):
    # reversed closed walk v0 v_{L-1} ... v1, aligned so edges reverse cleanly
    return (vs[0],) + vs[:0:-1]


# -- enumeration ------------------------------------------------------------


def _extend_ok(g: MultiGraph, t: WalkKind, vs: list[int], es: list[int], e: int, w: int,
               closing: bool) -> bool:
    if t is WalkKind.WLK:
        return True
    if e in es:
        return False
    if t is WalkKind.TRL:
        return True
    if w in vs and not (closing and w == vs[0]):
        return False
    if t is WalkKind.PTH:
        return True
    if closing:
        # chords are only ruled out once the cycle is complete
        return True
    if g.has_loop(w) or g.multiplicity(vs[-1], w) != 1:
        return False
    for x in vs[:-1]:
        if g.adjacent(x, w):
            return False
    if t is WalkKind.IND:
        return True
    d = g.distances_from(w)
    n = len(vs)
    return all(d.get(x) == n - i for i, x in enumerate(vs))


def iter_oriented_walks(g: MultiGraph, t: WalkKind | str, length: int) -> Iterator[Walk]:
    """Every oriented t-walk of the given length (both orientations are produced)."""
    t = as_kind(t)
    for v in g.vertices:
        if t.rank >= WalkKind.IND.rank and g.has_loop(v):
            continue
        yield from _grow(g, t, [v], [], length)


def _grow(g, t, vs, es, length):
    if len(es) == length:
        yield Walk(tuple(vs), tuple(es))
        return
    for e, w in g.incident(vs[-1]):
        if _extend_ok(g, t, vs, es, e, w, False):
            vs.append(w)
            es.append(e)
            yield from _grow(g, t, vs, es, length)
            vs.pop()
            es.pop()


def enumerate_walks(g: MultiGraph, t: WalkKind | str, length: int, closed: bool = False) -> list[Walk]:
    """All t-walks of exactly ``length`` edges, one representative per reversal class.

    With ``closed=True`` the closed t-walks are listed instead, identified up to
    rotation and reversal. The result is sorted.
    """
    t = as_kind(t)
    if length < 0:
        raise InputError("length must be non-negative")
    if not closed:
        return sorted({w.canonical() for w in iter_oriented_walks(g, t, length)})
    if length == 0:
        return []
    seen = set()
    # subpaths of a cycle need not be induced or isometric; prune as cycles only
    grow_as = WalkKind.PTH if t.rank > WalkKind.PTH.rank else t
    for v in g.vertices:
        for c in _grow_closed(g, grow_as, [v], [], length):
            if classify_closed_unchecked(g, c, t):
                seen.add(canonical_closed(c))
    return sorted(seen)


def _grow_closed(g, t, vs, es, length):
    if len(es) == length:
        if vs[-1] == vs[0]:
            yield Walk(tuple(vs), tuple(es))
        return
    closing = len(es) == length - 1
    for e, w in g.incident(vs[-1]):
        if closing and w != vs[0]:
            continue
        if _extend_ok(g, t, vs, es, e, w, closing):
            vs.append(w)
            es.append(e)
            yield from _grow_closed(g, t, vs, es, length)
            vs.pop()
            es.pop()
