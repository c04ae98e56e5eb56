"""Extensions, simplicial / closable / avoidable walks.

Closability has two routes. ``fast`` uses a per-type reduction (mostly a
connectivity question on a pruned graph). ``oracle`` searches closed t-walks
that start with the walk itself, i.e. it looks for a return walk ``R`` from
the last vertex back to the first such that ``w + R`` is a closed t-walk,
and checks the result with the closed-walk classifier. A closed walk contains
``w`` as a contiguous cyclic subwalk exactly when one of its rotations starts
with ``w``, so nothing is lost by anchoring the search there.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Literal

from .errors import BudgetExceeded, InputError
from .graph import MultiGraph
from .walks import (
    Walk,
    WalkKind,
    as_kind,
    classify_closed_unchecked,
    classify_unchecked,
    validate,
)

Mode = Literal["fast", "oracle"]
DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class Extension:
    base: Walk
    walk: Walk

    @property
    def head(self) -> tuple[int, int]:
        """``(v0, e0)``: the vertex and edge added before the base walk."""
        return self.walk.vertices[0], self.walk.edges[0]

    @property
    def tail(self) -> tuple[int, int]:
        """``(ek, v_{k+1})``: the edge and vertex added after the base walk."""
        return self.walk.edges[-1], self.walk.vertices[-1]


def require_kind(g: MultiGraph, w: Walk, t: WalkKind | str) -> WalkKind:
    t = as_kind(t)
    validate(g, w)
    if not classify_unchecked(g, w, t):
        raise InputError(f"{w} is not a {t.value}-walk")
    return t


def _extension_walks(g: MultiGraph, w: Walk, t: WalkKind) -> list[Walk]:
    out = []
    seen = set()
    symmetric = w.reversed() == w
    inside = set(w.vertices)
    for e0, x in g.incident(w.first):
        if t.rank >= WalkKind.PTH.rank and x in inside:
            continue
        for ek, y in g.incident(w.last):
            if t.rank >= WalkKind.PTH.rank and (y in inside or y == x):
                continue
            cand = Walk((x,) + w.vertices + (y,), (e0,) + w.edges + (ek,))
            if not classify_unchecked(g, cand, t):
                continue
            if symmetric:
                key = cand.canonical()
                if key in seen:
                    continue
                seen.add(key)
            out.append(cand)
    return out


def extensions(g: MultiGraph, w: Walk, t: WalkKind | str) -> list[Extension]:
    """All t-extensions of ``w``; mirrored duplicates are dropped when ``w`` reads the same reversed."""
    t = require_kind(g, w, t)
    return [Extension(w, x) for x in _extension_walks(g, w, t)]


def is_simplicial(g: MultiGraph, w: Walk, t: WalkKind | str) -> bool:
    t = require_kind(g, w, t)
    return not _extension_walks(g, w, t)


# -- fast closability -------------------------------------------------------


def _reachable(g: MultiGraph, src: int, dst: int, *, skip_edges=frozenset(),
               skip_vertices=frozenset()) -> bool:
    if src in skip_vertices or dst in skip_vertices:
        return False
    seen = {src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            return True
        for e, y in g.incident(x):
            if e in skip_edges or y in seen or y in skip_vertices:
                continue
            seen.add(y)
            queue.append(y)
    return False


def _on_cycle(g: MultiGraph, v: int) -> bool:
    if g.has_loop(v):
        return True
    for e, o in g.incident(v):
        if _reachable(g, o, v, skip_edges={e}):
            return True
    return False


def _ind_closable_fast(g: MultiGraph, vs: tuple[int, ...], budget) -> bool:
    n = len(vs)
    if n == 1:
        v = vs[0]
        good = [u for u in sorted(g.neighbors(v)) if not g.has_loop(u)]
        for u in good:
            if g.multiplicity(v, u) == 2:
                return True
        single = [u for u in good if g.multiplicity(v, u) == 1]
        for i, a in enumerate(single):
            for b in single[i + 1:]:
                if g.adjacent(a, b):
                    if g.multiplicity(a, b) == 1:
                        return True
                elif _ind_closable_fast(g, (a, v, b), budget):
                    return True
        return False
    if n == 2:
        x, y = vs
        for z in g.neighbors(x) & g.neighbors(y):
            if not g.has_loop(z) and g.multiplicity(x, z) == 1 and g.multiplicity(y, z) == 1:
                return True
        for b in sorted(g.neighbors(y) - g.neighbors(x) - {x}):
            if not g.has_loop(b) and g.multiplicity(y, b) == 1:
                if _ind_closable_fast(g, (x, y, b), budget):
                    return True
        return False
    x, y = vs[0], vs[-1]
    blocked = set(g.looped_vertices)
    for v in vs[1:-1]:
        blocked.add(v)
        blocked |= g.neighbors(v)
    blocked.discard(x)
    blocked.discard(y)
    # BFS for a shortest x-y path avoiding the blocked set; it is chordless in g
    prev = {y: None}
    queue = deque([y])
    while queue and x not in prev:
        a = queue.popleft()
        for b in sorted(g.neighbors(a)):
            if b not in prev and b not in blocked:
                prev[b] = a
                queue.append(b)
    if x not in prev:
        return False
    route = [x]
    while prev[route[-1]] is not None:
        route.append(prev[route[-1]])
    if all(g.multiplicity(a, b) == 1 for a, b in zip(route, route[1:])):
        return True
    # a multi-edge on the shortest route: fall back to exhaustive search
    return _oracle_search(g, _vertex_walk(g, vs), WalkKind.IND, budget) is not None


def _vertex_walk(g: MultiGraph, vs: tuple[int, ...]) -> Walk:
    return Walk.from_vertices(g, vs)


def _fast_closable(g: MultiGraph, w: Walk, t: WalkKind, budget: int) -> bool:
    ell = w.length
    if t is WalkKind.WLK:
        return ell >= 1 or bool(g.incident(w.first))
    if t is WalkKind.TRL:
        if ell == 0:
            return _on_cycle(g, w.first)
        if w.first == w.last:
            return True
        return _reachable(g, w.last, w.first, skip_edges=frozenset(w.edges))
    if t is WalkKind.PTH:
        if ell == 0:
            return _on_cycle(g, w.first)
        return _reachable(g, w.last, w.first, skip_edges=frozenset(w.edges),
                          skip_vertices=frozenset(w.vertices[1:-1]))
    if t is WalkKind.IND:
        return _ind_closable_fast(g, w.vertices, budget)
    return _iso_search(g, w, budget) is not None


# -- searches ---------------------------------------------------------------


class _Counter:
    __slots__ = ("left", "total")

    def __init__(self, budget: int):
        self.left = budget
        self.total = budget

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(f"closability search exceeded {self.total} nodes", used=self.total)


def _iso_search(g: MultiGraph, w: Walk, budget: int) -> Walk | None:
    """Backtracking search for an isometric cycle starting with ``w``.

    Partial cycles are pruned as soon as some pair of their vertices is closer
    in ``g`` than any completion of the cycle would allow.
    """
    counter = _Counter(budget)
    v0 = w.first
    lmax = 2 * g.diameter_of_component(v0) + 1
    dist = g.distances_from
    vs = list(w.vertices)
    es = list(w.edges)

    def admissible() -> bool:
        n = len(vs) - 1
        for i in range(len(vs)):
            d = dist(vs[i])
            for j in range(i + 1, len(vs)):
                dp = j - i
                if d.get(vs[j], lmax + 1) < min(dp, n + 1 - dp):
                    return False
        return True

    if len(set(vs)) != len(vs) or not admissible():
        return None

    def rec() -> Walk | None:
        counter.tick()
        cur = vs[-1]
        for e, nxt in g.incident(cur):
            if e in es:
                continue
            if nxt == v0:
                cand = Walk(tuple(vs) + (v0,), tuple(es) + (e,))
                if classify_closed_unchecked(g, cand, WalkKind.ISO):
                    return cand
                continue
            if nxt in vs or g.has_loop(nxt):
                continue
            if len(vs) + dist(nxt).get(v0, lmax + 1) > lmax:
                continue
            vs.append(nxt)
            es.append(e)
            if admissible():
                found = rec()
                if found is not None:
                    return found
            vs.pop()
            es.pop()
        return None

    return rec()


def _oracle_search(g: MultiGraph, w: Walk, t: WalkKind, budget: int) -> Walk | None:
    """Exhaustive search for a closed t-walk that starts with ``w``.

    Bounds: closing part at most |V| edges for walks, total at most |E| for
    trails, at most |V| (and, for isometric cycles, 2*diam+1) for the rest.
    """
    counter = _Counter(budget)
    v0 = w.first
    vs = list(w.vertices)
    es = list(w.edges)
    ell = w.length

    if t is WalkKind.WLK:
        # iterative deepening keeps the search at the depth of the first hit
        for extra in range(1, g.order + 1):
            found = _iddfs(g, vs, es, v0, extra, counter)
            if found is not None:
                return found
        return None

    if t is WalkKind.TRL:
        limit = g.size
        failed: set = set()
        used = set(es)

        def trail(cur, depth) -> Walk | None:
            counter.tick()
            if cur == v0 and depth + ell >= 1:
                cand = Walk(tuple(vs), tuple(es))
                if classify_closed_unchecked(g, cand, t):
                    return cand
            if len(es) >= limit:
                return None
            key = (cur, frozenset(used))
            if key in failed:
                return None
            for e, nxt in g.incident(cur):
                if e in used:
                    continue
                used.add(e)
                vs.append(nxt)
                es.append(e)
                found = trail(nxt, depth + 1)
                if found is not None:
                    return found
                used.discard(e)
                vs.pop()
                es.pop()
            failed.add(key)
            return None

        return trail(w.last, 0)

    # cycles: plain, induced, isometric
    if len(set(vs)) != len(vs) or len(set(es)) != len(es):
        return None
    limit = g.order
    if t is WalkKind.ISO:
        limit = min(limit, 2 * g.diameter_of_component(v0) + 1)
    dist = g.distances_from

    def chordless(nxt) -> bool:
        # nxt will sit between vs[-1] and (eventually) v0
        if g.has_loop(nxt):
            return False
        if g.multiplicity(vs[-1], nxt) > 1 and len(vs) > 1:
            return False  # only a two-vertex cycle may use a doubled pair
        for x in vs[1:-1]:
            if g.adjacent(x, nxt):
                return False
        return True

    def cyc() -> Walk | None:
        counter.tick()
        cur = vs[-1]
        for e, nxt in g.incident(cur):
            if e in es:
                continue
            if nxt == v0:
                cand = Walk(tuple(vs) + (v0,), tuple(es) + (e,))
                if classify_closed_unchecked(g, cand, t):
                    return cand
                continue
            if nxt in vs:
                continue
            if len(vs) + 1 > limit:
                continue
            if t is not WalkKind.PTH:
                if not chordless(nxt):
                    continue
                if t is WalkKind.ISO and len(vs) + dist(nxt).get(v0, limit + 1) > limit:
                    continue
            vs.append(nxt)
            es.append(e)
            found = cyc()
            if found is not None:
                return found
            vs.pop()
            es.pop()
        return None

    return cyc()


def _iddfs(g, vs, es, v0, extra, counter) -> Walk | None:
    def rec(left):
        counter.tick()
        if left == 0:
            if vs[-1] == v0:
                return Walk(tuple(vs), tuple(es))
            return None
        for e, nxt in g.incident(vs[-1]):
            vs.append(nxt)
            es.append(e)
            found = rec(left - 1)
            vs.pop()
            es.pop()
            if found is not None:
                return found
        return None

    return rec(extra)


def closing_walk(g: MultiGraph, w: Walk, t: WalkKind | str, budget: int = DEFAULT_BUDGET) -> Walk | None:
    """A closed t-walk having ``w`` as a contiguous subwalk, or ``None`` (oracle search)."""
    t = require_kind(g, w, t)
    return _oracle_search(g, w, t, budget)


def is_closable(g: MultiGraph, w: Walk, t: WalkKind | str, mode: Mode = "fast",
                budget: int = DEFAULT_BUDGET) -> bool:
    t = require_kind(g, w, t)
    return _closable(g, w, t, mode, budget)


def _closable(g: MultiGraph, w: Walk, t: WalkKind, mode: str, budget: int) -> bool:
    if mode == "fast":
        return _fast_closable(g, w, t, budget)
    if mode == "oracle":
        return _oracle_search(g, w, t, budget) is not None
    raise InputError(f"unknown mode {mode!r}")


def non_closable_extensions(g: MultiGraph, w: Walk, t: WalkKind | str, mode: Mode = "fast",
                            budget: int = DEFAULT_BUDGET) -> list[Walk]:
    t = require_kind(g, w, t)
    return [x for x in _extension_walks(g, w, t) if not _closable(g, x, t, mode, budget)]


def first_non_closable_extension(g: MultiGraph, w: Walk, t: WalkKind, mode: str = "fast",
                                 budget: int = DEFAULT_BUDGET) -> Walk | None:
    for x in _extension_walks(g, w, t):
        if not _closable(g, x, t, mode, budget):
            return x
    return None


def is_avoidable(g: MultiGraph, w: Walk, t: WalkKind | str, mode: Mode = "fast",
                 budget: int = DEFAULT_BUDGET) -> bool:
    """Every t-extension of ``w`` is t-closable (vacuously so when ``w`` is simplicial)."""
    t = require_kind(g, w, t)
    return first_non_closable_extension(g, w, t, mode, budget) is None
