"""Shifts, shift reachability and the constructive shifting procedures.

Two walks of length ``l`` are shifts of each other when, after choosing an
orientation for each, one is the first ``l`` steps and the other the last
``l`` steps of a single t-walk of length ``l + 1``. Walks are compared up to
reversal throughout.

The constructive procedures:

* :func:`shifting_induced` / :func:`refined_shifting` for induced paths,
  recursing on ``G - N[v]`` and on edge contractions;
* :func:`path_shifting_dfs`, which slides a path along branches of a DFS tree
  grown from the path itself;
* :func:`path_shifting_via_line_graph`, which reduces paths of ``G`` to
  induced paths of the line graph;
* :func:`walk_shifting`, a window slide over a concatenated walk.
"""

from __future__ import annotations

import time
from collections import deque
from collections.abc import Callable
from dataclasses import dataclass, field

from .avoidability import first_non_closable_extension, is_avoidable, require_kind
from .errors import BudgetExceeded, InputError
from .graph import (
    MultiGraph,
    contract_edge,
    delete_closed_neighborhood,
    dfs_tree,
    line_graph,
)
from .report import VerificationReport
from .walks import (
    Walk,
    WalkKind,
    as_kind,
    classify_unchecked,
    enumerate_walks,
    validate,
)

DEFAULT_STEP_BUDGET = 1_000_000
DEFAULT_BFS_BUDGET = 1_000_000


@dataclass
class ShiftStats:
    """Instrumentation attached to every computed sequence.

    ``depth`` is the deepest refined_shifting recursion reached (0 when the
    procedure was not involved), ``nodes`` counts recursive calls or BFS
    states, ``rounds`` counts DFS-procedure passes, and ``fallback`` names a
    repair route if one was needed (``None`` normally).
    """

    p: int = 0
    depth: int = 0
    nodes: int = 0
    rounds: int = 0
    fallback: str | None = None


@dataclass
class ShiftSequence:
    kind: WalkKind
    steps: tuple[Walk, ...]
    stats: ShiftStats = field(default_factory=ShiftStats)

    def __post_init__(self):
        self.kind = as_kind(self.kind)
        self.steps = tuple(self.steps)
        if not self.steps:
            raise InputError("a shift sequence has at least one step")
        self.stats.p = len(self.steps) - 1

    @property
    def p(self) -> int:
        return len(self.steps) - 1

    @property
    def first(self) -> Walk:
        return self.steps[0]

    @property
    def last(self) -> Walk:
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


# -- the shift relation -----------------------------------------------------


def _one_step_unions(g: MultiGraph, w: Walk, t: WalkKind):
    """Yield ``(union, shifted)`` for every one-step shift of ``w``."""
    if w.length == 0:
        u = w.first
        for e, v in g.incident(u):
            union = Walk((u, v), (e,))
            if classify_unchecked(g, union, t):
                yield union, Walk.single(v)
        return
    for a in (w, w.reversed()):
        for e, v in g.incident(a.last):
            union = Walk(a.vertices + (v,), a.edges + (e,))
            if classify_unchecked(g, union, t):
                yield union, union.window(1, w.length)


def shifts_of(g: MultiGraph, w: Walk, t: WalkKind | str) -> list[Walk]:
    """Every t-walk one shift away from ``w`` (canonical, sorted, ``w`` itself excluded)."""
    t = require_kind(g, w, t)
    own = w.canonical()
    out = {s.canonical() for _, s in _one_step_unions(g, w, t)}
    out.discard(own)
    return sorted(out)


def is_shift(g: MultiGraph, a: Walk, b: Walk, t: WalkKind | str) -> bool:
    """Are ``a`` and ``b`` t-shifts of each other in ``g``?"""
    t = as_kind(t)
    validate(g, a)
    validate(g, b)
    if a.length != b.length:
        return False
    if a.length == 0:
        u, v = a.first, b.first
        return any(
            classify_unchecked(g, Walk((u, v), (e,)), t) for e in g.edges_between(u, v)
        )
    for x in (a, a.reversed()):
        for y in (b, b.reversed()):
            if x.vertices[1:] == y.vertices[:-1] and x.edges[1:] == y.edges[:-1]:
                union = Walk(x.vertices + y.vertices[-1:], x.edges + y.edges[-1:])
                if classify_unchecked(g, union, t):
                    return True
    return False


def shift_reachable(
    g: MultiGraph,
    start: Walk,
    t: WalkKind | str,
    target: Callable[[Walk], bool],
    budget: int = DEFAULT_BFS_BUDGET,
) -> ShiftSequence | None:
    """Shortest shift sequence from ``start`` to a walk satisfying ``target``.

    Breadth-first over canonical t-walks; ``None`` when the shift class of
    ``start`` has no such walk. Raises :class:`BudgetExceeded` after
    ``budget`` expanded states.
    """
    t = require_kind(g, start, t)
    if target(start):
        return ShiftSequence(t, (start,), ShiftStats(nodes=1))
    root = start.canonical()
    parent: dict[Walk, Walk | None] = {root: None}
    queue = deque([start])
    expanded = 0
    while queue:
        cur = queue.popleft()
        expanded += 1
        if expanded > budget:
            raise BudgetExceeded(f"shift search exceeded {budget} states", used=expanded)
        ckey = cur.canonical()
        for _, nxt in _one_step_unions(g, cur, t):
            key = nxt.canonical()
            if key in parent:
                continue
            parent[key] = ckey
            if target(nxt):
                chain = [key]
                while parent[chain[-1]] is not None:
                    chain.append(parent[chain[-1]])
                chain.reverse()
                chain[0] = start
                return ShiftSequence(t, chain, ShiftStats(nodes=expanded))
            queue.append(nxt)
    return None


def shift_class(g: MultiGraph, start: Walk, t: WalkKind | str,
                budget: int = DEFAULT_BFS_BUDGET) -> set[Walk]:
    """All canonical t-walks reachable from ``start`` by shifts."""
    t = require_kind(g, start, t)
    seen = {start.canonical()}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if len(seen) > budget:
            raise BudgetExceeded(f"shift class exceeds {budget} walks", used=len(seen))
        for _, nxt in _one_step_unions(g, cur, t):
            key = nxt.canonical()
            if key not in seen:
                seen.add(key)
                queue.append(nxt)
    return seen


# -- induced paths ------------------------------------------------------------


def _end_candidates(g: MultiGraph, vs: tuple[int, ...], inside: set[int], end: int,
                    rest: tuple[int, ...]) -> list[int]:
    out = []
    for c in g.neighbors(end):
        if c in inside or g.has_loop(c) or g.multiplicity(end, c) != 1:
            continue
        if any(g.adjacent(c, r) for r in rest):
            continue
        out.append(c)
    return sorted(out)


def _ind_extension_pairs(g: MultiGraph, vs: tuple[int, ...]) -> list[tuple[int, int]]:
    """Pairs ``(x, y)`` such that ``x vs y`` is an induced path, in this orientation."""
    inside = set(vs)
    xs = _end_candidates(g, vs, inside, vs[0], vs[1:])
    if not xs:
        return []
    ys = _end_candidates(g, vs, inside, vs[-1], vs[:-1])
    return [(x, y) for x in xs for y in ys if x != y and not g.adjacent(x, y)]


class _Trace:
    def __init__(self, budget: int):
        self.budget = budget
        self.steps: list[tuple[int, ...]] = []
        self.calls = 0
        self.depth = 0

    def emit(self, vs: tuple[int, ...]):
        if len(self.steps) >= self.budget:
            raise BudgetExceeded(
                f"shifting exceeded {self.budget} steps", partial=list(self.steps),
                used=len(self.steps),
            )
        self.steps.append(vs)


def _refined(h: MultiGraph, p: tuple[int, ...], trace: _Trace, depth: int) -> None:
    trace.calls += 1
    trace.depth = max(trace.depth, depth)
    k = len(p) - 2
    head, anchor = p[:k], p[-1]
    trace.emit(head)
    rest = delete_closed_neighborhood(h, (anchor,))
    pairs = _ind_extension_pairs(rest, head)
    if pairs:
        x, y = pairs[0]
        _refined(rest, (x,) + head + (y,), trace, depth + 1)
    q = trace.steps[-1]
    near = h.neighbors(anchor)
    best = None
    for o in (q, q[::-1]):
        for x, y in _ind_extension_pairs(h, o):
            if y in near and x not in near:
                cand = (x, y, o)
                if best is None or cand < best:
                    best = cand
                break  # pairs come sorted, so the first qualifying one is least for this o
    if best is None:
        return
    x, y, o = best
    e = min(h.edges_between(anchor, y))
    y2 = h.next_vertex_id
    contracted = contract_edge(h, e, y2)
    _refined(contracted, (x,) + o + (y2,), trace, depth + 1)


def _to_sequence(g: MultiGraph, t: WalkKind, start: Walk, vsteps, stats: ShiftStats) -> ShiftSequence:
    steps = [start]
    for vs in vsteps[1:]:
        steps.append(Walk.from_vertices(g, vs))
    return ShiftSequence(t, steps, stats)


def _finish_with_search(g: MultiGraph, seq: ShiftSequence, t: WalkKind, label: str) -> ShiftSequence:
    """Append a BFS leg when ``seq`` does not already end avoidable."""
    if is_avoidable(g, seq.last, t):
        return seq
    leg = shift_reachable(g, seq.last, t, lambda w: is_avoidable(g, w, t))
    if leg is None:
        raise RuntimeError(f"no avoidable {t.value}-walk is reachable from {seq.last}")
    stats = seq.stats
    stats.fallback = label
    stats.nodes += leg.stats.nodes
    return ShiftSequence(t, seq.steps + leg.steps[1:], stats)


def refined_shifting(g: MultiGraph, p: Walk, budget: int = DEFAULT_STEP_BUDGET) -> ShiftSequence:
    """Shift ``p_1..p_k`` (the path minus its last two vertices) to an avoidable induced path.

    Every step avoids ``N[p_{k+2}]``. ``p`` must be an induced path with at
    least three vertices.
    """
    require_kind(g, p, WalkKind.IND)
    if len(p.vertices) < 3:
        raise InputError("refined_shifting needs an induced path on at least 3 vertices")
    trace = _Trace(budget)
    _refined(g, p.vertices, trace, 1)
    head = Walk(p.vertices[:-2], p.edges[:-2])
    return _to_sequence(g, WalkKind.IND, head, trace.steps,
                        ShiftStats(depth=trace.depth, nodes=trace.calls, rounds=1))


def shifting_induced(g: MultiGraph, p: Walk, budget: int = DEFAULT_STEP_BUDGET) -> ShiftSequence:
    """Shift the induced path ``p`` to an avoidable induced path.

    On simple graphs the recursive procedure alone always lands on an
    avoidable path. Parallel edges can defeat its final case analysis; when
    the end is not avoidable a BFS leg is appended and ``stats.fallback`` is
    set to ``"bfs"``.
    """
    require_kind(g, p, WalkKind.IND)
    trace = _Trace(budget)
    trace.emit(p.vertices)
    pairs = _ind_extension_pairs(g, p.vertices)
    if pairs:
        x, y = pairs[0]
        _refined(g, (y,) + p.vertices[::-1] + (x,), trace, 1)
    seq = _to_sequence(g, WalkKind.IND, p, trace.steps,
                       ShiftStats(depth=trace.depth, nodes=trace.calls, rounds=1))
    return _finish_with_search(g, seq, WalkKind.IND, "bfs")


# -- paths: DFS-tree procedure ----------------------------------------------


def _slide(route: Walk, length: int) -> list[Walk]:
    return [route.window(i, length) for i in range(route.length - length + 1)]


def _is_path(w: Walk) -> bool:
    return len(set(w.vertices)) == len(w.vertices)


def _tree_walk(tree, vs: list[int]) -> Walk:
    """Downward tree path ``vs`` as a walk (each vertex after the first is a child of its predecessor)."""
    return Walk(tuple(vs), tuple(tree.tree_edge(c) for c in vs[1:]))


def _dfs_round(g: MultiGraph, p: Walk, notes: set[str]) -> list[Walk]:
    ell = p.length
    tree = dfs_tree(g, p)
    q = p.concat(_tree_walk(tree, tree.longest_down(p.last)))
    steps = _slide(q, ell)
    p1 = steps[-1]
    v0 = p1.first
    down = tree.longest_down(v0)
    if len(down) - 1 > ell and down[1] == p1.vertices[1]:
        # the deepest branch below v0 runs back through p1; use the deepest other branch
        notes.add("branch")
        down = [v0]
        for c in tree.children.get(v0, ()):
            if c == p1.vertices[1]:
                continue
            cand = [v0] + tree.longest_down(c)
            if len(cand) > len(down) or (len(cand) == len(down) and cand < down):
                down = cand
    if len(down) - 1 > ell:
        route = p1.reversed().concat(_tree_walk(tree, down))
        if _is_path(route):
            steps += _slide(route, ell)[1:]
        else:
            notes.add("route")
    p2 = steps[-1]
    bad = first_non_closable_extension(g, p2, WalkKind.PTH)
    if bad is None or ell == 0:
        return steps
    # orient the extension as x p2 y
    if bad.vertices[1] != p2.first:
        bad = bad.reversed()
    x, ex = bad.vertices[0], bad.edges[0]
    v0 = p2.first
    below = tree.longest_down(x)
    route = p2.reversed().concat(Walk((v0, x), (ex,))).concat(_tree_walk(tree, below))
    if not _is_path(route):
        notes.add("route")
        return steps
    steps += _slide(route, ell)[1:]
    return steps


def path_shifting_dfs(g: MultiGraph, p: Walk, max_rounds: int | None = None) -> ShiftSequence:
    """Shift the path ``p`` to an avoidable path by sliding it along DFS-tree branches.

    One pass follows the longest tree branch through ``p``, then (if that
    branch is short) the deepest branch under the new first vertex, then the
    branch behind a non-closable extension. If a pass ends on a path that is
    still not avoidable, the procedure restarts from there with a fresh tree;
    ``stats.rounds`` records how many passes were used.
    """
    require_kind(g, p, WalkKind.PTH)
    if max_rounds is None:
        max_rounds = 2 * g.order + 2
    steps = [p]
    notes: set[str] = set()
    rounds = 0
    while True:
        rounds += 1
        if rounds > max_rounds:
            raise BudgetExceeded(f"DFS shifting did not settle within {max_rounds} rounds",
                                 partial=steps, used=rounds)
        steps += _dfs_round(g, steps[-1], notes)[1:]
        if is_avoidable(g, steps[-1], WalkKind.PTH):
            break
    stats = ShiftStats(rounds=rounds, fallback=",".join(sorted(notes)) or None)
    return ShiftSequence(WalkKind.PTH, steps, stats)


# -- paths: line-graph reduction --------------------------------------------


def path_from_edges(g: MultiGraph, edges: list[int]) -> Walk | None:
    """The path whose consecutive edges are ``edges``, or ``None`` if they do not chain into one."""
    if len(edges) == 1:
        a, b = g.endpoints(edges[0])
        return Walk((a, b), (edges[0],))
    a, b = g.endpoints(edges[0])
    c, d = g.endpoints(edges[1])
    shared = {a, b} & {c, d}
    if len(shared) != 1:
        return None
    (mid,) = shared
    vs = [a if b == mid else b, mid]
    for e in edges[1:]:
        u, v = g.endpoints(e)
        if vs[-1] not in (u, v):
            return None
        vs.append(v if u == vs[-1] else u)
    w = Walk(tuple(vs), tuple(edges))
    return w if classify_unchecked(g, w, WalkKind.PTH) else None


def _vertex_leaf_route(g: MultiGraph, v: int) -> list[Walk]:
    dist = g.distances_from(v)
    far = max(dist.values())
    u = min(x for x, d in dist.items() if d == far)
    route = [u]
    while route[-1] != v:
        cur = route[-1]
        route.append(min(x for x in g.neighbors(cur) if dist.get(x) == dist[cur] - 1))
    return [Walk.single(x) for x in reversed(route)]


def path_shifting_via_line_graph(g: MultiGraph, p: Walk,
                                 budget: int = DEFAULT_STEP_BUDGET) -> ShiftSequence:
    """Shift a path to an avoidable one through the line graph.

    Length 0: walk to a farthest vertex of the component (a leaf of a BFS
    tree, so deleting it keeps the component connected). Otherwise the edge
    sequence of ``p`` is an induced path of the line graph of ``g`` with loops
    removed; it is shifted there by :func:`shifting_induced` and every step is
    mapped back to a path of ``g`` and re-checked. If a step fails to map back
    (parallel edges can do that) the sequence is cut there and finished by BFS,
    with ``stats.fallback = "bfs"``.
    """
    require_kind(g, p, WalkKind.PTH)
    if p.length == 0:
        steps = _vertex_leaf_route(g, p.first)
        return ShiftSequence(WalkKind.PTH, steps, ShiftStats())
    lg, corr = line_graph(g.without_loops())
    inv = {e: i for i, e in corr.items()}
    start = Walk.from_vertices(lg, [inv[e] for e in p.edges])
    iseq = shifting_induced(lg, start, budget)
    steps = [p]
    broken = False
    for s in iseq.steps[1:]:
        w = path_from_edges(g, [corr[i] for i in s.vertices])
        if w is None:
            broken = True
            break
        steps.append(w)
    stats = ShiftStats(depth=iseq.stats.depth, nodes=iseq.stats.nodes, rounds=1,
                       fallback=iseq.stats.fallback)
    seq = ShiftSequence(WalkKind.PTH, steps, stats)
    if broken:
        seq.stats.fallback = "bfs"
    return _finish_with_search(g, seq, WalkKind.PTH, "bfs")


# -- walks ------------------------------------------------------------------


def walk_shifting(g: MultiGraph, source: Walk, target: Walk) -> ShiftSequence:
    """Window slide over ``source``, a shortest connecting walk, then ``target``."""
    validate(g, source)
    validate(g, target)
    if source.length != target.length:
        raise InputError("walks must have equal length")
    if source == target:
        return ShiftSequence(WalkKind.WLK, (source,))
    a, b = source.last, target.first
    dist = g.distances_from(b)
    if a not in dist:
        raise InputError("walks lie in different components")
    vs, es = [a], []
    while vs[-1] != b:
        cur = vs[-1]
        e, nxt = min((e, x) for e, x in g.incident(cur) if dist.get(x) == dist[cur] - 1)
        vs.append(nxt)
        es.append(e)
    route = source.concat(Walk(tuple(vs), tuple(es))).concat(target)
    return ShiftSequence(WalkKind.WLK, _slide(route, source.length))


# -- verification -----------------------------------------------------------


def verify_shift_sequence(g: MultiGraph, s: ShiftSequence, require_avoidable_end: bool = True,
                          mode: str = "oracle") -> VerificationReport:
    """Check every step and every consecutive pair; report the first violation."""
    t0 = time.perf_counter()
    t = s.kind
    claim = f"shift-sequence.{t.value}"
    inst = f"{len(s.steps)} steps, length {s.steps[0].length}"

    def fail(i: int, what: str, witness: str) -> VerificationReport:
        return VerificationReport(claim, inst, False, [witness], what, i,
                                  time.perf_counter() - t0)

    ell = s.steps[0].length
    for i, w in enumerate(s.steps):
        try:
            validate(g, w)
        except InputError as exc:
            return fail(i, f"not a walk: {exc}", str(w))
        if w.length != ell:
            return fail(i, "length differs from the first step", str(w))
        if not classify_unchecked(g, w, t):
            return fail(i, f"not a {t.value}-walk", str(w))
        if i and not is_shift(g, s.steps[i - 1], w, t):
            return fail(i, "not a shift of the previous step", f"{s.steps[i - 1]} -> {w}")
    if require_avoidable_end and not is_avoidable(g, s.last, t, mode):
        return fail(len(s.steps) - 1, "last step is not avoidable", str(s.last))
    return VerificationReport(claim, inst, True, detail="ok", elapsed=time.perf_counter() - t0)


def check_Hr(g: MultiGraph, k: int, v: int, budget: int = DEFAULT_BFS_BUDGET) -> bool:
    """Can every induced path on ``k`` vertices of ``g - N[v]`` be shifted inside it to one avoidable in ``g``?"""
    if k < 1:
        raise InputError("k must be positive")
    g.check_vertex(v)
    h = delete_closed_neighborhood(g, (v,))
    pending = set(enumerate_walks(h, WalkKind.IND, k - 1))
    while pending:
        w = pending.pop()
        cls = shift_class(h, w, WalkKind.IND, budget)
        pending -= cls
        if not any(is_avoidable(g, c, WalkKind.IND) for c in sorted(cls)):
            return False
    return True
