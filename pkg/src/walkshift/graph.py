"""Immutable multigraphs and the constructions used throughout the package.

Vertices and edges are non-negative integers. An edge is stored as a sorted
endpoint pair, so ``(v, v)`` is a loop and two edge ids with equal endpoint
pairs are parallel. Every derived graph (deletion, contraction, products,
line graphs) is a new object; inputs are never mutated.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import TYPE_CHECKING

from .errors import InputError

if TYPE_CHECKING:
    from .walks import Walk

INF = math.inf


class MultiGraph:
    """Finite undirected graph with loops and parallel edges.

    ``next_vertex_id`` is carried through derivations so a contraction never
    hands out an id that was used earlier in the same chain, even if the vertex
    holding it has since been deleted.
    """

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Mapping[int, tuple[int, int]] | None = None,
        labels: Mapping[int, str] | None = None,
        *,
        next_vertex_id: int = 0,
    ):
        vs = sorted(set(vertices))
        for v in vs:
            if not isinstance(v, int) or v < 0:
                raise InputError(f"vertex id must be a non-negative integer: {v!r}")
        vset = frozenset(vs)
        es: dict[int, tuple[int, int]] = {}
        for e, (a, b) in sorted((edges or {}).items()):
            if not isinstance(e, int) or e < 0:
                raise InputError(f"edge id must be a non-negative integer: {e!r}")
            if a not in vset or b not in vset:
                raise InputError(f"edge {e} has an endpoint outside the vertex set")
            es[e] = (a, b) if a <= b else (b, a)
        self._vertices = tuple(vs)
        self._vset = vset
        self._edges = es
        self._labels = {v: str(lab) for v, lab in (labels or {}).items() if v in vset}
        self.next_vertex_id = max(next_vertex_id, vs[-1] + 1 if vs else 0)

        inc: dict[int, list[tuple[int, int]]] = {v: [] for v in vs}
        mult: dict[tuple[int, int], int] = {}
        for e, (a, b) in es.items():
            inc[a].append((e, b))
            if a != b:
                inc[b].append((e, a))
            mult[(a, b)] = mult.get((a, b), 0) + 1
        self._inc = {v: tuple(lst) for v, lst in inc.items()}
        self._mult = mult
        self._nbrs = {
            v: frozenset(o for _, o in lst if o != v) for v, lst in self._inc.items()
        }
        self._loops = frozenset(a for (a, b) in mult if a == b)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_edge_list(
        cls,
        vertices: Iterable[int] | int,
        pairs: Iterable[tuple[int, int]],
        labels: Mapping[int, str] | None = None,
    ) -> MultiGraph:
        """Build a graph whose edge ids are 0, 1, ... in the order given."""
        if isinstance(vertices, int):
            vertices = range(vertices)
        return cls(vertices, dict(enumerate(pairs)), labels)

    # -- basic accessors ------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> Mapping[int, tuple[int, int]]:
        return MappingProxyType(self._edges)

    @property
    def labels(self) -> Mapping[int, str]:
        return MappingProxyType(self._labels)

    def label(self, v: int) -> str:
        return self._labels.get(v, str(v))

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def size(self) -> int:
        return len(self._edges)

    def __contains__(self, v: object) -> bool:
        return v in self._vset

    def has_edge(self, e: int) -> bool:
        return e in self._edges

    def endpoints(self, e: int) -> tuple[int, int]:
        try:
            return self._edges[e]
        except KeyError:
            raise InputError(f"unknown edge {e}") from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise InputError(f"vertex {v} is not an endpoint of edge {e}")

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(edge, other endpoint)`` pairs at ``v`` in ascending edge id; a loop appears once."""
        return self._inc[v]

    def neighbors(self, v: int) -> frozenset[int]:
        """Adjacent vertices other than ``v`` itself."""
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return sum(2 if o == v else 1 for _, o in self._inc[v])

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get((u, v) if u <= v else (v, u), 0)

    def adjacent(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def has_loop(self, v: int) -> bool:
        return v in self._loops

    @property
    def looped_vertices(self) -> frozenset[int]:
        return self._loops

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        return tuple(e for e, o in self._inc[u] if o == v)

    @cached_property
    def is_simple(self) -> bool:
        return not self._loops and all(c == 1 for c in self._mult.values())

    def check_vertex(self, v: int) -> None:
        if v not in self._vset:
            raise InputError(f"unknown vertex {v}")

    # -- equality -------------------------------------------------------------

    @cached_property
    def _key(self):
        return (self._vertices, tuple(self._edges.items()), tuple(sorted(self._labels.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"MultiGraph(order={self.order}, size={self.size})"

    # -- derived graphs -------------------------------------------------------

    def induced_subgraph(self, keep: Iterable[int]) -> MultiGraph:
        keep = frozenset(keep)
        for v in keep:
            self.check_vertex(v)
        es = {e: ab for e, ab in self._edges.items() if ab[0] in keep and ab[1] in keep}
        return MultiGraph(keep, es, self._labels, next_vertex_id=self.next_vertex_id)

    def without_vertices(self, drop: Iterable[int]) -> MultiGraph:
        drop = frozenset(drop)
        return self.induced_subgraph(v for v in self._vertices if v not in drop)

    def without_edges(self, drop: Iterable[int]) -> MultiGraph:
        drop = frozenset(drop)
        es = {e: ab for e, ab in self._edges.items() if e not in drop}
        return MultiGraph(self._vertices, es, self._labels, next_vertex_id=self.next_vertex_id)

    def without_loops(self) -> MultiGraph:
        return self.without_edges(e for e, (a, b) in self._edges.items() if a == b)

    def closed_neighborhood(self, s: Iterable[int]) -> frozenset[int]:
        out = set()
        for v in s:
            self.check_vertex(v)
            out.add(v)
            out |= self._nbrs[v]
        return frozenset(out)

    # -- distances ------------------------------------------------------------

    def distances_from(self, u: int) -> dict[int, int]:
        """BFS distances from ``u`` to every vertex of its component (cached)."""
        cache = self.__dict__.setdefault("_dist_cache", {})
        d = cache.get(u)
        if d is None:
            self.check_vertex(u)
            d = {u: 0}
            queue = deque([u])
            while queue:
                x = queue.popleft()
                dx = d[x] + 1
                for y in self._nbrs[x]:
                    if y not in d:
                        d[y] = dx
                        queue.append(y)
            cache[u] = d
        return d

    def dist(self, u: int, v: int) -> float:
        return self.distances_from(u).get(v, INF)

    @cached_property
    def components(self) -> tuple[frozenset[int], ...]:
        seen: set[int] = set()
        comps = []
        for v in self._vertices:
            if v not in seen:
                comp = frozenset(self.distances_from(v))
                seen |= comp
                comps.append(comp)
        return tuple(comps)

    def component_of(self, v: int) -> frozenset[int]:
        for comp in self.components:
            if v in comp:
                return comp
        raise InputError(f"unknown vertex {v}")

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def diameter_of_component(self, v: int) -> int:
        comp = self.component_of(v)
        return max(max(self.distances_from(u).values()) for u in comp)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def delete_closed_neighborhood(g: MultiGraph, s: Iterable[int]) -> MultiGraph:
    """Induced subgraph on the vertices outside ``N[s]``."""
    return g.without_vertices(g.closed_neighborhood(s))


def contract_edge(g: MultiGraph, e: int, new_vertex: int) -> MultiGraph:
    """Contract a non-loop edge ``uv`` into ``new_vertex``.

    Loops that the merge would produce at ``new_vertex`` are dropped, and the
    parallel edges it would produce towards a common neighbour are collapsed
    into the one with the smallest id. Everything else keeps its id.
    """
    u, v = g.endpoints(e)
    if u == v:
        raise InputError(f"edge {e} is a loop and cannot be contracted")
    if new_vertex in g or new_vertex < 0:
        raise InputError(f"vertex id {new_vertex} is already in use")
    merged = {u, v}
    keep: dict[int, tuple[int, int]] = {}
    towards: dict[int, int] = {}
    for f, (a, b) in g.edges.items():
        ina, inb = a in merged, b in merged
        if not ina and not inb:
            keep[f] = (a, b)
        elif ina and inb:
            continue
        else:
            w = b if ina else a
            if w not in towards or f < towards[w]:
                towards[w] = f
    for w, f in towards.items():
        keep[f] = (new_vertex, w)
    vs = [x for x in g.vertices if x not in merged] + [new_vertex]
    labels = {x: lab for x, lab in g.labels.items() if x not in merged}
    return MultiGraph(vs, keep, labels, next_vertex_id=max(g.next_vertex_id, new_vertex + 1))


def cartesian_product(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    """``g □ h`` with vertex ``(u, v)`` numbered ``i*|V(h)| + j`` and labelled ``"(lu,lv)"``."""
    for name, f in (("first", g), ("second", h)):
        if not f.is_simple:
            raise InputError(f"{name} factor must be simple (no loops or parallel edges)")
    gv, hv = g.vertices, h.vertices
    gi = {u: i for i, u in enumerate(gv)}
    hi = {v: j for j, v in enumerate(hv)}
    nh = len(hv)

    def vid(u: int, v: int) -> int:
        return gi[u] * nh + hi[v]

    labels = {vid(u, v): f"({g.label(u)},{h.label(v)})" for u in gv for v in hv}
    pairs = []
    for u in gv:
        for a, b in h.edges.values():
            pairs.append((vid(u, a), vid(u, b)))
    for v in hv:
        for a, b in g.edges.values():
            pairs.append((vid(a, v), vid(b, v)))
    return MultiGraph.from_edge_list(range(len(gv) * nh), pairs, labels)


def line_graph(g: MultiGraph) -> tuple[MultiGraph, dict[int, int]]:
    """Return ``(L(g), {line-graph vertex: edge of g})``.

    Line-graph vertices are numbered 0.. in ascending edge-id order of ``g``
    and labelled ``"e<id>"``. Two distinct edges are adjacent iff they share an
    endpoint; the result is always simple.
    """
    eids = sorted(g.edges)
    index = {e: i for i, e in enumerate(eids)}
    corr = {i: e for i, e in enumerate(eids)}
    pairs = set()
    for v in g.vertices:
        at_v = sorted({index[e] for e, _ in g.incident(v)})
        for i, a in enumerate(at_v):
            for b in at_v[i + 1:]:
                pairs.add((a, b))
    labels = {i: f"e{e}" for i, e in corr.items()}
    return MultiGraph.from_edge_list(range(len(eids)), sorted(pairs), labels), corr


def distance(g: MultiGraph, u: int, v: int) -> float:
    g.check_vertex(u)
    g.check_vertex(v)
    return g.dist(u, v)


def is_isometric_subgraph(g: MultiGraph, h_vertices: Iterable[int], h_edges: Iterable[int]) -> bool:
    """True iff distances inside the subgraph ``(h_vertices, h_edges)`` match those in ``g``."""
    hv = frozenset(h_vertices)
    he = frozenset(h_edges)
    for v in hv:
        g.check_vertex(v)
    for e in he:
        a, b = g.endpoints(e)
        if a not in hv or b not in hv:
            raise InputError(f"edge {e} is not within the given vertex set")
    sub = MultiGraph(hv, {e: g.endpoints(e) for e in he})
    for u in hv:
        dh = sub.distances_from(u)
        dg = g.distances_from(u)
        for v in hv:
            if dh.get(v, INF) != dg.get(v, INF):
                return False
    return True


@dataclass(frozen=True)
class DfsTree:
    root: int
    parent: dict[int, tuple[int, int]]
    order: dict[int, int]
    children: dict[int, tuple[int, ...]] = field(repr=False)
    depth: dict[int, int] = field(repr=False)

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff ``a`` lies on the tree path from the root to ``b`` (inclusive)."""
        while True:
            if a == b:
                return True
            if b not in self.parent:
                return False
            b = self.parent[b][0]

    def path_from_root(self, v: int) -> list[int]:
        out = [v]
        while v in self.parent:
            v = self.parent[v][0]
            out.append(v)
        out.reverse()
        return out

    def tree_edge(self, child: int) -> int:
        return self.parent[child][1]

    def is_leaf(self, v: int) -> bool:
        return not self.children.get(v)

    def longest_down(self, v: int) -> list[int]:
        """Longest downward path from ``v`` to a leaf; ties go to the lexicographically least."""
        best = [v]
        for c in self.children.get(v, ()):
            cand = [v] + self.longest_down(c)
            if len(cand) > len(best) or (len(cand) == len(best) and cand < best):
                best = cand
        return best


def dfs_tree(g: MultiGraph, seed: Walk) -> DfsTree:
    """Depth-first tree whose first branch is exactly the seed path.

    After the seed is laid down, neighbours are explored in ascending edge id.
    """
    sv, se = tuple(seed.vertices), tuple(seed.edges)
    if len(set(sv)) != len(sv) or len(se) != len(sv) - 1:
        raise InputError("DFS seed must be a path")
    for i, e in enumerate(se):
        a, b = g.endpoints(e)
        if {a, b} != {sv[i], sv[i + 1]}:
            raise InputError(f"edge {e} does not join {sv[i]} and {sv[i + 1]}")
    for v in sv:
        g.check_vertex(v)
    forced = {sv[i]: se[i] for i in range(len(se))}

    def ordered(v: int):
        inc = g.incident(v)
        first = forced.get(v)
        if first is None:
            return iter(inc)
        return iter([x for x in inc if x[0] == first] + [x for x in inc if x[0] != first])

    root = sv[0]
    parent: dict[int, tuple[int, int]] = {}
    order = {root: 0}
    depth = {root: 0}
    children: dict[int, list[int]] = {root: []}
    stack = [(root, ordered(root))]
    while stack:
        v, it = stack[-1]
        for e, w in it:
            if w not in order:
                order[w] = len(order)
                depth[w] = depth[v] + 1
                parent[w] = (v, e)
                children[v].append(w)
                children[w] = []
                stack.append((w, ordered(w)))
                break
        else:
            stack.pop()
    return DfsTree(root, parent, order, {v: tuple(c) for v, c in children.items()}, depth)
