"""Named graph families, symmetry counting and the exhaustive negative-result checks."""

from __future__ import annotations

import re
import time
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .avoidability import first_non_closable_extension
from .errors import BudgetExceeded, InputError
from .graph import MultiGraph, cartesian_product
from .report import VerificationReport
from .walks import (
    Walk,
    WalkKind,
    as_kind,
    canonical_closed,
    classify_closed_unchecked,
    enumerate_walks,
)

FAMILIES = (
    "loop-pair", "dipole", "complete", "complete-bipartite", "wheel",
    "path-graph", "cycle-graph", "grid-product", "torus-strip",
)

_ARITY = {
    "loop-pair": 0, "dipole": 1, "complete": 1, "complete-bipartite": 2, "wheel": 1,
    "path-graph": 1, "cycle-graph": 1, "grid-product": 2, "torus-strip": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.family not in _ARITY:
            raise InputError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if len(self.params) != _ARITY[self.family]:
            raise InputError(f"{self.family} takes {_ARITY[self.family]} parameter(s)")
        self._check()

    def _check(self):
        f, p = self.family, self.params
        need = {
            "dipole": (p and p[0] >= 1, "m >= 1"),
            "complete": (p and p[0] >= 1, "n >= 1"),
            "complete-bipartite": (len(p) == 2 and min(p) >= 1, "a, b >= 1"),
            "wheel": (p and p[0] >= 3, "n >= 3"),
            "path-graph": (p and p[0] >= 1, "n >= 1"),
            "cycle-graph": (p and p[0] >= 3, "n >= 3"),
            "grid-product": (len(p) == 2 and min(p) >= 1, "a, b >= 1"),
            "torus-strip": (p and p[0] >= 3 and p[0] % 2 == 1, "n odd and >= 3"),
        }.get(f)
        if need is not None and not need[0]:
            raise InputError(f"{f}: parameters must satisfy {need[1]}")

    def __str__(self) -> str:
        return self.family + "".join(f"({x})" for x in self.params)


def _numbered(n: int, pairs) -> MultiGraph:
    return MultiGraph.from_edge_list(n, pairs, {i: str(i + 1) for i in range(n)})


def path_graph(n: int) -> MultiGraph:
    return _numbered(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> MultiGraph:
    return _numbered(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def build(spec: FamilySpec) -> MultiGraph:
    """Deterministic member of a family.

    Ids start at 0. Labels: ``u``/``v`` for the two-vertex families, ``1..n``
    for paths, cycles and cliques, ``a1..`` / ``b1..`` for the two sides of a
    complete bipartite graph, ``1..n`` plus ``h`` for the wheel's rim and hub,
    and ``(i,j)`` (1-based factor labels) for the products.
    """
    f, p = spec.family, spec.params
    if f == "loop-pair":
        return MultiGraph.from_edge_list(2, [(0, 1), (0, 0), (1, 1)], {0: "u", 1: "v"})
    if f == "dipole":
        return MultiGraph.from_edge_list(2, [(0, 1)] * p[0], {0: "u", 1: "v"})
    if f == "complete":
        n = p[0]
        return _numbered(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if f == "complete-bipartite":
        a, b = p
        labels = {i: f"a{i + 1}" for i in range(a)} | {a + j: f"b{j + 1}" for j in range(b)}
        return MultiGraph.from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)], labels)
    if f == "wheel":
        n = p[0]
        rim = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        labels = {i: str(i + 1) for i in range(n)} | {n: "h"}
        return MultiGraph.from_edge_list(n + 1, rim + [(i, n) for i in range(n)], labels)
    if f == "path-graph":
        return path_graph(p[0])
    if f == "cycle-graph":
        return cycle_graph(p[0])
    if f == "grid-product":
        return cartesian_product(path_graph(p[0]), path_graph(p[1]))
    if f == "torus-strip":
        return cartesian_product(path_graph(p[0]), cycle_graph(p[0]))
    raise InputError(f"unknown family {f!r}")  # unreachable after FamilySpec validation


def family(name: str, *params: int) -> MultiGraph:
    return build(FamilySpec(name, params))


def iso_counterexample(ell: int) -> MultiGraph:
    """``P_n □ C_n`` with ``n`` the least odd integer above ``2*ell + 4``."""
    if ell < 0:
        raise InputError("length must be non-negative")
    if ell == 0:
        raise InputError("for length 0 use the wheel: build(FamilySpec('wheel', (6,)))")
    return family("torus-strip", 2 * ell + 5)


# -- symmetry ---------------------------------------------------------------


@lru_cache(maxsize=64)
def vertex_automorphisms(g: MultiGraph) -> tuple[dict[int, int], ...]:
    """Vertex permutations preserving every multiplicity (loops included)."""
    h = nx.Graph()
    for v in g.vertices:
        h.add_node(v, loops=g.multiplicity(v, v))
    for a, b in g.edges.values():
        if a != b:
            h.add_edge(a, b, mult=g.multiplicity(a, b))
    gm = GraphMatcher(
        h, h,
        node_match=lambda x, y: x["loops"] == y["loops"],
        edge_match=lambda x, y: x["mult"] == y["mult"],
    )
    return tuple(sorted((dict(m) for m in gm.isomorphisms_iter()), key=lambda m: sorted(m.items())))


def _relabelled(g: MultiGraph, vs, es, sigma) -> tuple:
    # parallel edges are interchangeable, so an edge is named by its image pair
    # and by the order in which the walk first meets members of that class
    first_seen: dict[tuple[int, int], list[int]] = {}
    out_e = []
    for e in es:
        a, b = g.endpoints(e)
        pair = tuple(sorted((sigma[a], sigma[b])))
        seen = first_seen.setdefault(pair, [])
        if e not in seen:
            seen.append(e)
        out_e.append(pair + (seen.index(e),))
    return tuple(sigma[v] for v in vs), tuple(out_e)


def orbit_key(g: MultiGraph, w: Walk) -> tuple:
    """Same key iff the two walks are related by a graph automorphism (and reversal)."""
    best = None
    r = w.reversed()
    for sigma in vertex_automorphisms(g):
        for x in (w, r):
            k = _relabelled(g, x.vertices, x.edges, sigma)
            if best is None or k < best:
                best = k
    return best


def count_orbits(g: MultiGraph, walks: Iterable[Walk]) -> int:
    return len({orbit_key(g, w) for w in walks})


# -- exhaustive checks ------------------------------------------------------


def verify_no_avoidable(g: MultiGraph, t: WalkKind | str, ell: int, claim_id: str | None = None,
                        instance: str = "", mode: str = "oracle") -> VerificationReport:
    """Every t-walk of length ``ell`` exists-and-fails: at least one exists, none is avoidable.

    Each walk's witness is its first non-closable extension.
    """
    t = as_kind(t)
    t0 = time.perf_counter()
    claim_id = claim_id or f"no-avoidable.{t.value}{ell}"
    instance = instance or repr(g)
    walks = enumerate_walks(g, t, ell)
    if not walks:
        return VerificationReport(claim_id, instance, False, [f"no {t.value}-walk of length {ell}"],
                                  "claim needs at least one walk", elapsed=time.perf_counter() - t0)
    witnesses = []
    for i, w in enumerate(walks):
        bad = first_non_closable_extension(g, w, t, mode)
        if bad is None:
            return VerificationReport(claim_id, instance, False, [str(w)],
                                      f"{w} is {t.value}-avoidable", i, time.perf_counter() - t0)
        witnesses.append(f"{w} -> {bad}")
    return VerificationReport(
        claim_id, instance, True, witnesses, f"{len(walks)} walks, none avoidable",
        elapsed=time.perf_counter() - t0,
        counts={"walks": len(walks), "orbits": count_orbits(g, walks)},
    )


_COORD = re.compile(r"^\((-?\d+),(-?\d+)\)$")


def coordinates(g: MultiGraph, v: int) -> tuple[int, int]:
    m = _COORD.match(g.label(v))
    if not m:
        raise InputError(f"vertex {v} has no coordinate label (got {g.label(v)!r})")
    return int(m.group(1)), int(m.group(2))


def _blocks_contiguous(values: list[int]) -> bool:
    done = set()
    prev = None
    for x in values:
        if x != prev:
            if x in done:
                return False
            if prev is not None:
                done.add(prev)
            prev = x
    return True


def claim1_characterization(g: MultiGraph, w: Walk, ell: int | None = None) -> bool:
    """Coordinate test for short isometric paths in a torus strip.

    True iff, for each coordinate, vertices sharing a value occupy a
    contiguous stretch of the path. "Between" is read along the path; the
    cyclic coordinate is compared as a plain value.
    """
    if ell is not None and w.length > ell + 2:
        raise InputError(f"the characterisation covers paths of length <= {ell + 2}")
    if len(set(w.vertices)) != len(w.vertices):
        raise InputError("expected a path")
    coords = [coordinates(g, v) for v in w.vertices]
    return all(_blocks_contiguous([c[i] for c in coords]) for i in (0, 1))


def isometric_cycles(g: MultiGraph, budget: int = 10_000_000) -> list[Walk]:
    """Every isometric cycle of a simple graph, canonical up to rotation and reversal.

    Grows paths from their least vertex. Each pair on the partial path either
    sits at its path distance (so the cycle is at least twice that gap) or
    closer (which fixes the cycle length); contradictory bounds prune.
    """
    if not g.is_simple:
        raise InputError("isometric_cycles expects a simple graph")
    n = g.order
    found: list[Walk] = []
    nodes = 0

    def rec(vs: list[int], es: list[int], lo: int, hi: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"cycle search exceeded {budget} nodes", partial=found, used=nodes)
        s, last = vs[0], vs[-1]
        m = len(vs)
        if m >= 3 and lo <= m <= hi and g.adjacent(last, s) and vs[1] < last:
            e = g.edges_between(last, s)[0]
            c = Walk(tuple(vs) + (s,), tuple(es) + (e,))
            if classify_closed_unchecked(g, c, WalkKind.ISO):
                found.append(c)
        if m >= hi:
            return
        for e, x in g.incident(last):
            if x <= s or x in vs:
                continue
            d = g.distances_from(x)
            nlo, nhi = max(lo, m + 1), hi
            ok = True
            for i, v in enumerate(vs):
                gap = m - i
                dv = d[v]
                if dv == gap:
                    nlo = max(nlo, 2 * gap)
                else:
                    nlo = max(nlo, gap + dv)
                    nhi = min(nhi, gap + dv)
                if nlo > nhi:
                    ok = False
                    break
            if ok:
                vs.append(x)
                es.append(e)
                rec(vs, es, nlo, nhi)
                vs.pop()
                es.pop()

    for s in g.vertices:
        rec([s], [], 3, n)
    return sorted({canonical_closed(c) for c in found})


def claim2_isometric_cycles(n: int, budget: int = 10_000_000) -> VerificationReport:
    """Census of isometric cycles in ``P_n □ C_n`` against the expected list."""
    if n < 5 or n % 2 == 0:
        raise InputError("n must be odd and at least 5")
    t0 = time.perf_counter()
    g = family("torus-strip", n)
    found = set(isometric_cycles(g, budget))
    squares = set(enumerate_walks(g, WalkKind.PTH, 4, closed=True))
    rings = set()
    for i in range(1, n + 1):
        ring = sorted((v for v in g.vertices if coordinates(g, v)[0] == i),
                      key=lambda v: coordinates(g, v)[1])
        rings.add(canonical_closed(Walk.from_vertices(g, ring + ring[:1])))
    expected = squares | rings
    by_len: dict[int, int] = {}
    for c in found:
        by_len[c.length] = by_len.get(c.length, 0) + 1
    counts = {"by_length": dict(sorted(by_len.items())), "four_cycles": len(squares), "rings": len(rings)}
    missing = sorted(expected - found)
    extra = sorted(found - expected)
    inst = f"P{n}xC{n}"
    if missing or extra:
        wit = [f"extra {c}" for c in extra[:5]] + [f"missing {c}" for c in missing[:5]]
        return VerificationReport("torus.cycle-census", inst, False, wit, "census mismatch",
                                  elapsed=time.perf_counter() - t0, counts=counts)
    return VerificationReport("torus.cycle-census", inst, True, detail=f"{len(found)} isometric cycles",
                              elapsed=time.perf_counter() - t0, counts=counts)
