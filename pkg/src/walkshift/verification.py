"""Verification suites: the counterexample families and the shifting procedures, as reports.

Each suite returns a list of :class:`VerificationReport`. A claim id starts
with its suite's topic: ``trails``, ``iso``, ``torus``, ``induced``, ``paths``,
``line-graph``, ``walks``, ``oracle`` or ``hosts``.
"""

from __future__ import annotations

import random
import statistics
import time
from collections.abc import Callable, Iterable

from .avoidability import extensions, is_avoidable, is_closable
from .corpus import DEFAULT_SEED, connected_graphs, random_multigraphs
from .errors import InputError
from .families import (
    claim1_characterization,
    claim2_isometric_cycles,
    count_orbits,
    family,
    verify_no_avoidable,
)
from .graph import MultiGraph, delete_closed_neighborhood, line_graph
from .report import VerificationReport
from .shifting import (
    check_Hr,
    is_shift,
    path_from_edges,
    path_shifting_dfs,
    path_shifting_via_line_graph,
    shift_class,
    shift_reachable,
    shifting_induced,
    shifts_of,
    verify_shift_sequence,
    walk_shifting,
)
from .walks import (
    KINDS,
    Walk,
    WalkKind,
    canonical_closed,
    classify,
    classify_closed_unchecked,
    enumerate_walks,
    validate,
)

SUITES = ("trails", "isometric", "torus", "induced", "paths", "walks", "oracle", "hosts")
MAX_WITNESSES = 10


class _Tally:
    """Collects per-instance failures for one corpus-wide claim."""

    def __init__(self, claim_id: str, instance: str):
        self.claim_id = claim_id
        self.instance = instance
        self.checked = 0
        self.failures: list[str] = []
        self.counts: dict = {}
        self.t0 = time.perf_counter()

    def check(self, ok: bool, witness: Callable[[], str]):
        self.checked += 1
        if not ok:
            self.failures.append(witness())

    def report(self) -> VerificationReport:
        n = len(self.failures)
        self.counts.setdefault("checked", self.checked)
        self.counts["failures"] = n
        return VerificationReport(
            self.claim_id, self.instance, n == 0, self.failures[:MAX_WITNESSES],
            f"{self.checked} checked, {n} failed", elapsed=time.perf_counter() - self.t0,
            counts=self.counts,
        )


def _gname(g: MultiGraph) -> str:
    return f"V={list(g.vertices)} E={dict(g.edges)}"


# -- trail counterexamples --------------------------------------------------


def _extension_shape(g: MultiGraph, t: WalkKind, ell: int, want_ext: int, want_bad: int | None,
                     claim_id: str, instance: str) -> VerificationReport:
    """Every t-walk of length ``ell`` has ``want_ext`` extensions, ``want_bad`` of them non-closable."""
    tally = _Tally(claim_id, instance)
    ext_orbits = set()
    for w in enumerate_walks(g, t, ell):
        exts = [x.walk for x in extensions(g, w, t)]
        bad = [x for x in exts if not is_closable(g, x, t, "oracle")]
        ext_orbits.add(count_orbits(g, exts))
        ok = len(exts) == want_ext and (want_bad is None or len(bad) == want_bad)
        tally.check(ok, lambda: f"{w}: {len(exts)} extensions, {len(bad)} non-closable")
    tally.counts["extension_orbits_per_walk"] = sorted(ext_orbits)
    return tally.report()


def suite_trails(large: bool = False) -> list[VerificationReport]:
    out = []
    lp = family("loop-pair")
    out.append(verify_no_avoidable(lp, "trl", 0, "trails.loop-pair.trl0", "loop-pair"))
    out.append(_extension_shape(lp, WalkKind.TRL, 0, 1, 1, "trails.loop-pair.unique-extension", "loop-pair"))
    for ell in (1, 3, 5):
        g = family("dipole", ell + 2)
        r = verify_no_avoidable(g, "trl", ell, f"trails.dipole.trl{ell}", f"dipole({ell + 2})")
        if r.passed and r.counts["orbits"] != 1:
            r = VerificationReport(r.claim_id, r.instance, False, r.witnesses[:1],
                                   f"{r.counts['orbits']} trails up to symmetry, expected 1")
        out.append(r)
        out.append(_orbit_one_extension(g, ell, f"trails.dipole.trl{ell}.unique-extension", f"dipole({ell + 2})"))
    k4 = family("complete", 4)
    r = verify_no_avoidable(k4, "trl", 2, "trails.K4.trl2", "K4")
    out.append(r)
    out.append(_extension_shape(k4, WalkKind.TRL, 2, 3, 2, "trails.K4.three-extensions", "K4"))
    js = (1, 2) if large else (1,)
    for j in js:
        ell = 4 * j - 1
        g = family("complete-bipartite", 2, 2 * j + 1)
        out.append(verify_no_avoidable(g, "trl", ell, f"trails.K2,{2 * j + 1}.trl{ell}", f"K2,{2 * j + 1}"))
        out.append(_orbit_one_extension(g, ell, f"trails.K2,{2 * j + 1}.unique-extension", f"K2,{2 * j + 1}"))
    return out


def _orbit_one_extension(g: MultiGraph, ell: int, claim_id: str, instance: str) -> VerificationReport:
    tally = _Tally(claim_id, instance)
    for w in enumerate_walks(g, WalkKind.TRL, ell):
        exts = [x.walk for x in extensions(g, w, WalkKind.TRL)]
        k = count_orbits(g, exts)
        tally.check(k == 1, lambda: f"{w}: {k} extensions up to symmetry")
    return tally.report()


# -- isometric counterexamples ----------------------------------------------


def suite_isometric() -> list[VerificationReport]:
    out = []
    w6 = family("wheel", 6)
    out.append(verify_no_avoidable(w6, "iso", 0, "iso.W6.iso0", "W6"))
    tally = _Tally("iso.W6.iso2-not-closable", "W6")
    for w in enumerate_walks(w6, WalkKind.ISO, 2):
        tally.check(not is_closable(w6, w, "iso", "oracle"), lambda: f"{w} is closable")
    out.append(tally.report())
    out.append(verify_no_avoidable(family("grid-product", 3, 3), "iso", 1, "iso.P3xP3.iso1", "P3xP3"))
    out.append(verify_no_avoidable(family("torus-strip", 7), "iso", 1, "iso.P7xC7.iso1", "P7xC7"))
    return out


def suite_torus(n: int = 7, ell: int = 1) -> list[VerificationReport]:
    g = family("torus-strip", n)
    tally = _Tally(f"torus.coordinate-test.n{n}", f"P{n}xC{n}, paths of length <= {ell + 2}")
    for length in range(ell + 3):
        for w in enumerate_walks(g, WalkKind.PTH, length):
            a, b = claim1_characterization(g, w, ell), classify(g, w, "iso")
            tally.check(a == b, lambda: f"{w}: coordinate test {a}, classifier {b}")
    return [tally.report(), claim2_isometric_cycles(n)]


# -- shifting procedures --------------------------------------------------


def _graphs(max_order: int, multigraphs: int, seed: int) -> list[MultiGraph]:
    gs = list(connected_graphs(max_order))
    if multigraphs:
        gs += random_multigraphs(multigraphs, seed)
    return gs


def _shift_check(tally: _Tally, g: MultiGraph, p: Walk, seq, lengths: list[int], depths: list[int]):
    rep = verify_shift_sequence(g, seq, True, "oracle")
    ok = seq.steps[0] == p and rep.passed
    lengths.append(seq.p)
    depths.append(seq.stats.depth)
    tally.check(ok, lambda: f"{_gname(g)} from {p}: {rep.detail} {rep.witnesses}")


def suite_induced(max_order: int = 7, max_len: int = 3, multigraphs: int = 0,
                   seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    tally = _Tally("induced.shifting", f"connected graphs <= {max_order} vertices, length <= {max_len}")
    lengths: list[int] = []
    depths: list[int] = []
    fallbacks = 0
    for g in _graphs(max_order, multigraphs, seed):
        for ell in range(max_len + 1):
            for p in enumerate_walks(g, WalkKind.IND, ell):
                seq = shifting_induced(g, p)
                fallbacks += seq.stats.fallback is not None
                _shift_check(tally, g, p, seq, lengths, depths)
    tally.counts.update(_summary(lengths, depths), fallbacks=fallbacks)
    return [tally.report()]


def _summary(lengths: list[int], depths: list[int]) -> dict:
    if not lengths:
        return {}
    return {
        "max_p": max(lengths), "mean_p": round(statistics.fmean(lengths), 3),
        "max_depth": max(depths), "mean_depth": round(statistics.fmean(depths), 3),
    }


def suite_paths(max_order: int = 7, max_len: int = 3, multigraphs: int = 0,
                   seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    scope = f"connected graphs <= {max_order} vertices, length <= {max_len}"
    dfs = _Tally("paths.dfs", scope)
    via = _Tally("paths.line-graph", scope)
    ld, dd, ll, dl = [], [], [], []
    rounds = 0
    for g in _graphs(max_order, multigraphs, seed):
        for ell in range(max_len + 1):
            for p in enumerate_walks(g, WalkKind.PTH, ell):
                s = path_shifting_dfs(g, p)
                rounds = max(rounds, s.stats.rounds)
                _shift_check(dfs, g, p, s, ld, dd)
                _shift_check(via, g, p, path_shifting_via_line_graph(g, p), ll, dl)
    dfs.counts.update(_summary(ld, dd), max_rounds=rounds)
    via.counts.update(_summary(ll, dl))
    return [dfs.report(), via.report()] + suite_line_graph(max_order, max_len)


def induced_cycles(g: MultiGraph, min_length: int = 3) -> list[Walk]:
    """Induced cycles of a simple graph, one canonical walk each."""
    out = set()

    def rec(vs: list[int], es: list[int]):
        s, last = vs[0], vs[-1]
        for e, x in g.incident(last):
            if x <= s or x in vs:
                continue
            if any(g.adjacent(x, v) for v in vs[1:-1]):
                continue
            if g.adjacent(x, s) and len(vs) >= 2:
                c = Walk(tuple(vs) + (x, s), tuple(es) + (e, g.edges_between(x, s)[0]))
                if c.length >= min_length and classify_closed_unchecked(g, c, WalkKind.IND):
                    out.add(canonical_closed(c))
                continue
            vs.append(x)
            es.append(e)
            rec(vs, es)
            vs.pop()
            es.pop()

    for s in g.vertices:
        rec([s], [])
    return sorted(out)


def suite_line_graph(max_order: int = 7, max_len: int = 3) -> list[VerificationReport]:
    """Structural checks of the line-graph correspondence on the simple corpus."""
    scope = f"connected graphs <= {max_order} vertices"
    a = _Tally("line-graph.a.paths-to-induced", scope)
    b = _Tally("line-graph.b.cycles-pull-back", scope)
    c = _Tally("line-graph.c.induced-to-paths", scope)
    d = _Tally("line-graph.d.avoidable-transfers", scope)
    e = _Tally("line-graph.e.shifts-transfer", scope)
    for g in connected_graphs(max_order):
        if g.size == 0:
            continue
        lg, corr = line_graph(g)
        inv = {eid: i for i, eid in corr.items()}
        for ell in range(1, max_len + 1):
            for p in enumerate_walks(g, WalkKind.PTH, ell):
                img = Walk.from_vertices(lg, [inv[x] for x in p.edges])
                a.check(classify(lg, img, "ind"), lambda: f"{_gname(g)}: {p} -> {img}")
        for cyc in induced_cycles(lg, 4):
            edges = [corr[i] for i in cyc.vertices[:-1]]
            ok = _is_cycle_of_edges(g, edges)
            b.check(ok, lambda: f"{_gname(g)}: line-graph cycle {cyc}")
        for ell in range(max_len):
            ind_paths = enumerate_walks(lg, WalkKind.IND, ell)
            pulled = {}
            for q in ind_paths:
                w = path_from_edges(g, [corr[i] for i in q.vertices])
                pulled[q] = w
                c.check(w is not None and w.length == ell + 1, lambda: f"{_gname(g)}: {q}")
                if w is not None and is_avoidable(lg, q, "ind"):
                    d.check(is_avoidable(g, w, "pth", "oracle"), lambda: f"{_gname(g)}: {q} -> {w}")
            for q in ind_paths:
                for r in shifts_of(lg, q, WalkKind.IND):
                    wq, wr = pulled.get(q), pulled.get(r)
                    ok = wq is not None and wr is not None and is_shift(g, wq, wr, "pth")
                    e.check(ok, lambda: f"{_gname(g)}: {q} ~ {r}")
    return [a.report(), b.report(), c.report(), d.report(), e.report()]


def _is_cycle_of_edges(g: MultiGraph, edges: list[int]) -> bool:
    n = len(edges)
    ends = [set(g.endpoints(x)) for x in edges]
    vs = []
    for i in range(n):
        shared = ends[i] & ends[(i + 1) % n]
        if len(shared) != 1:
            return False
        vs.append(next(iter(shared)))
    if len(set(vs)) != n:
        return False
    w = Walk(tuple([vs[-1]] + vs), tuple(edges))
    try:
        validate(g, w)
    except InputError:
        return False
    return classify_closed_unchecked(g, w, WalkKind.PTH)


# -- walks ------------------------------------------------------------------


def suite_walks(max_order: int = 7, max_len: int = 3, multigraphs: int = 200,
                seed: int = DEFAULT_SEED, samples: int = 3) -> list[VerificationReport]:
    scope = f"corpus <= {max_order} vertices + {multigraphs} multigraphs, length <= {max_len}"
    o1 = _Tally("walks.avoidable", scope)
    o2 = _Tally("walks.one-shift-class", scope)
    ws = _Tally("walks.walk-shifting", scope)
    reach = _Tally("walks.reachable-pairs", scope)
    rng = random.Random(seed)
    for g in _graphs(max_order, multigraphs, seed):
        for ell in range(max_len + 1):
            walks = enumerate_walks(g, WalkKind.WLK, ell)
            for w in walks:
                o1.check(is_avoidable(g, w, "wlk"), lambda: f"{_gname(g)}: {w}")
            if not walks or not g.is_connected():
                continue
            # shifting is an equivalence relation, so one class covering every
            # walk of this length means every pair is mutually reachable
            cls = shift_class(g, walks[0], WalkKind.WLK)
            o2.check(cls == set(walks), lambda: f"{_gname(g)} length {ell}: class of {walks[0]} "
                     f"has {len(cls)} of {len(walks)} walks")
            for _ in range(samples):
                a, b = rng.choice(walks), rng.choice(walks)
                s = walk_shifting(g, a, b)
                rep = verify_shift_sequence(g, s, False)
                ok = rep.passed and s.first == a and s.last == b
                ws.check(ok, lambda: f"{_gname(g)}: {a} to {b}: {rep.detail}")
                goal = b.canonical()
                found = shift_reachable(g, a, WalkKind.WLK, lambda x: x.canonical() == goal)
                reach.check(found is not None and verify_shift_sequence(g, found, False).passed,
                            lambda: f"{_gname(g)}: no shift sequence from {a} to {b}")
    return [o1.report(), o2.report(), ws.report(), reach.report()]


# -- oracle cross-check -----------------------------------------------------


def suite_oracle(max_order: int = 7, max_len: int = 4, multigraphs: int = 200,
                 seed: int = DEFAULT_SEED, kinds: Iterable[WalkKind] = KINDS) -> list[VerificationReport]:
    out = []
    gs = _graphs(max_order, multigraphs, seed)
    for t in kinds:
        tally = _Tally(f"oracle.fast-vs-oracle.{t.value}",
                       f"corpus <= {max_order} vertices + {multigraphs} multigraphs, length <= {max_len}")
        for g in gs:
            for ell in range(max_len + 1):
                for w in enumerate_walks(g, t, ell):
                    f, o = is_closable(g, w, t, "fast"), is_closable(g, w, t, "oracle")
                    tally.check(f == o, lambda: f"{_gname(g)}: {w} fast={f} oracle={o}")
        out.append(tally.report())
    return out


# -- host-graph properties ------------------------------------------------


def suite_hosts(max_order: int = 7, max_k: int = 3) -> list[VerificationReport]:
    scope = f"connected graphs <= {max_order} vertices, k <= {max_k}"
    hr = _Tally("hosts.Hr", scope)
    mono = _Tally("hosts.monotone", scope)
    for g in connected_graphs(max_order):
        for v in g.vertices:
            for k in range(1, max_k + 1):
                hr.check(check_Hr(g, k, v), lambda: f"{_gname(g)} v={v} k={k}")
            h = delete_closed_neighborhood(g, (v,))
            for ell in range(max_k):
                for p in enumerate_walks(h, WalkKind.IND, ell):
                    seq = shifting_induced(h, p)
                    rep = verify_shift_sequence(g, seq, False)
                    mono.check(rep.passed, lambda: f"{_gname(g)} v={v}: {rep.detail} {rep.witnesses}")
    return [hr.report(), mono.report()]


# -- driver -----------------------------------------------------------------


def run_suite(name: str, *, max_order: int = 7, seed: int = DEFAULT_SEED,
              multigraphs: int = 200, large: bool = False) -> list[VerificationReport]:
    if name == "all":
        out = []
        for s in SUITES:
            out += run_suite(s, max_order=max_order, seed=seed, multigraphs=multigraphs, large=large)
        return out
    if name == "trails":
        return suite_trails(large)
    if name == "isometric":
        return suite_isometric()
    if name == "torus":
        return suite_torus()
    if name == "induced":
        return suite_induced(max_order)
    if name == "paths":
        return suite_paths(max_order)
    if name == "walks":
        return suite_walks(max_order, multigraphs=multigraphs, seed=seed)
    if name == "oracle":
        return suite_oracle(max_order, multigraphs=multigraphs, seed=seed)
    if name == "hosts":
        return suite_hosts(max_order)
    raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")


def shift_statistics(max_order: int = 7, max_len: int = 3) -> dict:
    """Sequence lengths and recursion depths of the shifting procedures over the corpus."""
    rows: dict[str, tuple[list[int], list[int]]] = {
        "shifting_induced": ([], []), "path_shifting_dfs": ([], []), "path_shifting_via_line_graph": ([], []),
    }
    for g in connected_graphs(max_order):
        for ell in range(max_len + 1):
            for p in enumerate_walks(g, WalkKind.IND, ell):
                s = shifting_induced(g, p)
                rows["shifting_induced"][0].append(s.p)
                rows["shifting_induced"][1].append(s.stats.depth)
            for p in enumerate_walks(g, WalkKind.PTH, ell):
                for name, fn in (("path_shifting_dfs", path_shifting_dfs),
                                 ("path_shifting_via_line_graph", path_shifting_via_line_graph)):
                    s = fn(g, p)
                    rows[name][0].append(s.p)
                    rows[name][1].append(s.stats.depth)
    out = {}
    for name, (lengths, depths) in rows.items():
        out[name] = {"instances": len(lengths), **_summary(lengths, depths)}
    return out
