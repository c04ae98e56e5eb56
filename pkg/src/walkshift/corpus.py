"""Test corpora: small connected simple graphs and seeded random multigraphs."""

from __future__ import annotations

import random
from collections.abc import Iterator
from functools import lru_cache

import networkx as nx

from .graph import MultiGraph

DEFAULT_SEED = 20240607


def from_networkx(nxg) -> MultiGraph:
    """Relabel nodes 0..n-1 in sorted order; edge ids follow the sorted edge list."""
    nodes = sorted(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    pairs = sorted(tuple(sorted((index[a], index[b]))) for a, b in nxg.edges())
    return MultiGraph.from_edge_list(len(nodes), pairs)


@lru_cache(maxsize=None)
def _atlas(max_order: int) -> tuple[MultiGraph, ...]:
    out = []
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if 1 <= n <= max_order and nx.is_connected(nxg):
            out.append(from_networkx(nxg))
    return tuple(out)


def connected_graphs(max_order: int = 7) -> tuple[MultiGraph, ...]:
    """Every connected simple graph on 1..max_order vertices (up to isomorphism), max_order <= 7."""
    if not 1 <= max_order <= 7:
        raise ValueError("the graph atlas covers orders 1..7")
    return _atlas(max_order)


def random_multigraph(rng: random.Random, min_order: int = 2, max_order: int = 6,
                      extra: int = 4) -> MultiGraph:
    """Connected multigraph: a random tree plus up to ``extra`` edges, loops and repeats allowed."""
    n = rng.randint(min_order, max_order)
    pairs = []
    for v in range(1, n):
        pairs.append((rng.randrange(v), v))
    for _ in range(rng.randint(1, extra)):
        kind = rng.random()
        if kind < 0.25:
            v = rng.randrange(n)
            pairs.append((v, v))
        elif kind < 0.6 and pairs:
            pairs.append(rng.choice(pairs))
        else:
            a, b = rng.randrange(n), rng.randrange(n)
            pairs.append((a, b))
    rng.shuffle(pairs)
    return MultiGraph.from_edge_list(n, pairs)


def random_multigraphs(count: int = 200, seed: int = DEFAULT_SEED) -> list[MultiGraph]:
    rng = random.Random(seed)
    return [random_multigraph(rng) for _ in range(count)]


def iter_corpus(max_order: int = 7, multigraphs: int = 200, seed: int = DEFAULT_SEED) -> Iterator[MultiGraph]:
    yield from connected_graphs(max_order)
    yield from random_multigraphs(multigraphs, seed)
