"""Shared corpus helpers for the test suite."""

from __future__ import annotations

import random
from itertools import combinations, permutations

import networkx as nx
import pytest

import locachrom as lc


def from_networkx(G) -> lc.Graph:
    nodes = sorted(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return lc.make_graph(len(nodes), [(index[a], index[b]) for a, b in G.edges()])


def all_trees(max_order: int) -> list:
    """All isomorphism classes of trees with 2..max_order vertices."""
    return [
        from_networkx(T)
        for n in range(2, max_order + 1)
        for T in nx.nonisomorphic_trees(n)
    ]


def random_graph(rng: random.Random, n: int, p: float) -> lc.Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return lc.make_graph(n, edges)


def random_connected_graph(rng: random.Random, max_order: int) -> lc.Graph:
    while True:
        g = random_graph(rng, rng.randint(2, max_order), 0.5)
        if lc.is_connected(g):
            return g


def _canonical(g: lc.Graph) -> tuple:
    best = None
    for perm in permutations(range(g.n)):
        edges = tuple(sorted(
            (min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g.edges
        ))
        if best is None or edges < best:
            best = edges
    return (g.n, best)


def connected_graphs_up_to_iso(n: int) -> list:
    """Isomorphism classes of connected graphs on exactly n vertices."""
    seen = set()
    result = []
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = lc.make_graph(n, edges)
        if not lc.is_connected(g):
            continue
        key = _canonical(g)
        if key not in seen:
            seen.add(key)
            result.append(g)
    return result


@pytest.fixture(scope="session")
def small_trees():
    return all_trees(7)


@pytest.fixture(scope="session")
def random_connected_corpus():
    rng = random.Random(12345)
    return [random_connected_graph(rng, 7) for _ in range(100)]
