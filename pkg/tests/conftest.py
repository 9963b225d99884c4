"""Shared fixtures: the seeded random-graph corpus and brute-force oracles."""

import random

import pytest

from walkentropy.graphs import Graph

CORPUS_SEED = 20260810
CORPUS_SIZE = 200


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus edges at a random density, so connectivity
    is guaranteed and sparsity varies across the corpus."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        u, v = verts[i], verts[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    p = rng.uniform(0.0, 0.6)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph(n, frozenset(edges))


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    """200 random connected graphs with 2 <= n <= 12, deterministic."""
    rng = random.Random(CORPUS_SEED)
    return [random_connected_graph(rng, rng.randint(2, 12)) for _ in range(CORPUS_SIZE)]


def brute_force_closed_walks(g: Graph, start: int, length: int) -> int:
    """Count closed walks by explicit enumeration; exponential, tiny graphs only."""
    nbrs = g.neighbors()

    def rec(v: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if v == start else 0
        return sum(rec(w, remaining - 1) for w in nbrs[v])

    return rec(start, length)
