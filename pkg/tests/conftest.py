"""Shared random-network and random-document generators (seeded)."""

from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from termnet.graph import CollocationNetwork, TermNode

FIXTURES = Path(__file__).parent / "fixtures"

DYADIC_WEIGHTS = [k / 4.0 for k in range(1, 13)]  # float-exact sums


def make_network(
    rng: random.Random,
    n: int | None = None,
    directed: bool = True,
    weighted: bool = True,
    loops: bool = True,
    edge_prob: float = 0.35,
    max_n: int = 8,
) -> CollocationNetwork:
    """A random network; dyadic weights keep float sums exact."""
    if n is None:
        n = rng.randint(2, max_n)
    labels = [f"n{i:02d}" for i in range(n)]
    nodes = [TermNode(label, rng.randint(1, 9)) for label in labels]
    edges = {}
    for i in range(n):
        for j in range(n):
            if not directed and j < i:
                continue
            if i == j:
                if loops and rng.random() < 0.15:
                    edges[(labels[i], labels[j])] = _weight(rng, weighted)
                continue
            if rng.random() < edge_prob:
                edges[(labels[i], labels[j])] = _weight(rng, weighted)
    return CollocationNetwork(nodes, edges, directed=directed)


def _weight(rng: random.Random, weighted: bool) -> float:
    return rng.choice(DYADIC_WEIGHTS) if weighted else 1.0


def make_strongly_connected(
    rng: random.Random, n: int | None = None, weighted: bool = True, extra: int = 5
) -> CollocationNetwork:
    """Directed, strongly connected, aperiodic (one self-loop): primitive."""
    if n is None:
        n = rng.randint(3, 8)
    labels = [f"n{i:02d}" for i in range(n)]
    nodes = [TermNode(label, rng.randint(1, 9)) for label in labels]
    edges = {}
    for i in range(n):
        edges[(labels[i], labels[(i + 1) % n])] = _weight(rng, weighted)
    loop_at = rng.randrange(n)
    edges[(labels[loop_at], labels[loop_at])] = _weight(rng, weighted)
    for _ in range(extra):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            edges[(labels[i], labels[j])] = _weight(rng, weighted)
    return CollocationNetwork(nodes, edges, directed=True)


def make_connected_undirected(
    rng: random.Random, n: int | None = None, weighted: bool = True, extra: int = 4
) -> CollocationNetwork:
    """Undirected and connected (random spanning tree plus extras)."""
    if n is None:
        n = rng.randint(2, 8)
    labels = [f"n{i:02d}" for i in range(n)]
    nodes = [TermNode(label, rng.randint(1, 9)) for label in labels]
    edges = {}
    for i in range(1, n):
        j = rng.randrange(i)
        edges[(labels[j], labels[i])] = _weight(rng, weighted)
    for _ in range(extra):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            key = (labels[min(i, j)], labels[max(i, j)])
            edges[key] = _weight(rng, weighted)
    return CollocationNetwork(nodes, edges, directed=False)


def make_random_document(
    rng: random.Random, max_tokens: int = 200, max_phrases: int = 15
) -> tuple[list[str], list[str], int]:
    """Random token stream, phrase list, and window for oracle tests.

    The small vocabulary forces heavy phrase overlap (shared prefixes,
    sub-phrases, repeats) to stress the matcher.
    """
    vocabulary = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "the", "it"]
    n_tokens = rng.randint(0, max_tokens)
    tokens = [rng.choice(vocabulary) for _ in range(n_tokens)]
    phrases = set()
    for _ in range(rng.randint(1, max_phrases)):
        length = rng.choice([1, 1, 2, 2, 3])
        phrases.add(" ".join(rng.choice(vocabulary) for _ in range(length)))
    window = rng.randint(2, 12)
    return tokens, sorted(phrases), window


def net_from(edges, directed=True, tf=None) -> CollocationNetwork:
    """Tiny literal network from an edge dict; tf defaults to 1."""
    labels = sorted({u for u, _ in edges} | {v for _, v in edges})
    nodes = [TermNode(label, (tf or {}).get(label, 1)) for label in labels]
    return CollocationNetwork(nodes, dict(edges), directed=directed)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
