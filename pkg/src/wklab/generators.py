"""Graph corpora for sweeps: exhaustive labelled enumeration and seeded sampling."""
from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_code(n: int, code: int) -> Graph:
    """Labelled graph whose edge set is given by bit i of ``code`` over :func:`vertex_pairs`."""
    nbr = [0] * n
    for i, (u, v) in enumerate(vertex_pairs(n)):
        if code >> i & 1:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
    return Graph(n, nbr)


def graph_code(g: Graph) -> int:
    code = 0
    for i, (u, v) in enumerate(vertex_pairs(g.n)):
        if g.adjacent(u, v):
            code |= 1 << i
    return code


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**(n choose 2)`` labelled graphs on n vertices, by edge code."""
    pairs = vertex_pairs(n)
    for code in range(1 << len(pairs)):
        nbr = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
        yield Graph(n, nbr)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng``."""
    return Graph.from_edges(n, [e for e in vertex_pairs(n) if rng.random() < p])


def random_corpus(count: int, n_min: int, n_max: int, seed: int,
                  p_min: float = 0.15, p_max: float = 0.85) -> list[Graph]:
    """``count`` seeded random graphs with n and edge density drawn uniformly."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.uniform(p_min, p_max)
        out.append(random_graph(n, p, rng))
    return out
