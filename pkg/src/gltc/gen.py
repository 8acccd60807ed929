"""Seeded random instance generation for fixtures and stress tests.

Uses Python's random.Random (MT19937) restricted to ``random()`` draws,
whose sequence is stable across CPython versions, so a seed pins the
generated document byte for byte. Draw order is part of the contract:
edges in (u, v) lexicographic order, then labels per vertex in id/label
order, then differences per edge in sorted-edge/difference order.
"""

from __future__ import annotations

import random

from .instance import Graph, Instance


def random_instance(n: int, density: float, tau: int, lmax: int, seed: int) -> Instance:
    """Erdos-Renyi-style instance: each edge kept with probability ``density``,
    each vertex list a nonempty random subset of {1..lmax}, each edge's
    forbidden set {0} plus a random subset of {1..tau}."""
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    if n < 0 or tau < 0 or lmax < 1:
        raise ValueError("need n >= 0, tau >= 0, lmax >= 1")
    rng = random.Random(seed)
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < density:
                edges.append((u, v))
    graph = Graph.from_edges(n, edges)
    lam = {}
    for v in range(1, n + 1):
        labels = {lab for lab in range(1, lmax + 1) if rng.random() < 0.5}
        if not labels:
            labels = {1 + int(rng.random() * lmax)}
        lam[v] = frozenset(labels)
    t = {}
    for e in sorted(graph.edges):
        diffs = {0} | {d for d in range(1, tau + 1) if rng.random() < 0.5}
        t[e] = frozenset(diffs)
    return Instance(graph=graph, lam=lam, t=t)
