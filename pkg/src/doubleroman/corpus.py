"""Deterministic corpus of small named instances shared by tests and `bench --suite corpus`.

Structured families (paths, cycles, stars, complete graphs) up to nine
vertices plus seeded G(n,p) and random trees: 201 graphs total, every one
small enough for the brute-force oracle.
"""

from __future__ import annotations

from .graphs import Graph, generate_gnp, generate_random_tree


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 joined to 1..n-1."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def corpus_graphs():
    """Yield (name, graph) pairs; deterministic order and content."""
    for n in range(1, 10):
        yield f"Path-{n}", path_graph(n)
    for n in range(3, 10):
        yield f"Cycle-{n}", cycle_graph(n)
    for n in range(2, 10):
        yield f"Star-{n}", star_graph(n)
    for n in range(1, 10):
        yield f"Complete-{n}", complete_graph(n)
    for n in range(4, 10):
        for p in (0.2, 0.5, 0.8):
            for seed in range(1, 7):
                yield f"Gnp-{n}-{p}-s{seed}", generate_gnp(n, p, seed)
    for n in range(4, 10):
        for seed in range(1, 11):
            yield f"Tree-{n}-s{seed}", generate_random_tree(n, seed)
