"""Shared generators and oracles for the test suite."""

from __future__ import annotations

import random

import pytest

from ferrers_lab import BipartiteGraph, Graph, Partition


def partitions_of(total, max_part=None):
    """All partitions of ``total`` with parts at most ``max_part``."""
    max_part = total if max_part is None else min(max_part, total)
    if total == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(total - first, first):
            yield (first,) + rest


def partitions_up_to(max_total, max_part=None):
    for total in range(1, max_total + 1):
        yield from partitions_of(total, max_part)


def connected_ferrers_partitions(max_vertices):
    """Partitions whose staircase graph is connected with at most
    ``max_vertices`` vertices: first part n, at most max_vertices - n parts."""
    for n in range(1, max_vertices):
        for rest in partitions_of_length_at_most(max_vertices - n - 1, n):
            yield Partition((n,) + rest)


def partitions_of_length_at_most(length, max_part):
    """All nonincreasing tuples with at most ``length`` parts in 1..max_part."""
    if length == 0:
        yield ()
        return
    yield ()
    for first in range(1, max_part + 1):
        for rest in partitions_of_length_at_most(length - 1, first):
            yield (first,) + rest


def bipartite_cycle(k):
    """The 2k-cycle as a k+k bipartite graph."""
    edges = []
    for i in range(1, k + 1):
        edges.append((i, i))
        edges.append((i % k + 1, i))
    return BipartiteGraph.from_edges(k, k, edges)


def complete_bipartite(m, n):
    return BipartiteGraph(m, n, [(1 << n) - 1] * m)


def shuffle_bipartite(g: BipartiteGraph, rng: random.Random) -> BipartiteGraph:
    """A random row/column relabeling of the same bipartitioned graph."""
    row_perm = list(range(g.m))
    col_perm = list(range(g.n))
    rng.shuffle(row_perm)
    rng.shuffle(col_perm)
    rows = [0] * g.m
    for i in range(g.m):
        src = g.rows[row_perm[i]]
        mask = 0
        for j in range(g.n):
            if src >> col_perm[j] & 1:
                mask |= 1 << j
        rows[i] = mask
    return BipartiteGraph(g.m, g.n, rows)


def random_connected_bipartite(rng: random.Random, max_m=4, max_n=4):
    """Rejection-sample a connected bipartite graph."""
    while True:
        m = rng.randint(1, max_m)
        n = rng.randint(1, max_n)
        rows = [rng.randint(0, (1 << n) - 1) for _ in range(m)]
        try:
            g = BipartiteGraph(m, n, rows)
        except ValueError:
            continue
        if g.edge_count() and g.is_connected():
            return g


def random_connected_graph(rng: random.Random, max_n=7):
    while True:
        n = rng.randint(2, max_n)
        edges = [
            (a, b)
            for a in range(1, n + 1)
            for b in range(a + 1, n + 1)
            if rng.random() < 0.5
        ]
        g = Graph(n, edges)
        if g.is_connected():
            return g


@pytest.fixture
def rng():
    return random.Random(20240811)


def example_staircase() -> BipartiteGraph:
    """The 4x3 staircase with degrees (3,3,2,1) and (4,3,2)."""
    return BipartiteGraph(4, 3, [0b111, 0b111, 0b011, 0b001])


#: the staircase graph's 7x7 Laplacian in U-then-V vertex order
EXAMPLE_LAPLACIAN = [
    [3, 0, 0, 0, -1, -1, -1],
    [0, 3, 0, 0, -1, -1, -1],
    [0, 0, 2, 0, -1, -1, 0],
    [0, 0, 0, 1, -1, 0, 0],
    [-1, -1, -1, -1, 4, 0, 0],
    [-1, -1, -1, 0, 0, 3, 0],
    [-1, -1, 0, 0, 0, 0, 2],
]
