"""Simple undirected graphs on the index set {1..m}.

Vertices are 1-based everywhere in this module and in reports; the file
format uses 0-based indices and converts at the I/O boundary. Graphs are
immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class IsolatedVertexError(ValueError):
    """Raised when an operation requires minimum degree >= 1."""


@dataclass(frozen=True)
class InteractionGraph:
    """Simple undirected graph on vertices 1..m.

    Edges are stored as a sorted tuple of (i, j) pairs with i < j;
    adjacency sets give O(1) membership.
    """

    m: int
    edges: tuple[tuple[int, int], ...]
    _adjacency: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False
    )

    def __init__(self, m: int, edges=()):
        if m < 1:
            raise ValueError("vertex count m must be positive")
        normalized = set()
        for pair in edges:
            i, j = pair
            if i == j:
                raise ValueError(f"self-loop at vertex {i} is not allowed")
            if not (1 <= i <= m and 1 <= j <= m):
                raise ValueError(f"edge ({i},{j}) out of range for m={m}")
            key = (min(i, j), max(i, j))
            if key in normalized:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            normalized.add(key)
        adj = [set() for _ in range(m + 1)]
        for i, j in normalized:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(
            self, "_adjacency", tuple(frozenset(s) for s in adj)
        )

    def neighbors(self, i: int) -> frozenset[int]:
        if not 1 <= i <= self.m:
            raise ValueError(f"vertex {i} out of range for m={self.m}")
        return self._adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def min_degree(self) -> int:
        return min(self.degree(i) for i in range(1, self.m + 1))

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.neighbors(i)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.m + 1) if self.degree(i) == 0)


def complete_graph(m: int) -> InteractionGraph:
    """All m(m-1)/2 edges present."""
    return InteractionGraph(
        m, [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    )


def star_graph(m: int) -> InteractionGraph:
    """Vertex 1 joined to every other vertex."""
    return InteractionGraph(m, [(1, j) for j in range(2, m + 1)])


def chain_graph(m: int) -> InteractionGraph:
    """Path 1-2-...-m."""
    return InteractionGraph(m, [(i, i + 1) for i in range(1, m)])


def cycle_graph(m: int) -> InteractionGraph:
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return InteractionGraph(m, [(i, i + 1) for i in range(1, m)] + [(1, m)])


def graph_constant(g: InteractionGraph) -> float:
    """Connectivity factor 2(m-1)/delta - 1; equals 1 on complete graphs."""
    delta = g.min_degree()
    if delta == 0:
        bad = g.isolated_vertices()
        raise IsolatedVertexError(
            f"graph constant undefined: vertex {bad[0]} is isolated "
            f"(minimum degree must be >= 1)"
        )
    return 2.0 * (g.m - 1) / delta - 1.0


def non_edges(g: InteractionGraph) -> tuple[tuple[int, int], ...]:
    """Complement of the edge set among all i < j pairs, lexicographic."""
    return tuple(
        (i, j)
        for i in range(1, g.m + 1)
        for j in range(i + 1, g.m + 1)
        if not g.has_edge(i, j)
    )


def random_graph_min_degree_one(m: int, rng: np.random.Generator) -> InteractionGraph:
    """Random graph with no isolated vertex: each pair kept with probability
    1/2, then every isolated vertex is wired to a random other vertex."""
    if m < 2:
        raise ValueError("need at least 2 vertices for min degree 1")
    edges = set()
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if rng.random() < 0.5:
                edges.add((i, j))
    degree = {i: 0 for i in range(1, m + 1)}
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
    for i in range(1, m + 1):
        if degree[i] == 0:
            j = i
            while j == i:
                j = int(rng.integers(1, m + 1))
            edges.add((min(i, j), max(i, j)))
            degree[i] += 1
            degree[j] += 1
    return InteractionGraph(m, edges)
