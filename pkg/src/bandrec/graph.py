"""Core graph and layout types shared by every other module.

Nodes are dense integers ``0..n-1``; any external labelling must be resolved
before construction. Graphs are undirected, simple (no self-loops), and
immutable once built. Adjacency is kept in two forms matching the two access
patterns downstream: per-node bitmasks for constant-time edge queries, and
sorted neighbour lists for breadth-first traversals.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Undirected simple graph on nodes ``0..n-1``.

    Parameters
    ----------
    n:
        Node count, at least 1. The empty graph on zero nodes is rejected
        because its bandwidth is undefined.
    edges:
        Iterable of node pairs. Pairs are normalised to ``u < v`` and
        de-duplicated; self-loops and out-of-range endpoints raise
        ``ValueError``.

    Instances are immutable and safe to share across threads.
    """

    __slots__ = ("n", "edges", "_neighbors", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 1:
            raise ValueError("graph needs at least one node (bandwidth of the empty graph is undefined)")
        normalized = set()
        for pair in edges:
            u, v = pair
            if u == v:
                raise ValueError(f"self-loop on node {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add((u, v) if u < v else (v, u))

        masks = [0] * n
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            neighbors[u].append(v)
            neighbors[v].append(u)

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "_masks", tuple(masks))
        object.__setattr__(self, "_neighbors", tuple(tuple(sorted(ns)) for ns in neighbors))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-node adjacency bitmasks; bit ``v`` of entry ``u`` is set iff ``{u, v}`` is an edge."""
        return self._masks

    def adjacent(self, u: int, v: int) -> bool:
        """Constant-time edge query."""
        return bool(self._masks[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of ``v``."""
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def adjacency_matrix(self) -> np.ndarray:
        """Dense boolean adjacency matrix (symmetric, zero diagonal)."""
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            a[u, v] = a[v, u] = True
        return a

    def relabeled(self, mapping: Sequence[int]) -> "Graph":
        """Graph with node ``v`` renamed to ``mapping[v]``; mapping must be a bijection."""
        if sorted(mapping) != list(range(self.n)):
            raise ValueError("relabeling must be a bijection onto 0..n-1")
        return Graph(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))

    def subgraph(self, nodes: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``nodes``, relabelled to ``0..len(nodes)-1``.

        Returns the subgraph together with the local-to-original node mapping
        (``mapping[local] == original``). ``nodes`` must be distinct.
        """
        mapping = tuple(sorted(nodes))
        if len(set(mapping)) != len(mapping):
            raise ValueError("subgraph nodes must be distinct")
        local = {orig: i for i, orig in enumerate(mapping)}
        member = set(mapping)
        sub_edges = [
            (local[u], local[v]) for u, v in self.edges if u in member and v in member
        ]
        return Graph(len(mapping), sub_edges), mapping

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Layout:
    """Bijection from nodes to positions ``0..n-1``.

    ``forward[v]`` is the position of node ``v``; ``inverse[p]`` is the node
    at position ``p``. Construction validates bijectivity, so every Layout in
    circulation satisfies ``inverse[forward[v]] == v``.
    """

    __slots__ = ("forward", "inverse")

    def __init__(self, forward: Sequence[int]) -> None:
        n = len(forward)
        if n < 1:
            raise ValueError("layout needs at least one node")
        inverse = [-1] * n
        for v, pos in enumerate(forward):
            if not (0 <= pos < n) or inverse[pos] != -1:
                raise ValueError("layout is not a bijection onto 0..n-1")
            inverse[pos] = v
        object.__setattr__(self, "forward", tuple(forward))
        object.__setattr__(self, "inverse", tuple(inverse))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Layout is immutable")

    @classmethod
    def identity(cls, n: int) -> "Layout":
        return cls(range(n))

    @classmethod
    def from_inverse(cls, inverse: Sequence[int]) -> "Layout":
        """Build from a position -> node sequence."""
        n = len(inverse)
        forward = [-1] * n
        for pos, v in enumerate(inverse):
            if not (0 <= v < n) or forward[v] != -1:
                raise ValueError("layout is not a bijection onto 0..n-1")
            forward[v] = pos
        return cls(forward)

    @property
    def n(self) -> int:
        return len(self.forward)

    def reversed(self) -> "Layout":
        """Mirror layout ``v -> n-1-forward[v]``; preserves layout bandwidth."""
        n = self.n
        return Layout([n - 1 - p for p in self.forward])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Layout):
            return NotImplemented
        return self.forward == other.forward

    def __hash__(self) -> int:
        return hash(self.forward)

    def __repr__(self) -> str:
        return f"Layout(forward={list(self.forward)})"


@dataclass(frozen=True)
class ComponentDecomposition:
    """Partition of the node set into connected components.

    ``components`` are sorted internally and ordered by smallest contained
    node id; ``component_of[v]`` is the index of the component holding ``v``.
    """

    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]


def layout_bandwidth(g: Graph, layout: Layout) -> int:
    """Largest position difference across an edge under ``layout``.

    Returns 0 for edgeless graphs. Raises ``ValueError`` when the layout's
    size does not match the graph.
    """
    if layout.n != g.n:
        raise ValueError(f"layout size {layout.n} does not match graph size {g.n}")
    forward = layout.forward
    best = 0
    for u, v in g.edges:
        d = forward[u] - forward[v]
        if d < 0:
            d = -d
        if d > best:
            best = d
    return best


def connected_components(g: Graph) -> ComponentDecomposition:
    """BFS partition into connected components, ordered by smallest node id."""
    component_of = [-1] * g.n
    components: list[tuple[int, ...]] = []
    for start in range(g.n):
        if component_of[start] != -1:
            continue
        idx = len(components)
        component_of[start] = idx
        queue = deque([start])
        seen = [start]
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if component_of[w] == -1:
                    component_of[w] = idx
                    seen.append(w)
                    queue.append(w)
        components.append(tuple(sorted(seen)))
    return ComponentDecomposition(tuple(components), tuple(component_of))


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Cumulative hop-neighbourhood sizes from ``source``.

    Entry ``d-1`` counts the nodes at distance between 1 and ``d`` from
    ``source`` (the source itself is excluded), for ``d`` up to the source's
    eccentricity within its component. Isolated sources yield ``[]``.
    """
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    per_distance: list[int] = []
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                if dist[w] > len(per_distance):
                    per_distance.append(0)
                per_distance[dist[w] - 1] += 1
                queue.append(w)
    cumulative: list[int] = []
    total = 0
    for count in per_distance:
        total += count
        cumulative.append(total)
    return cumulative
