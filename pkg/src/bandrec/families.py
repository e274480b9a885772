"""Named graph families used by tests, demos, and benchmark sanity checks."""

from __future__ import annotations

from .graph import Graph


def empty_graph(n: int) -> Graph:
    """n isolated nodes."""
    return Graph(n)


def path_graph(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    """Cycle on n >= 3 nodes."""
    if n < 3:
        raise ValueError("cycle needs at least 3 nodes")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    """K_n."""
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1."""
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and ``leaves`` leaves."""
    return Graph(leaves + 1, ((0, v) for v in range(1, leaves + 1)))


def lollipop_graph(clique: int, tail: int) -> Graph:
    """Clique on ``clique`` nodes with a ``tail``-node path hung off node 0.

    Path nodes are ``clique..clique+tail-1``; the first one attaches to clique
    node 0.
    """
    if clique < 1 or tail < 0:
        raise ValueError("lollipop needs a nonempty clique and nonnegative tail")
    edges = [(u, v) for u in range(clique) for v in range(u + 1, clique)]
    if tail:
        edges.append((0, clique))
        edges.extend((clique + i, clique + i + 1) for i in range(tail - 1))
    return Graph(clique + tail, edges)
