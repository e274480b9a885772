"""Lower bounds on graph bandwidth from hop-neighbourhood growth.

Both bounds scan every node's cumulative neighbourhood sizes: a node with
many nodes within distance d forces large label gaps no matter how it is
placed. One BFS per node gives O(mn) time and O(n) auxiliary space. For a
disconnected graph the scan is confined to each node's own component, which
keeps both quantities valid lower bounds on the overall bandwidth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bfs_layers


@dataclass(frozen=True)
class BandwidthBounds:
    """The pair of bounds plus their maximum, used as one cutoff value."""

    alpha: int
    gamma: int

    @property
    def combined(self) -> int:
        return max(self.alpha, self.gamma)


def _node_growth(g: Graph, v: int) -> tuple[int, int]:
    # (max_d ceil(|N_d|/2d), max_d ceil(|N_d|/d)); (0, 0) for isolated nodes.
    a = c = 0
    for d, size in enumerate(bfs_layers(g, v), start=1):
        ratio_a = -(-size // (2 * d))
        ratio_c = -(-size // d)
        if ratio_a > a:
            a = ratio_a
        if ratio_c > c:
            c = ratio_c
    return a, c


def alpha_bound(g: Graph) -> int:
    """Max over nodes of the halved neighbourhood-growth ratio."""
    return max(_node_growth(g, v)[0] for v in range(g.n))


def gamma_bound(g: Graph) -> int:
    """Min over nodes of the full neighbourhood-growth ratio.

    Any isolated node drives this to 0 (its inner maximum is empty).
    """
    return min(_node_growth(g, v)[1] for v in range(g.n))


def bandwidth_bounds(g: Graph) -> BandwidthBounds:
    """Compute both bounds in a single sweep over the nodes."""
    alpha = 0
    gamma: int | None = None
    for v in range(g.n):
        a, c = _node_growth(g, v)
        if a > alpha:
            alpha = a
        if gamma is None or c < gamma:
            gamma = c
    assert gamma is not None
    return BandwidthBounds(alpha, gamma)
