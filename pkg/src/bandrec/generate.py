"""Reproducible random instances for exercising the recognizer.

Banded graphs are drawn edge-by-edge inside a band of half-width psi around
the diagonal of the adjacency matrix, then patched so every label distance
1..psi is realised by at least one edge; the result is guaranteed to have
bandwidth at most psi. Affirmative benchmark cases scramble such a graph
with random layouts until the identity labelling stops being a witness, so
a recognizer has to actually find one. Negative cases rejection-sample
denser, wider bands until the bandwidth provably exceeds k while both lower
bounds stay at or below k, which rules out trivial bounds-based dismissal.

All draws come from numpy's seeded default generator (PCG64), so a given
seed reproduces the same instance on any platform. Entry points that need
several independent draws derive them from the one seed in a fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from .baselines import BRUTEFORCE_MAX_NODES, exact_bandwidth_bruteforce
from .bounds import bandwidth_bounds
from .graph import Graph, Layout, layout_bandwidth
from .recognition import recognize

AFFIRMATIVE_SCRAMBLE_BUDGET = 1000
NEGATIVE_SAMPLE_BUDGET = 200


class GenerationError(RuntimeError):
    """A rejection-sampling loop ran out of retries; reseed and try again."""


@dataclass(frozen=True)
class GenParams:
    """Parameters of one banded draw: size, band half-width, edge probability, seed."""

    n: int
    psi: int
    p: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 <= self.psi <= self.n - 1:
            raise ValueError(f"psi must lie in [0, n-1], got {self.psi}")
        if not 0 < self.p <= 1:
            raise ValueError(f"p must lie in (0, 1], got {self.p}")


def random_banded_matrix(params: GenParams) -> Graph:
    """Random graph whose identity-labelling bandwidth is at most ``params.psi``.

    Each pair with label distance <= psi becomes an edge independently with
    probability p (pairs visited in a fixed row-major order). Afterwards,
    every distance d in 1..psi that ended up unrealised gets one uniformly
    random edge at exactly that distance. Deterministic given the seed.
    """
    n, psi, p = params.n, params.psi, params.p
    rng = np.random.default_rng(params.seed)
    edges: list[tuple[int, int]] = []
    seen = [False] * (psi + 1)
    for u in range(n):
        for v in range(u + 1, min(u + psi, n - 1) + 1):
            if rng.random() < p:
                edges.append((u, v))
                seen[v - u] = True
    for d in range(1, psi + 1):
        if not seen[d]:
            u = int(rng.integers(0, n - d))
            edges.append((u, u + d))
    return Graph(n, edges)


def _check_regime(n: int, k: int) -> None:
    if k < (n - 1) // 2:
        raise ValueError(f"k={k} below the supported regime floor {(n - 1) // 2} for n={n}")


def generate_affirmative_case(
    n: int,
    k: int,
    seed: int,
    max_scramble_attempts: int = AFFIRMATIVE_SCRAMBLE_BUDGET,
) -> tuple[Graph, dict[str, Any]]:
    """Instance with bandwidth <= k whose identity labelling exceeds k.

    Draws psi uniformly from {k-2, k-1, k} (clamped at 0) and p from
    [0.3, 0.6], builds a banded graph, then relabels it with random layouts
    until the identity labelling is no longer a bandwidth-k witness. Raises
    :class:`GenerationError` when the scramble budget runs out (possible for
    near-edgeless draws; callers reseed).
    """
    _check_regime(n, k)
    if k > n - 1:
        raise ValueError(f"k={k} exceeds the maximum bandwidth {n - 1}")
    rng = np.random.default_rng(seed)
    psi = int(rng.integers(max(0, k - 2), k + 1))
    p = float(rng.uniform(0.3, 0.6))
    band_seed = int(rng.integers(0, 2**63))
    g = random_banded_matrix(GenParams(n, psi, p, band_seed))
    for attempt in range(1, max_scramble_attempts + 1):
        relabeling = [int(x) for x in rng.permutation(n)]
        h = g.relabeled(relabeling)
        identity_bandwidth = layout_bandwidth(h, Layout.identity(n))
        if identity_bandwidth > k:
            meta = {
                "kind": "affirmative",
                "n": n,
                "k": k,
                "psi": psi,
                "p": p,
                "band_seed": band_seed,
                "scramble_attempts": attempt,
                "identity_bandwidth": identity_bandwidth,
            }
            return h, meta
    raise GenerationError(
        f"no scramble of the drawn graph exceeded k={k} after {max_scramble_attempts} layouts"
    )


def generate_negative_case(
    n: int,
    k: int,
    seed: int,
    max_attempts: int = NEGATIVE_SAMPLE_BUDGET,
) -> tuple[Graph, dict[str, Any]]:
    """Instance with bandwidth > k that both lower bounds fail to expose.

    Repeatedly draws psi from {k+1, k+2, k+3} and p from [0.85, 0.95] until
    the sample satisfies max(alpha, gamma) <= k and bandwidth > k. The
    bandwidth check uses the brute-force oracle when n permits and the
    recognizer itself otherwise. Requires k <= n-4 (wider targets would make
    rejection astronomically slow). Raises :class:`GenerationError` when the
    attempt budget is exhausted.
    """
    _check_regime(n, k)
    if k > n - 4:
        raise ValueError(f"negative cases require k <= n-4, got k={k} for n={n}")
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        psi = int(rng.integers(k + 1, k + 4))
        p = float(rng.uniform(0.85, 0.95))
        band_seed = int(rng.integers(0, 2**63))
        g = random_banded_matrix(GenParams(n, psi, p, band_seed))
        if bandwidth_bounds(g).combined > k:
            continue
        if n <= BRUTEFORCE_MAX_NODES:
            verifier = "bruteforce"
            exceeds = exact_bandwidth_bruteforce(g) > k
        else:
            verifier = "recognize"
            exceeds = not recognize(g, k).verdict
        if exceeds:
            meta = {
                "kind": "negative",
                "n": n,
                "k": k,
                "psi": psi,
                "p": p,
                "band_seed": band_seed,
                "attempts": attempt,
                "verifier": verifier,
            }
            return g, meta
    raise GenerationError(f"no negative instance found in {max_attempts} attempts")
