"""Reference implementations used as correctness oracles.

``naive_recognition`` keeps the same outer enumeration as the fast
recognizer but replaces the counting feasibility check with the direct
definition: try every compatible right assignment and test all far-apart
position pairs for edges. ``exact_bandwidth_bruteforce`` minimises the
layout bandwidth over all n! layouts outright. Both are meant for small n
and exist so the fast path has something independent to disagree with.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .graph import Graph, Layout
from .recognition import (
    SEARCH_EXHAUSTED,
    OutOfRegimeError,
    RecognitionResult,
    assemble_certificate,
    enumerate_left_partial_layouts,
)

BRUTEFORCE_MAX_NODES = 9

_layout_rows_cache: dict[int, np.ndarray] = {}


def naive_recognition(g: Graph, k: int) -> RecognitionResult:
    """Pair-enumeration recognizer: every left layout against every right layout.

    O(n^(2(n-k))) time; intended for n <= 10. Shares the left enumeration
    and certificate assembly with the fast recognizer, so any disagreement
    isolates to the feasibility check itself.
    """
    n = g.n
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k >= n - 1:
        return RecognitionResult(True, Layout.identity(n))
    if k < (n - 1) // 2:
        raise OutOfRegimeError(f"graph of size {n} needs k >= {(n - 1) // 2}, got {k}")

    masks = g.neighbor_masks
    width = n - k - 1
    for left in enumerate_left_partial_layouts(g, k):
        assignment = left.assignment
        members = left.members
        rest = [v for v in range(n) if v not in members]
        for right in permutations(rest, width):
            feasible = True
            for i in range(width):
                mask = masks[assignment[i]]
                for j in range(i, width):
                    if mask >> right[j] & 1:
                        feasible = False
                        break
                if not feasible:
                    break
            if feasible:
                return RecognitionResult(True, assemble_certificate(left, right, g, k))
    return RecognitionResult(False, None, SEARCH_EXHAUSTED)


def _layout_rows(n: int) -> np.ndarray:
    # All n! node->position maps, one per row; cached per process.
    rows = _layout_rows_cache.get(n)
    if rows is None:
        rows = np.array(list(permutations(range(n))), dtype=np.int8)
        _layout_rows_cache[n] = rows
    return rows


def exact_bandwidth_bruteforce(g: Graph) -> int:
    """Exact bandwidth by exhaustive minimisation over all n! layouts.

    Guarded to n <= 9; larger inputs raise ``ValueError``. The set of all
    layouts is closed under inversion, so rows can be treated directly as
    node -> position maps and each edge reduces to one vectorised
    |position difference| pass.
    """
    if g.n > BRUTEFORCE_MAX_NODES:
        raise ValueError(
            f"brute-force bandwidth is limited to n <= {BRUTEFORCE_MAX_NODES}, got n={g.n}"
        )
    if not g.edges:
        return 0
    pos = _layout_rows(g.n)
    worst = np.zeros(len(pos), dtype=np.int8)
    for u, v in g.edges:
        np.maximum(worst, np.abs(pos[:, u] - pos[:, v]), out=worst)
    return int(worst.min())
