"""Bandwidth recognition for large targets via a marriage-condition check.

Deciding whether a graph admits a layout of bandwidth at most ``k`` only
requires choosing which nodes occupy the first ``n-k-1`` and last ``n-k-1``
positions: every other pair of positions is within ``k`` of each other. The
recognizer therefore enumerates assignments of the leftmost positions and,
for each, decides in near-linear time whether the rightmost positions can be
filled compatibly. That feasibility question is a bipartite matching whose
structure is nested, so it collapses to ``n-k-1`` counting checks: position
``k+j+1`` may hold any unplaced node not adjacent to the left nodes at
indices ``<= j``, and a compatible assignment of all right positions exists
iff at least ``n-k-j-1`` such nodes remain for every ``j``.

The counting is served by a per-left-layout index: ``blocked_of[v]`` is the
smallest left index adjacent to ``v`` (``n`` as the "never blocked"
sentinel), and the unplaced nodes sorted by that value let each check run as
one binary search. When every check passes, the sorted order itself yields a
valid right assignment, and the remaining nodes fill the middle positions in
any order.

This is worthwhile only when ``k >= floor((n-1)/2)``; below that the left
and right position blocks would overlap and the decomposition breaks down.
Inputs outside the regime raise :class:`OutOfRegimeError` rather than
silently falling back to another method.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .bounds import bandwidth_bounds
from .graph import Graph, Layout, connected_components, layout_bandwidth

BOUNDS_CUTOFF = "bounds_cutoff"
SEARCH_EXHAUSTED = "search_exhausted"
OUT_OF_REGIME = "out_of_regime"


class OutOfRegimeError(ValueError):
    """Raised when some component needs k below half its size, where the
    left/right position split that the algorithm relies on does not exist."""

    reason = OUT_OF_REGIME


@dataclass(frozen=True)
class LeftPartialLayout:
    """Injective assignment of the leftmost positions ``0..n-k-2``.

    ``assignment[i]`` is the node placed at position ``i``; ``members`` is
    the same set with O(1) lookup.
    """

    assignment: tuple[int, ...]
    members: frozenset[int]

    @classmethod
    def from_assignment(cls, assignment: Sequence[int]) -> "LeftPartialLayout":
        assignment = tuple(assignment)
        members = frozenset(assignment)
        if len(members) != len(assignment):
            raise ValueError("left partial layout must be injective")
        return cls(assignment, members)


@dataclass
class BlockedIndex:
    """Blocking structure for the unplaced nodes of one left partial layout.

    ``blocked_of[v]`` is the minimum left index whose node is adjacent to
    ``v``, or ``sentinel`` (= n, larger than any real index) when none is.
    ``sorted_nodes`` holds the k+1 unplaced nodes in nondecreasing
    ``blocked_of`` order, ties broken by ascending node id; ``sorted_values``
    is the aligned value array that the binary searches run on.
    """

    blocked_of: dict[int, int]
    sorted_nodes: list[int]
    sorted_values: list[int]
    sentinel: int


@dataclass(frozen=True)
class RecognitionResult:
    """Verdict plus certificate layout (on success) or the reason it failed.

    ``negative_reason`` is ``"bounds_cutoff"`` when a lower bound already
    exceeds k, or ``"search_exhausted"`` when the full enumeration found no
    feasible layout.
    """

    verdict: bool
    certificate: Layout | None = None
    negative_reason: str | None = None


def enumerate_left_partial_layouts(g: Graph, k: int) -> Iterator[LeftPartialLayout]:
    """Yield every left partial layout of ``g`` w.r.t. bandwidth ``k`` once.

    The stream is lexicographic over the assignment arrays and contains
    exactly ``n! / (k+1)!`` entries; only O(n) state is held at a time.
    """
    n = g.n
    if not ((n - 1) // 2 <= k <= n - 2):
        raise ValueError(f"k={k} outside the enumerable range [{(n - 1) // 2}, {n - 2}] for n={n}")
    width = n - k - 1
    for assignment in permutations(range(n), width):
        yield LeftPartialLayout(assignment, frozenset(assignment))


def build_blocked_index(g: Graph, left: LeftPartialLayout) -> BlockedIndex:
    """Compute the blocking index for ``left`` in O(k * (n-k)) edge queries."""
    n = g.n
    masks = g.neighbor_masks
    assignment = left.assignment
    members = left.members
    blocked_of: dict[int, int] = {}
    for v in range(n):
        if v in members:
            continue
        b = n
        for i, u in enumerate(assignment):
            if masks[u] >> v & 1:
                b = i
                break
        blocked_of[v] = b
    # dict preserves ascending-v insertion order and sort() is stable, so
    # equal blocked values stay ordered by node id.
    sorted_nodes = sorted(blocked_of, key=blocked_of.__getitem__)
    sorted_values = [blocked_of[v] for v in sorted_nodes]
    return BlockedIndex(blocked_of, sorted_nodes, sorted_values, n)


def check_hall_and_build_right(index: BlockedIndex, n: int, k: int) -> list[int] | None:
    """Feasibility check for the right positions, with the assignment built alongside.

    For each ``j`` the number of still-unblocked nodes is counted by binary
    search; the check stops at the first ``j`` whose count falls below
    ``n-k-j-1`` and returns ``None``. Otherwise returns ``right`` where
    ``right[j]`` is the node for position ``k+j+1``.
    """
    values = index.sorted_values
    nodes = index.sorted_nodes
    total = k + 1
    base = 2 * k - n + 2
    right = []
    for j in range(n - k - 1):
        if total - bisect_right(values, j) < n - k - j - 1:
            return None
        right.append(nodes[base + j])
    return right


def assemble_certificate(left: LeftPartialLayout, right: Sequence[int], g: Graph, k: int) -> Layout:
    """Extend a feasible (left, right) pair to a full layout.

    Left nodes take positions ``0..n-k-2`` and right nodes ``k+1..n-1``; the
    remaining ``2k-n+2`` nodes fill the middle positions ``n-k-1..k`` in
    ascending id order. Overlapping left/right images indicate a bug in the
    caller and raise ``RuntimeError``.
    """
    n = g.n
    inverse = [-1] * n
    for i, v in enumerate(left.assignment):
        inverse[i] = v
    for j, v in enumerate(right):
        inverse[k + 1 + j] = v
    used = set(left.assignment)
    used.update(right)
    if len(used) != len(left.assignment) + len(right):
        raise RuntimeError("left and right partial layouts overlap; this should be unreachable")
    middle = (v for v in range(n) if v not in used)
    for pos in range(n - k - 1, k + 1):
        inverse[pos] = next(middle)
    return Layout.from_inverse(inverse)


def _solve_component(g: Graph, k: int) -> Layout | None:
    # Full left-layout sweep over one connected component; None = infeasible.
    n = g.n
    for left in enumerate_left_partial_layouts(g, k):
        index = build_blocked_index(g, left)
        right = check_hall_and_build_right(index, n, k)
        if right is not None:
            return assemble_certificate(left, right, g, k)
    return None


def recognize(g: Graph, k: int) -> RecognitionResult:
    """Decide whether ``g`` has bandwidth at most ``k``; certify when it does.

    Requires ``k >= floor((n_C - 1) / 2)`` for every connected component of
    size ``n_C`` that actually needs searching; other inputs raise
    :class:`OutOfRegimeError`. ``k >= n-1`` is accepted and trivially true.

    The verdict is exact: lower bounds may cut the search short (negative
    ``bounds_cutoff``), components are solved independently and their
    certificate layouts concatenated, and a negative after full enumeration
    reports ``search_exhausted``.
    """
    n = g.n
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k >= n - 1:
        return RecognitionResult(True, Layout.identity(n))

    if k < bandwidth_bounds(g).combined:
        return RecognitionResult(False, None, BOUNDS_CUTOFF)

    pieces: list[Sequence[int]] = []
    for component in connected_components(g).components:
        size = len(component)
        if k >= size - 1:
            # Any ordering works; ascending ids keep the result deterministic.
            pieces.append(component)
            continue
        if k < (size - 1) // 2:
            raise OutOfRegimeError(
                f"component of size {size} needs k >= {(size - 1) // 2}, got {k}"
            )
        sub, mapping = g.subgraph(component)
        if k < bandwidth_bounds(sub).combined:
            return RecognitionResult(False, None, BOUNDS_CUTOFF)
        layout = _solve_component(sub, k)
        if layout is None:
            return RecognitionResult(False, None, SEARCH_EXHAUSTED)
        pieces.append([mapping[v] for v in layout.inverse])

    inverse: list[int] = []
    for piece in pieces:
        inverse.extend(piece)
    certificate = Layout.from_inverse(inverse)
    assert layout_bandwidth(g, certificate) <= k
    return RecognitionResult(True, certificate)
