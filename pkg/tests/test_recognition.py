from itertools import combinations, permutations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bandrec.baselines import exact_bandwidth_bruteforce
from bandrec.families import (
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from bandrec.generate import GenParams, generate_negative_case, random_banded_matrix
from bandrec.graph import Graph, Layout, layout_bandwidth
from bandrec.recognition import (
    BOUNDS_CUTOFF,
    SEARCH_EXHAUSTED,
    LeftPartialLayout,
    OutOfRegimeError,
    assemble_certificate,
    build_blocked_index,
    check_hall_and_build_right,
    enumerate_left_partial_layouts,
    recognize,
)
from conftest import assert_certified, random_graph, regime_ks


def left(assignment):
    return LeftPartialLayout.from_assignment(assignment)


@st.composite
def graph_k_left(draw, min_n: int = 4, max_n: int = 9):
    """A graph, an in-regime k, and a random left partial layout for them."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    k = draw(st.integers((n - 1) // 2, n - 2))
    assignment = tuple(draw(st.permutations(range(n)))[: n - k - 1])
    return Graph(n, edges), k, left(assignment)


def feasible_right_exists(g, k, lft):
    """Brute-force ground truth: some compatible right assignment passes the
    direct every-far-pair edge test."""
    n = g.n
    width = n - k - 1
    rest = [v for v in range(n) if v not in lft.members]
    for right in permutations(rest, width):
        if all(
            not g.adjacent(lft.assignment[i], right[j])
            for i in range(width)
            for j in range(i, width)
        ):
            return True
    return False


class TestEnumeration:
    def test_single_position_assignments(self):
        got = [pl.assignment for pl in enumerate_left_partial_layouts(empty_graph(5), 3)]
        assert got == [(0,), (1,), (2,), (3,), (4,)]

    @pytest.mark.parametrize(
        "n,k,count",
        [(5, 3, 5), (5, 2, 20), (12, 10, 12), (7, 4, 42), (8, 5, 56), (8, 4, 336), (8, 3, 1680)],
    )
    def test_counts(self, n, k, count):
        assert count == factorial(n) // factorial(k + 1)
        assert sum(1 for _ in enumerate_left_partial_layouts(empty_graph(n), k)) == count

    def test_counts_every_regime_k_up_to_n8(self):
        for n in range(2, 9):
            for k in range((n - 1) // 2, n - 1):
                stream = enumerate_left_partial_layouts(empty_graph(n), k)
                assert sum(1 for _ in stream) == factorial(n) // factorial(k + 1)

    def test_unique_and_lexicographic(self):
        seen = [pl.assignment for pl in enumerate_left_partial_layouts(empty_graph(6), 3)]
        assert len(set(seen)) == len(seen)
        assert seen == sorted(seen)

    def test_members_match_assignment(self):
        for pl in enumerate_left_partial_layouts(empty_graph(5), 2):
            assert pl.members == frozenset(pl.assignment)
            assert len(pl.assignment) == 2

    @pytest.mark.parametrize("k", [-1, 1, 5])
    def test_out_of_range_k_rejected(self, k):
        with pytest.raises(ValueError):
            next(iter(enumerate_left_partial_layouts(empty_graph(6), k)))

    def test_injectivity_validated(self):
        with pytest.raises(ValueError):
            LeftPartialLayout.from_assignment((1, 1))


class TestBlockedIndex:
    def test_edgeless_all_sentinel(self):
        g = empty_graph(6)
        index = build_blocked_index(g, left((0, 1)))
        assert index.sentinel == 6
        assert index.blocked_of == {2: 6, 3: 6, 4: 6, 5: 6}
        assert index.sorted_nodes == [2, 3, 4, 5]

    def test_complete_all_blocked_at_zero(self):
        index = build_blocked_index(complete_graph(5), left((2,)))
        assert index.blocked_of == {0: 0, 1: 0, 3: 0, 4: 0}

    def test_star_leaves_blocked_by_centre(self):
        index = build_blocked_index(star_graph(4), left((0, 1)))
        assert index.blocked_of == {2: 0, 3: 0, 4: 0}

    def test_minimum_index_wins(self):
        # node 4 adjacent to both left nodes; the smaller index is recorded
        g = Graph(5, [(0, 4), (1, 4), (1, 3)])
        index = build_blocked_index(g, left((0, 1)))
        assert index.blocked_of == {2: 5, 3: 1, 4: 0}
        assert index.sorted_nodes == [4, 3, 2]
        assert index.sorted_values == [0, 1, 5]

    def test_stable_tie_break_by_node_id(self, rng):
        for _ in range(30):
            n = int(rng.integers(6, 11))
            g = random_graph(rng, n, float(rng.uniform(0.2, 0.8)))
            k = int(rng.integers((n - 1) // 2, n - 1))
            assignment = tuple(int(v) for v in rng.permutation(n)[: n - k - 1])
            index = build_blocked_index(g, left(assignment))
            keyed = [(index.blocked_of[v], v) for v in index.sorted_nodes]
            assert keyed == sorted(keyed)

    @given(graph_k_left())
    @settings(max_examples=80)
    def test_membership_law(self, case):
        # v in A_j iff blocked_of[v] > j, with A_j computed from scratch
        g, k, pl = case
        index = build_blocked_index(g, pl)
        assert len(index.sorted_nodes) == k + 1
        assert index.sentinel == g.n
        unplaced = [v for v in range(g.n) if v not in pl.members]
        for j in range(g.n - k - 1):
            a_j = {
                v
                for v in unplaced
                if all(not g.adjacent(pl.assignment[i], v) for i in range(j + 1))
            }
            assert a_j == {v for v in unplaced if index.blocked_of[v] > j}


class TestHallCheck:
    def test_edgeless_feasible_with_tail_nodes(self):
        g = empty_graph(6)
        index = build_blocked_index(g, left((0, 1)))
        right = check_hall_and_build_right(index, 6, 3)
        assert right == index.sorted_nodes[-2:] == [4, 5]

    def test_complete_infeasible(self):
        index = build_blocked_index(complete_graph(4), left((0,)))
        assert check_hall_and_build_right(index, 4, 2) is None

    @pytest.mark.parametrize("assignment", [(0, 2), (1, 4)])
    def test_cycle_infeasible_lefts(self, assignment):
        g = cycle_graph(5)
        index = build_blocked_index(g, left(assignment))
        assert check_hall_and_build_right(index, 5, 2) is None
        assert not feasible_right_exists(g, 2, left(assignment))

    def test_cycle_has_some_feasible_left(self):
        g = cycle_graph(5)
        feasible = [
            pl.assignment
            for pl in enumerate_left_partial_layouts(g, 2)
            if check_hall_and_build_right(build_blocked_index(g, pl), 5, 2) is not None
        ]
        assert feasible  # the recognizer still succeeds overall
        assert (0, 1) in feasible

    @given(graph_k_left(max_n=10))
    @settings(max_examples=100, deadline=None)
    def test_matches_bruteforce_existence(self, case):
        # Presence of a constructed right == existence of any feasible right.
        g, k, pl = case
        right = check_hall_and_build_right(build_blocked_index(g, pl), g.n, k)
        assert (right is not None) == feasible_right_exists(g, k, pl)
        if right is not None:
            cert = assemble_certificate(pl, right, g, k)
            assert layout_bandwidth(g, cert) <= k

    def test_nested_counts(self, rng):
        # |A_0| >= |A_1| >= ... regardless of the graph or the left layout.
        for _ in range(20):
            n = int(rng.integers(5, 11))
            g = random_graph(rng, n, 0.4)
            k = int(rng.integers((n - 1) // 2, n - 1))
            assignment = tuple(int(v) for v in rng.permutation(n)[: n - k - 1])
            index = build_blocked_index(g, left(assignment))
            sizes = [
                sum(1 for v in index.sorted_nodes if index.blocked_of[v] > j)
                for j in range(n - k - 1)
            ]
            assert sizes == sorted(sizes, reverse=True)

    def test_count_law_binary_search_vs_scan(self, rng):
        from bisect import bisect_right

        for _ in range(20):
            n = int(rng.integers(5, 11))
            g = random_graph(rng, n, 0.5)
            k = int(rng.integers((n - 1) // 2, n - 1))
            assignment = tuple(int(v) for v in rng.permutation(n)[: n - k - 1])
            index = build_blocked_index(g, left(assignment))
            for j in range(n):
                by_search = bisect_right(index.sorted_values, j)
                by_scan = sum(1 for v in index.sorted_nodes if index.blocked_of[v] <= j)
                assert by_search == by_scan


class TestAssembleCertificate:
    def test_edgeless_identity(self):
        g = empty_graph(6)
        cert = assemble_certificate(left((0, 1)), [4, 5], g, 3)
        assert cert.inverse == (0, 1, 2, 3, 4, 5)
        assert layout_bandwidth(g, cert) == 0

    def test_single_middle_slot(self):
        cert = assemble_certificate(left((3, 1)), [0, 2], empty_graph(5), 2)
        # positions: left 0..1, middle 2, right 3..4
        assert cert.inverse == (3, 1, 4, 0, 2)

    def test_overlap_is_a_bug(self):
        with pytest.raises(RuntimeError):
            assemble_certificate(left((0, 1)), [1, 5], empty_graph(6), 3)


class TestRecognize:
    def test_complete_graph_cut_by_bounds(self):
        result = recognize(complete_graph(4), 2)
        assert not result.verdict
        assert result.certificate is None
        assert result.negative_reason == BOUNDS_CUTOFF

    def test_edgeless_identity_certificate(self):
        result = recognize(empty_graph(6), 3)
        assert result.verdict
        assert result.certificate == Layout.identity(6)

    def test_cycle(self):
        g = cycle_graph(5)
        assert exact_bandwidth_bruteforce(g) == 2
        assert_certified(g, 2, recognize(g, 2))

    def test_scrambled_banded_instance(self, rng):
        g = random_banded_matrix(GenParams(12, 8, 0.5, 424242))
        while True:
            relabeling = [int(x) for x in rng.permutation(12)]
            h = g.relabeled(relabeling)
            if layout_bandwidth(h, Layout.identity(12)) > 8:
                break
        assert_certified(h, 8, recognize(h, 8))

    def test_trivial_when_k_at_least_n_minus_1(self):
        result = recognize(complete_graph(4), 3)
        assert result.verdict
        assert result.certificate == Layout.identity(4)
        assert recognize(complete_graph(4), 99).verdict

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            recognize(path_graph(3), -1)

    def test_out_of_regime_component(self):
        # P_8 needs k >= 3 even though its bandwidth is 1
        with pytest.raises(OutOfRegimeError):
            recognize(path_graph(8), 2)
        # ... including when hidden inside a larger graph
        g = Graph(10, list(path_graph(8).edges) + [(8, 9)])
        with pytest.raises(OutOfRegimeError):
            recognize(g, 2)

    def test_search_exhausted_reason(self):
        g, _ = generate_negative_case(6, 2, seed=5)
        result = recognize(g, 2)
        assert not result.verdict
        assert result.negative_reason == SEARCH_EXHAUSTED

    def test_disconnected_certificate_concatenation(self):
        # two C_5 copies: beta = 2, solvable per component at k = 2
        edges = list(cycle_graph(5).edges) + [(u + 5, v + 5) for u, v in cycle_graph(5).edges]
        g = Graph(10, edges)
        result = recognize(g, 2)
        assert_certified(g, 2, result)
        # first five positions hold the first component
        assert sorted(result.certificate.inverse[:5]) == [0, 1, 2, 3, 4]

    def test_mixed_component_sizes(self):
        # K_3 (trivial at k=2) plus C_5 (searched); order by smallest node id
        edges = [(0, 1), (0, 2), (1, 2)] + [(u + 3, v + 3) for u, v in cycle_graph(5).edges]
        g = Graph(8, edges)
        result = recognize(g, 2)
        assert_certified(g, 2, result)
        assert result.certificate.inverse[:3] == (0, 1, 2)

    def test_deterministic(self, rng):
        for _ in range(20):
            n = int(rng.integers(5, 10))
            g = random_graph(rng, n, 0.4)
            for k in regime_ks(n):
                first = recognize(g, k)
                second = recognize(g, k)
                assert first.verdict == second.verdict
                assert first.certificate == second.certificate
                assert first.negative_reason == second.negative_reason

    def test_agrees_with_oracle_on_random_graphs(self, rng):
        for _ in range(40):
            n = int(rng.integers(2, 9))
            g = random_graph(rng, n, float(rng.uniform(0.1, 0.9)))
            beta = exact_bandwidth_bruteforce(g)
            for k in regime_ks(n):
                result = recognize(g, k)
                assert result.verdict == (beta <= k)
                if result.verdict:
                    assert_certified(g, k, result)

    def test_concurrent_calls_share_graphs_safely(self, rng):
        from concurrent.futures import ThreadPoolExecutor

        jobs = []
        for _ in range(12):
            n = int(rng.integers(6, 10))
            jobs.append((random_graph(rng, n, 0.4), int(rng.integers((n - 1) // 2, n - 1))))
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(lambda job: recognize(*job), jobs))
        for (g, k), result in zip(jobs, results):
            assert result == recognize(g, k)
