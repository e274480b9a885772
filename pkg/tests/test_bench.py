import io

import pytest

from bandrec.bench import (
    AFFIRMATIVE,
    CSV_COLUMNS,
    NEGATIVE,
    BenchConfig,
    BenchConfigError,
    BenchRecord,
    instance_seed,
    run_bench,
    solve_with_timeout,
    summarize,
    time_solve,
    write_records_csv,
)
from bandrec.families import complete_graph, cycle_graph
from bandrec.generate import generate_affirmative_case


def small_config(**overrides):
    base = dict(
        sizes=(12,),
        affirmative_offsets=(-2,),
        negative_offsets=(-4,),
        cases_per_pair=2,
        timeout_s=10.0,
        repetitions=3,
        algorithms=("hall",),
        seed=7,
        kinds=(AFFIRMATIVE,),
    )
    base.update(overrides)
    return BenchConfig(**base)


class TestBenchRecord:
    def test_solved_needs_verdict_and_timing(self):
        BenchRecord("a", 10, 6, AFFIRMATIVE, "hall", 1, "solved", True, 123)
        with pytest.raises(ValueError):
            BenchRecord("a", 10, 6, AFFIRMATIVE, "hall", 1, "solved", True, None)
        with pytest.raises(ValueError):
            BenchRecord("a", 10, 6, AFFIRMATIVE, "hall", 1, "tle", True, 123)


class TestConfigValidation:
    def test_defaults_are_valid(self):
        BenchConfig().validate()

    @pytest.mark.parametrize(
        "overrides",
        [
            dict(sizes=()),
            dict(cases_per_pair=0),
            dict(timeout_s=0.0),
            dict(repetitions=2),
            dict(algorithms=("quantum",)),
            dict(kinds=("maybe",)),
            dict(affirmative_offsets=(-9,)),  # k below the regime floor
            dict(kinds=(NEGATIVE,), negative_offsets=(-2,)),  # k > n-4
        ],
    )
    def test_rejects(self, overrides):
        with pytest.raises(BenchConfigError):
            small_config(**overrides).validate()


class TestInstanceSeeds:
    def test_deterministic_and_distinct(self):
        a = instance_seed(7, AFFIRMATIVE, 12, 10, 0)
        assert a == instance_seed(7, AFFIRMATIVE, 12, 10, 0)
        others = {
            instance_seed(7, AFFIRMATIVE, 12, 10, 1),
            instance_seed(7, NEGATIVE, 12, 10, 0),
            instance_seed(8, AFFIRMATIVE, 12, 10, 0),
            instance_seed(7, AFFIRMATIVE, 12, 8, 0),
        }
        assert a not in others
        assert 0 <= a < 2**64


class TestSolveWithTimeout:
    def test_solved_true_and_false(self):
        status, verdict = solve_with_timeout(cycle_graph(5), 2, "hall", 10.0)
        assert (status, verdict) == ("solved", True)
        status, verdict = solve_with_timeout(complete_graph(5), 3, "hall", 10.0)
        assert (status, verdict) == ("solved", False)

    def test_degenerate_timeout_is_tle(self):
        status, verdict = solve_with_timeout(cycle_graph(5), 2, "hall", 1e-9)
        assert (status, verdict) == ("tle", None)

    def test_worker_exception_is_error(self):
        # k = -1 raises inside the child
        status, verdict = solve_with_timeout(cycle_graph(5), -1, "hall", 10.0)
        assert (status, verdict) == ("error", None)


def test_time_solve_returns_minimum_positive():
    g, _ = generate_affirmative_case(12, 10, seed=4)
    ns = time_solve(g, 10, "hall", repetitions=3)
    assert ns > 0


class TestRunBench:
    def test_rows_and_csv_schema(self):
        records = run_bench(small_config(algorithms=("hall", "naive")))
        # instances x algorithms x kinds
        assert len(records) == 2 * 2 * 1
        buf = io.StringIO()
        write_records_csv(records, buf)
        lines = buf.getvalue().strip().split("\n")
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == len(records) + 1
        for record in records:
            assert record.status == "solved"
            assert record.verdict is True  # affirmative instances

    def test_negative_kind_verdicts(self):
        records = run_bench(small_config(kinds=(NEGATIVE,), negative_offsets=(-4,), sizes=(10,)))
        assert records
        for record in records:
            assert record.status == "solved"
            assert record.verdict is False

    def test_default_protocol_affirmative_cell(self):
        # the stock protocol: 5 cases at (n=12, offset -2), five solved true rows
        records = run_bench(small_config(cases_per_pair=5))
        assert len(records) == 5
        assert all(r.status == "solved" and r.verdict is True for r in records)

    def test_same_seed_same_instances(self):
        def sans_timing(record):
            return (
                record.instance_id,
                record.n,
                record.k,
                record.case_kind,
                record.algorithm,
                record.seed,
                record.status,
                record.verdict,
            )

        first = run_bench(small_config())
        second = run_bench(small_config())
        assert [sans_timing(r) for r in first] == [sans_timing(r) for r in second]

    def test_summary_shape(self):
        records = run_bench(small_config())
        table = summarize(records)
        assert "(12,10)" in table
        assert "solved" in table.splitlines()[0]
