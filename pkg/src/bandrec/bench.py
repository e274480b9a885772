"""Timeout-governed benchmark harness over generated instances.

For every configured (n, k, case kind) cell the harness generates seeded
instances, establishes each algorithm's verdict in a separate process under
a wall-clock timeout (a hung or slow run is killed without corrupting the
parent), and then times solved runs in-process: the minimum of several
repetitions on a monotonic nanosecond clock, which suppresses scheduler and
cache noise better than a mean would. Results land in a CSV with one row
per (instance, algorithm) run plus a printable per-cell summary.

Reported times include the lower-bound computation the recognizer performs
internally.

Seeds: every instance seed derives from the master seed via
``numpy.random.SeedSequence(master, spawn_key=(kind, n, k, index))`` folded
to 64 bits, so a rerun with the same master seed regenerates identical
instances regardless of which cells are selected.
"""

from __future__ import annotations

import csv
import multiprocessing as mp
import statistics
import time
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence, TextIO

import numpy as np

from .baselines import naive_recognition
from .generate import GenerationError, generate_affirmative_case, generate_negative_case
from .graph import Graph
from .recognition import recognize

CSV_COLUMNS = (
    "instance_id",
    "n",
    "k",
    "case_kind",
    "algorithm",
    "seed",
    "status",
    "verdict",
    "min_runtime_ns",
)

AFFIRMATIVE = "affirmative"
NEGATIVE = "negative"
_KIND_CODES = {AFFIRMATIVE: 0, NEGATIVE: 1}

ALGORITHMS: dict[str, Callable[[Graph, int], Any]] = {
    "hall": recognize,
    "naive": naive_recognition,
}

DEFAULT_AFFIRMATIVE_OFFSETS = (-6, -4, -2)
DEFAULT_NEGATIVE_OFFSETS = (-6, -4)
GENERATION_RESEEDS = 5


class BenchConfigError(ValueError):
    """The requested benchmark configuration is unusable."""


@dataclass(frozen=True)
class BenchRecord:
    """One timed (instance, algorithm) run."""

    instance_id: str
    n: int
    k: int
    case_kind: str
    algorithm: str
    seed: int
    status: str  # solved | tle | error
    verdict: bool | None = None
    min_runtime_ns: int | None = None

    def __post_init__(self) -> None:
        solved = self.status == "solved"
        if solved != (self.verdict is not None and self.min_runtime_ns is not None):
            raise ValueError("verdict and min_runtime_ns must be present exactly for solved rows")


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple[int, ...] = (10, 12)
    affirmative_offsets: tuple[int, ...] = DEFAULT_AFFIRMATIVE_OFFSETS
    negative_offsets: tuple[int, ...] = DEFAULT_NEGATIVE_OFFSETS
    cases_per_pair: int = 5
    timeout_s: float = 10.0
    repetitions: int = 5
    algorithms: tuple[str, ...] = ("hall",)
    seed: int = 0
    kinds: tuple[str, ...] = (AFFIRMATIVE, NEGATIVE)

    def validate(self) -> None:
        if not self.sizes or any(n < 2 for n in self.sizes):
            raise BenchConfigError("sizes must be nonempty with every n >= 2")
        if self.cases_per_pair < 1:
            raise BenchConfigError("cases per pair must be at least 1")
        if self.timeout_s <= 0:
            raise BenchConfigError("timeout must be positive")
        if self.repetitions < 3:
            raise BenchConfigError("timing needs at least 3 repetitions")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if not self.algorithms or unknown:
            raise BenchConfigError(f"unknown algorithms: {sorted(unknown)}" if unknown else "no algorithms selected")
        if not self.kinds or set(self.kinds) - set(_KIND_CODES):
            raise BenchConfigError(f"kinds must be drawn from {sorted(_KIND_CODES)}")
        for kind, n, k in self.cells():
            lo = (n - 1) // 2
            hi = n - 4 if kind == NEGATIVE else n - 1
            if not (lo <= k <= hi):
                raise BenchConfigError(
                    f"{kind} cell (n={n}, k={k}) outside the usable range [{lo}, {hi}]"
                )

    def cells(self) -> Iterable[tuple[str, int, int]]:
        for kind in self.kinds:
            offsets = self.affirmative_offsets if kind == AFFIRMATIVE else self.negative_offsets
            for n in self.sizes:
                for off in offsets:
                    yield kind, n, n + off


def instance_seed(master: int, kind: str, n: int, k: int, index: int) -> int:
    """Fold a per-instance SeedSequence stream into one recordable 64-bit seed."""
    ss = np.random.SeedSequence(master, spawn_key=(_KIND_CODES[kind], n, k, index))
    hi, lo = ss.generate_state(2, np.uint32)
    return int(hi) << 32 | int(lo)


def _generate_instance(kind: str, n: int, k: int, seed: int) -> tuple[Graph, int]:
    gen = generate_affirmative_case if kind == AFFIRMATIVE else generate_negative_case
    current = seed
    for _ in range(GENERATION_RESEEDS):
        try:
            g, _meta = gen(n, k, current)
            return g, current
        except GenerationError:
            # Deterministic reseed: walk the same 64-bit space.
            current = (current + 0x9E3779B97F4A7C15) % 2**64
    raise GenerationError(f"could not generate a {kind} instance for n={n}, k={k} from seed {seed}")


def _verdict_worker(conn, n: int, edges: tuple, k: int, algorithm: str) -> None:
    try:
        result = ALGORITHMS[algorithm](Graph(n, edges), k)
        conn.send(("ok", bool(result.verdict)))
    except Exception as exc:  # surfaced as an 'error' row in the parent
        conn.send(("error", repr(exc)))
    finally:
        conn.close()


def solve_with_timeout(g: Graph, k: int, algorithm: str, timeout_s: float) -> tuple[str, bool | None]:
    """Run one solve in a separate process; ('solved'|'tle'|'error', verdict).

    The wall clock starts before the child is spawned, so process startup
    counts against the budget and a run is solved only if its verdict
    arrives inside the window; a degenerate budget therefore yields tle no
    matter how fast the child is.
    """
    receiver, sender = mp.Pipe(duplex=False)
    proc = mp.Process(target=_verdict_worker, args=(sender, g.n, g.edges, k, algorithm))
    start = time.perf_counter()
    proc.start()
    sender.close()
    try:
        remaining = timeout_s - (time.perf_counter() - start)
        arrived = receiver.poll(max(0.0, remaining))
        if not arrived or time.perf_counter() - start > timeout_s:
            return "tle", None
        try:
            tag, payload = receiver.recv()
        except EOFError:  # child died before reporting
            return "error", None
        return ("solved", payload) if tag == "ok" else ("error", None)
    finally:
        if proc.is_alive():
            proc.terminate()
        proc.join()
        receiver.close()


def time_solve(g: Graph, k: int, algorithm: str, repetitions: int) -> int:
    """Minimum wall-clock nanoseconds over ``repetitions`` in-process solves."""
    solver = ALGORITHMS[algorithm]
    best: int | None = None
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        solver(g, k)
        elapsed = time.perf_counter_ns() - start
        if best is None or elapsed < best:
            best = elapsed
    assert best is not None
    return best


def run_bench(config: BenchConfig, progress: Callable[[str], None] | None = None) -> list[BenchRecord]:
    """Generate, verify, and time every configured cell; returns all records."""
    config.validate()
    say = progress or (lambda _msg: None)
    records: list[BenchRecord] = []
    for kind, n, k in config.cells():
        for index in range(config.cases_per_pair):
            seed = instance_seed(config.seed, kind, n, k, index)
            g, used_seed = _generate_instance(kind, n, k, seed)
            iid = f"{kind[:3]}-n{n}-k{k}-i{index:03d}"
            for algorithm in config.algorithms:
                status, verdict = solve_with_timeout(g, k, algorithm, config.timeout_s)
                if status == "solved":
                    ns = time_solve(g, k, algorithm, config.repetitions)
                    record = BenchRecord(iid, n, k, kind, algorithm, used_seed, "solved", verdict, ns)
                else:
                    record = BenchRecord(iid, n, k, kind, algorithm, used_seed, status)
                records.append(record)
                say(f"{iid} {algorithm}: {status}" + (f" {record.min_runtime_ns} ns" if record.min_runtime_ns else ""))
    return records


def write_records_csv(records: Sequence[BenchRecord], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.instance_id,
                r.n,
                r.k,
                r.case_kind,
                r.algorithm,
                r.seed,
                r.status,
                "" if r.verdict is None else str(r.verdict).lower(),
                "" if r.min_runtime_ns is None else r.min_runtime_ns,
            ]
        )


def summarize(records: Sequence[BenchRecord]) -> str:
    """Per-(n, k, kind, algorithm) table: solved / TLE counts and mean+-std ms."""
    cells: dict[tuple[int, int, str, str], list[BenchRecord]] = {}
    for r in records:
        cells.setdefault((r.n, r.k, r.case_kind, r.algorithm), []).append(r)
    header = f"{'(n,k)':<10} {'case':<12} {'algorithm':<10} {'solved':>6} {'tle':>4}  time (ms)"
    lines = [header, "-" * len(header)]
    for (n, k, kind, algorithm), rows in sorted(cells.items()):
        solved = [r for r in rows if r.status == "solved"]
        tle = sum(1 for r in rows if r.status == "tle")
        if solved:
            ms = [r.min_runtime_ns / 1e6 for r in solved]  # type: ignore[operator]
            mean = statistics.fmean(ms)
            std = statistics.stdev(ms) if len(ms) > 1 else 0.0
            timing = f"{mean:.3f} +- {std:.3f}"
        else:
            timing = "-"
        lines.append(f"{f'({n},{k})':<10} {kind:<12} {algorithm:<10} {len(solved):>6} {tle:>4}  {timing}")
    return "\n".join(lines)
