"""Command-line front end.

Subcommands: recognize, bounds, bandwidth, gen, bench. Exit codes: 0 for
success (recognize: verdict true), 1 for a false recognition verdict, 2 for
any error. The BANDREC_SEED environment variable supplies a seed when
--seed is omitted.
"""

from __future__ import annotations

import argparse
import os
import sys

from .baselines import exact_bandwidth_bruteforce
from .bench import (
    AFFIRMATIVE,
    ALGORITHMS,
    NEGATIVE,
    BenchConfig,
    BenchConfigError,
    run_bench,
    summarize,
    write_records_csv,
)
from .bounds import bandwidth_bounds
from .generate import (
    GenerationError,
    GenParams,
    generate_affirmative_case,
    generate_negative_case,
    random_banded_matrix,
)
from .graph import layout_bandwidth
from .io import GraphParseError, parse_graph_file, write_graph_file
from .recognition import OutOfRegimeError, recognize

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("BANDREC_SEED")
    return int(env) if env else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bandrec",
        description="Bandwidth recognition for large targets, plus bounds, generators, and benchmarking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide whether a graph has bandwidth <= k")
    p.add_argument("graph", help="edge-list graph file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="also print the certificate's measured bandwidth")

    p = sub.add_parser("bounds", help="print the lower bounds alpha and gamma")
    p.add_argument("graph")

    p = sub.add_parser("bandwidth", help="exact bandwidth by brute force (n <= 9)")
    p.add_argument("graph")

    p = sub.add_parser("gen", help="generate an instance and write it as a graph file")
    p.add_argument("--kind", choices=["banded", "affirmative", "negative"], default="banded")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="target bandwidth (affirmative/negative kinds)")
    p.add_argument("--psi", type=int, help="band half-width (banded kind)")
    p.add_argument("--p", type=float, help="edge probability (banded kind)")
    p.add_argument("--seed", type=int, default=None, help="falls back to BANDREC_SEED, then 0")
    p.add_argument("--output", required=True, help="destination graph file")

    p = sub.add_parser("bench", help="run the benchmark harness")
    p.add_argument("--sizes", type=_int_list, default=[10, 12], help="comma-separated n values")
    p.add_argument("--k-offsets-affirmative", type=_int_list, default=[-6, -4, -2], metavar="OFFSETS")
    p.add_argument("--k-offsets-negative", type=_int_list, default=[-6, -4], metavar="OFFSETS")
    p.add_argument("--kinds", choices=[AFFIRMATIVE, NEGATIVE, "both"], default="both")
    p.add_argument("--cases", type=int, default=5, help="instances per (n, k, kind) cell")
    p.add_argument("--timeout", type=float, default=10.0, help="per-solve wall-clock timeout in seconds")
    p.add_argument("--reps", type=int, default=5, help="timing repetitions per solved run (min is kept)")
    p.add_argument("--algorithms", default="hall", help=f"comma-separated subset of {sorted(ALGORITHMS)}")
    p.add_argument("--seed", type=int, default=None, help="falls back to BANDREC_SEED, then 0")
    p.add_argument("--output", required=True, help="CSV destination")
    p.add_argument("--format", choices=["csv", "table"], default="table", help="what to print on stdout")
    p.add_argument("--quiet", action="store_true", help="suppress per-run progress lines")
    return parser


def _cmd_recognize(args) -> int:
    g = parse_graph_file(args.graph)
    result = recognize(g, args.k)
    if result.verdict:
        print("verdict=true")
        assert result.certificate is not None
        if args.verify:
            print(f"certificate_bandwidth={layout_bandwidth(g, result.certificate)}")
        for pos, node in enumerate(result.certificate.inverse):
            print(f"{pos}:{node}")
        return EXIT_TRUE
    print(f"verdict=false reason={result.negative_reason}")
    return EXIT_FALSE


def _cmd_bounds(args) -> int:
    b = bandwidth_bounds(parse_graph_file(args.graph))
    print(f"alpha={b.alpha}")
    print(f"gamma={b.gamma}")
    print(f"combined={b.combined}")
    return EXIT_TRUE


def _cmd_bandwidth(args) -> int:
    print(f"bandwidth={exact_bandwidth_bruteforce(parse_graph_file(args.graph))}")
    return EXIT_TRUE


def _cmd_gen(args) -> int:
    seed = _resolve_seed(args.seed)
    if args.kind == "banded":
        if args.psi is None or args.p is None:
            raise ValueError("banded generation needs --psi and --p")
        g = random_banded_matrix(GenParams(args.n, args.psi, args.p, seed))
    else:
        if args.k is None:
            raise ValueError(f"{args.kind} generation needs --k")
        gen = generate_affirmative_case if args.kind == "affirmative" else generate_negative_case
        g, _meta = gen(args.n, args.k, seed)
    write_graph_file(g, args.output)
    print(f"wrote {args.output} (n={g.n}, m={g.m})")
    return EXIT_TRUE


def _cmd_bench(args) -> int:
    kinds = (AFFIRMATIVE, NEGATIVE) if args.kinds == "both" else (args.kinds,)
    config = BenchConfig(
        sizes=tuple(args.sizes),
        affirmative_offsets=tuple(args.k_offsets_affirmative),
        negative_offsets=tuple(args.k_offsets_negative),
        cases_per_pair=args.cases,
        timeout_s=args.timeout,
        repetitions=args.reps,
        algorithms=tuple(tok for tok in args.algorithms.split(",") if tok),
        seed=_resolve_seed(args.seed),
        kinds=kinds,
    )
    config.validate()
    progress = None if args.quiet else lambda msg: print(msg, file=sys.stderr)
    try:
        # open up front so a bad path fails before hours of benchmarking
        with open(args.output, "w", encoding="ascii", newline="") as fh:
            records = run_bench(config, progress=progress)
            write_records_csv(records, fh)
    except OSError as exc:
        raise BenchConfigError(f"cannot write {args.output}: {exc}") from exc
    if args.format == "csv":
        write_records_csv(records, sys.stdout)
    else:
        print(summarize(records))
    return EXIT_TRUE


_COMMANDS = {
    "recognize": _cmd_recognize,
    "bounds": _cmd_bounds,
    "bandwidth": _cmd_bandwidth,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (
        GraphParseError,
        OutOfRegimeError,
        GenerationError,
        BenchConfigError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
