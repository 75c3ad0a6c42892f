"""Command-line interface.

Exit codes: 0 ok, 1 usage, 2 parse, 3 I/O, 4 verification failure.

Ranks are written smallest first; a smaller rank is a higher level, and
edges point from low rank to high rank when they respect the hierarchy.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .errors import EdgeListParseError
from .graph import DirectedGraph, dumps_edge_list, parse_edge_lines, read_edge_list
from .hierarchy import approximation_ratio_bound, format_ranks, graph_agony, parse_ranks
from .pipeline import ALGORITHMS, solve

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_IO, EXIT_VERIFY = 0, 1, 2, 3, 4

log = logging.getLogger("agony")


@dataclass
class RunConfig:
    input: Path
    algorithm: str = "relief"
    epsilon: Fraction = Fraction(0)
    speedup: bool = True
    dedupe: bool = False
    out: Optional[Path] = None
    trace: Optional[Path] = None
    certificate: Optional[Path] = None
    check: bool = False
    seed: Optional[int] = None  # reserved; the pipeline is deterministic

    def __post_init__(self):
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("epsilon must be nonnegative")
    return value


def _run_one(config: RunConfig) -> dict:
    graph = read_edge_list(config.input, dedupe=config.dedupe)
    started = time.perf_counter()
    result = solve(graph, config.algorithm, epsilon=config.epsilon, speedup=config.speedup, check=config.check)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    if config.out is not None:
        config.out.write_text(format_ranks(graph, result.ranks), encoding="utf-8")
    if config.trace is not None:
        config.trace.write_text(result.trace.to_csv(), encoding="utf-8")
    if config.certificate is not None:
        config.certificate.write_text(dumps_edge_list(graph, result.subgraph), encoding="utf-8")
    return {
        "n": graph.n,
        "m": graph.m,
        "iterations": result.iterations,
        "agony": result.agony,
        "eulerian_edges": result.eulerian_edges,
        "elapsed_ms": elapsed_ms,
        "ranks": None if config.out is not None else format_ranks(graph, result.ranks),
    }


def _summary(row: dict) -> str:
    return " ".join(f"{k}={row[k]}" for k in ("n", "m", "iterations", "agony", "eulerian_edges", "elapsed_ms"))


def cmd_compute(config: RunConfig) -> int:
    try:
        row = _run_one(config)
    except (EdgeListParseError, UnicodeDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    if row["ranks"] is not None:
        sys.stdout.write(row["ranks"])
        print(_summary(row), file=sys.stderr)
    else:
        print(_summary(row))
    return EXIT_OK


def cmd_verify(graph_path: Path, ranks_path: Path, certificate: Optional[Path] = None, dedupe: bool = False) -> int:
    try:
        graph = read_edge_list(graph_path, dedupe=dedupe)
        with open(ranks_path, encoding="utf-8") as fh:
            labelled = parse_ranks(fh)
        cert_pairs = None
        if certificate is not None:
            with open(certificate, encoding="utf-8") as fh:
                cert_pairs = list(parse_edge_lines(fh))
    except (EdgeListParseError, ValueError) as exc:  # includes UnicodeDecodeError
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO

    missing = [label for label in graph.labels if label not in labelled]
    if missing:
        print(f"rank file misses {len(missing)} vertices, e.g. {missing[0]!r}", file=sys.stderr)
        return EXIT_PARSE
    agony = graph_agony(graph, graph.ranks_from_labels(labelled))
    if cert_pairs is None:
        print(f"agony {agony}")
        return EXIT_OK

    available = Counter((graph.labels[u], graph.labels[v]) for u, v in graph.edges())
    used = Counter(cert_pairs)
    for pair, count in used.items():
        if available[pair] < count:
            print(f"certificate edge {pair[0]} -> {pair[1]} is not in the graph", file=sys.stderr)
            return EXIT_VERIFY
    balance: Counter = Counter()
    for a, b in cert_pairs:
        balance[a] += 1
        balance[b] -= 1
    unbalanced = sorted(k for k, d in balance.items() if d)
    if unbalanced:
        print(f"certificate is not eulerian: {len(unbalanced)} unbalanced vertices, e.g. {unbalanced[0]!r}",
              file=sys.stderr)
        return EXIT_VERIFY
    size = len(cert_pairs)
    if size > agony:
        print(f"certificate {size} exceeds agony {agony}: duality violated", file=sys.stderr)
        return EXIT_VERIFY
    if size == agony:
        print(f"optimal: agony {agony} == certificate {size}")
    else:
        ratio = approximation_ratio_bound(agony, size) if size else None
        shown = f"{ratio.numerator}/{ratio.denominator}" if ratio is not None else "unbounded"
        print(f"bound: agony {agony} ≥ certificate {size}, ratio {shown}")
    return EXIT_OK


def _bench_job(args: tuple[Path, str, RunConfig]) -> tuple[str, str, Optional[dict], Optional[str], int]:
    path, algorithm, base = args
    trace = None
    if base.trace is not None:
        trace = base.trace / f"{path.stem}.{algorithm}.csv"
    config = RunConfig(
        input=path, algorithm=algorithm, epsilon=base.epsilon, speedup=base.speedup,
        dedupe=base.dedupe, trace=trace, check=base.check,
    )
    try:
        return str(path), algorithm, _run_one(config), None, EXIT_OK
    except (EdgeListParseError, UnicodeDecodeError) as exc:
        return str(path), algorithm, None, f"parse error: {exc}", EXIT_PARSE
    except OSError as exc:
        return str(path), algorithm, None, f"I/O error: {exc}", EXIT_IO


def cmd_bench(inputs: Sequence[Path], algorithms: Sequence[str], base: RunConfig, jobs: int = 1) -> int:
    if not inputs:
        print("bench: no input files given", file=sys.stderr)
        return EXIT_USAGE
    if base.trace is not None:
        base.trace.mkdir(parents=True, exist_ok=True)
    tasks = [(Path(p), alg, base) for p in inputs for alg in algorithms]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_bench_job, tasks))
    else:
        results = [_bench_job(task) for task in tasks]

    status = EXIT_OK
    print("dataset\talgorithm\tn\tm\titerations\tagony\teulerian_edges\telapsed_ms")
    for name, algorithm, row, error, code in results:
        if row is None:
            print(f"{name} [{algorithm}]: {error}", file=sys.stderr)
            status = status or code
            continue
        print(f"{name}\t{algorithm}\t{row['n']}\t{row['m']}\t{row['iterations']}\t{row['agony']}"
              f"\t{row['eulerian_edges']}\t{row['elapsed_ms']}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="agony", description="Minimum-agony hierarchies of directed graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def solver_flags(p, single=True):
        if single:
            p.add_argument("--algorithm", choices=ALGORITHMS, default="relief")
        p.add_argument("--epsilon", type=_fraction, default=Fraction(0),
                       help="stop once agony/|E(H)| <= 1 + EPSILON (0 = exact)")
        p.add_argument("--no-speedup", dest="speedup", action="store_false")
        p.add_argument("--dedupe", action="store_true", help="collapse parallel edges")
        p.add_argument("--check", action="store_true", help="audit solver state after every step (slow)")
        p.add_argument("--seed", type=int, default=None, help=argparse.SUPPRESS)

    p = sub.add_parser("compute", help="compute an optimal rank")
    p.add_argument("input", type=Path)
    solver_flags(p)
    p.add_argument("--out", type=Path, help="rank TSV (default: stdout)")
    p.add_argument("--trace", type=Path, help="per-iteration trace CSV")
    p.add_argument("--certificate", type=Path, help="write the eulerian subgraph as an edge list")

    p = sub.add_parser("verify", help="check a rank and optional eulerian certificate")
    p.add_argument("graph", type=Path)
    p.add_argument("ranks", type=Path)
    p.add_argument("--certificate", type=Path)
    p.add_argument("--dedupe", action="store_true")

    p = sub.add_parser("bench", help="run several datasets and tabulate")
    p.add_argument("inputs", nargs="*", type=Path)
    solver_flags(p, single=False)
    p.add_argument("--algorithm", dest="algorithms", action="append", choices=ALGORITHMS,
                   help="repeatable; default relief")
    p.add_argument("--trace", type=Path, help="directory for per-dataset trace CSVs")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "compute":
        config = RunConfig(
            input=args.input, algorithm=args.algorithm, epsilon=args.epsilon, speedup=args.speedup,
            dedupe=args.dedupe, out=args.out, trace=args.trace, certificate=args.certificate,
            check=args.check, seed=args.seed,
        )
        return cmd_compute(config)
    if args.command == "verify":
        return cmd_verify(args.graph, args.ranks, args.certificate, args.dedupe)
    base = RunConfig(input=Path(os.devnull), epsilon=args.epsilon, speedup=args.speedup,
                     dedupe=args.dedupe, trace=args.trace, check=args.check)
    return cmd_bench(args.inputs, args.algorithms or ["relief"], base, jobs=args.jobs)


if __name__ == "__main__":
    sys.exit(main())
