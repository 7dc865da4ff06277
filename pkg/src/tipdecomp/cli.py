"""Command-line driver: ingest an edge list, decompose, write tips and stats.

Exit codes: 0 success, 1 input/parse failure, 2 bad configuration,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import io as tio
from .bigraph import build_graph, oriented, wedge_counts
from .cd import DEFAULT_PARTITIONS
from .errors import EmptyGraphError, ParseError, TipDecompError
from .fd import tip_decompose_receipt
from .peel import tip_decompose_bup, tip_decompose_parb, tip_oracle_recount
from .stats import PeelStats

ALGORITHMS = ("receipt", "bup", "parb", "oracle")
SIDES = ("u", "v", "auto")
WORKERS_ENV = "TIPDECOMP_WORKERS"


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env is not None:
        try:
            n = int(env)
            if n >= 1:
                return n
        except ValueError:
            pass
    return os.cpu_count() or 1


@dataclass
class RunConfig:
    input_path: str
    algorithm: str = "receipt"
    side: str = "auto"
    partitions: int = DEFAULT_PARTITIONS
    workers: int = field(default_factory=default_workers)
    huc: bool = True
    dgm: bool = True
    dgm_threshold: int | None = None
    output_path: str | None = None
    stats_path: str | None = None
    verify: bool = False
    verify_warn_wedges: int = 1_000_000_000


def side_auto(g) -> str:
    """Pick the side with the larger total wedge count; ties go to U."""
    wu = wedge_counts(g, "u").total
    wv = wedge_counts(g, "v").total
    return "u" if wu >= wv else "v"


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def run(config: RunConfig) -> int:
    if config.algorithm not in ALGORITHMS:
        return _usage_error(f"unknown algorithm {config.algorithm!r}")
    if config.side not in SIDES:
        return _usage_error(f"unknown side {config.side!r}")
    if config.partitions < 1:
        return _usage_error("partitions must be >= 1")
    if config.workers < 1:
        return _usage_error("workers must be >= 1")
    if config.dgm_threshold is not None and config.dgm_threshold < 1:
        return _usage_error("dgm threshold must be >= 1")

    try:
        with open(config.input_path, "r", encoding="utf-8") as f:
            doc = tio.parse_edge_list(f)
        g = build_graph(doc.edges)
    except ParseError as exc:
        print(f"error: {config.input_path}: {exc}", file=sys.stderr)
        return 1
    except (OSError, EmptyGraphError, ValueError) as exc:
        print(f"error: {config.input_path}: {exc}", file=sys.stderr)
        return 1

    side = config.side if config.side != "auto" else side_auto(g)
    g0 = oriented(g, side)

    part = None
    if config.algorithm == "receipt":
        result, stats, part = tip_decompose_receipt(
            g0,
            partitions=config.partitions,
            huc=config.huc,
            dgm=config.dgm,
            dgm_threshold=config.dgm_threshold,
            workers=config.workers,
        )
    elif config.algorithm == "bup":
        result, stats = tip_decompose_bup(g0)
    elif config.algorithm == "parb":
        result, stats = tip_decompose_parb(g0, workers=config.workers)
    else:
        result = tip_oracle_recount(g0)
        stats = PeelStats()

    if config.verify:
        budget = wedge_counts(g0, "u").total
        if budget > config.verify_warn_wedges:
            print(
                f"warning: verification runs the sequential baseline over "
                f"~{budget} wedges; this may take a while",
                file=sys.stderr,
            )
        reference, _ = tip_decompose_bup(g0)
        if not np.array_equal(result.theta, reference.theta):
            bad = np.flatnonzero(result.theta != reference.theta)
            print(f"verification FAILED for {bad.size} vertices:", file=sys.stderr)
            for lbl in bad[:10]:
                print(
                    f"  vertex {int(g0.u_original[lbl])}: got {int(result.theta[lbl])}, "
                    f"expected {int(reference.theta[lbl])}",
                    file=sys.stderr,
                )
            return 3

    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as f:
            tio.write_tips(result, g0.u_original, f)
    else:
        tio.write_tips(result, g0.u_original, sys.stdout)

    if config.stats_path:
        with open(config.stats_path, "w", encoding="utf-8", newline="\n") as f:
            tio.write_stats(stats, part, f)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tipdecomp",
        description="Tip decomposition of one side of a bipartite graph.",
    )
    parser.add_argument("input", help="edge-list file (two columns; %% or # comments)")
    parser.add_argument("--algorithm", "-a", choices=ALGORITHMS, default="receipt")
    parser.add_argument(
        "--side",
        choices=SIDES,
        default="auto",
        help="vertex side to decompose; auto picks the side with more wedges",
    )
    parser.add_argument("--partitions", "-p", type=int, default=DEFAULT_PARTITIONS)
    parser.add_argument(
        "--workers",
        "-t",
        type=int,
        default=None,
        help=f"worker threads (default: ${WORKERS_ENV} or the CPU count)",
    )
    parser.add_argument("--huc", action=argparse.BooleanOptionalAction, default=True,
                        help="hybrid update: recount instead of peel when cheaper")
    parser.add_argument("--dgm", action=argparse.BooleanOptionalAction, default=True,
                        help="periodic adjacency compaction")
    parser.add_argument("--dgm-threshold", type=int, default=None,
                        help="wedges traversed between compactions (default: edge count)")
    parser.add_argument("--output", "-o", default=None, help="tips file (default: stdout)")
    parser.add_argument("--stats", default=None, help="write run statistics (JSON) here")
    parser.add_argument("--verify", action="store_true",
                        help="cross-check against sequential bottom-up peeling")
    parser.add_argument("--verify-warn-wedges", type=int, default=1_000_000_000)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        input_path=args.input,
        algorithm=args.algorithm,
        side=args.side,
        partitions=args.partitions,
        workers=args.workers if args.workers is not None else default_workers(),
        huc=args.huc,
        dgm=args.dgm,
        dgm_threshold=args.dgm_threshold,
        output_path=args.output,
        stats_path=args.stats,
        verify=args.verify,
        verify_warn_wedges=args.verify_warn_wedges,
    )
    try:
        return run(config)
    except TipDecompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
