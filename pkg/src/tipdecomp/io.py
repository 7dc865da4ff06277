"""Edge-list ingestion and result/stats writing.

The edge-list dialect is the usual two-column whitespace format: lines
starting with '%' or '#' are comments, blank lines are skipped, every other
line is exactly two non-negative integers. Tips are written one vertex per
line, tab-separated, sorted by original ID, so outputs diff cleanly across
configurations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .cd import RangePartition
from .errors import ParseError
from .peel import TipResult
from .stats import PeelStats


@dataclass
class EdgeListDocument:
    edges: list[tuple[int, int]]
    comment_lines: int
    blank_lines: int


def _is_count(token: str) -> bool:
    return token.isascii() and token.isdigit()


def parse_edge_list(stream) -> EdgeListDocument:
    """Parse a two-column edge list from an iterable of text lines.

    Raises ParseError with the 1-based line number for any line that is not a
    comment, blank, or exactly two non-negative integers.
    """
    edges: list[tuple[int, int]] = []
    comments = 0
    blanks = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            blanks += 1
            continue
        if line[0] in "%#":
            comments += 1
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two fields, found {len(parts)}")
        if not (_is_count(parts[0]) and _is_count(parts[1])):
            raise ParseError(lineno, f"expected two non-negative integers, got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return EdgeListDocument(edges=edges, comment_lines=comments, blank_lines=blanks)


def write_tips(result: TipResult, original_ids: np.ndarray, sink) -> None:
    """Write "original_id<TAB>tip<LF>" lines sorted ascending by original ID.

    ``original_ids`` maps the result's internal labels to input IDs. Write
    failures surface as the sink's OSError.
    """
    order = np.argsort(original_ids, kind="stable")
    for i in order:
        sink.write(f"{int(original_ids[i])}\t{int(result.theta[i])}\n")


def write_edge_list(edges, sink) -> None:
    """Write (u, v) pairs as two-column lines, sorted."""
    for u, v in sorted((int(a), int(b)) for a, b in edges):
        sink.write(f"{u} {v}\n")


def stats_document(stats: PeelStats, part: RangePartition | None = None) -> dict:
    """Machine-readable run summary with a stable key order."""
    return {
        "wedges_traversed": int(stats.wedges_traversed),
        "sync_rounds": int(stats.sync_rounds),
        "recount_invocations": int(stats.recount_invocations),
        "phase_times_ms": {
            "count": round(stats.phase_times.get("count", 0.0) * 1000.0, 3),
            "cd": round(stats.phase_times.get("cd", 0.0) * 1000.0, 3),
            "fd": round(stats.phase_times.get("fd", 0.0) * 1000.0, 3),
        },
        "subsets": {
            "count": int(part.subset_count) if part is not None else 0,
            "wedge_estimates": [int(x) for x in part.subset_wedges] if part is not None else [],
        },
    }


def write_stats(stats: PeelStats, part: RangePartition | None, sink) -> None:
    json.dump(stats_document(stats, part), sink, indent=2)
    sink.write("\n")
