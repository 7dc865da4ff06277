"""Per-vertex butterfly counting, plus a dense quadrangle-enumeration oracle.

The fast path walks wedges from every start vertex on both sides, pruning by
the global degree rank; per-worker aggregation arrays are private and merged
by summation. The oracle builds the full biadjacency matrix and counts shared
neighbors per vertex pair; it shares no traversal code with the fast path and
exists to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._parallel import map_chunks, split_chunks
from .bigraph import BipartiteGraph, PeelableView, wedge_counts
from .errors import CountOverflowError
from .stats import PeelStats

I64 = np.int64

# Counts above this cannot be trusted not to wrap in 64-bit intermediates.
OVERFLOW_LIMIT = 1 << 62


@dataclass
class SupportVector:
    """Butterfly counts for every vertex, split by side.

    Each butterfly has exactly two vertices on each side, so the two side
    sums are equal (both are twice the total butterfly count).
    """

    u: np.ndarray
    v: np.ndarray

    @property
    def total_butterflies(self) -> int:
        return int(self.u.sum()) // 2


def count_per_vertex(
    g: BipartiteGraph,
    workers: int = 1,
    stats: PeelStats | None = None,
    phase: str = "count",
    overflow_limit: int = OVERFLOW_LIMIT,
) -> SupportVector:
    """Count butterflies containing each vertex of ``g``.

    Wedge traversal is recorded into ``stats`` under ``phase`` when given.
    Raises CountOverflowError if any count exceeds ``overflow_limit``.
    """
    counts_u = np.zeros(g.u_count, dtype=I64)
    counts_v = np.zeros(g.v_count, dtype=I64)
    wedges = 0
    for start_side in ("u", "v"):
        if start_side == "u":
            a = (g.u_offsets, g.u_neighbors, g.u_rank)
            b = (g.v_offsets, g.v_neighbors, g.v_rank)
            acc_a, acc_b = counts_u, counts_v
            n_a = g.u_count
        else:
            a = (g.v_offsets, g.v_neighbors, g.v_rank)
            b = (g.u_offsets, g.u_neighbors, g.u_rank)
            acc_a, acc_b = counts_v, counts_u
            n_a = g.v_count
        if n_a == 0:
            continue
        cap = int(wedge_counts(g, start_side).w.max()) + 1
        starts = np.arange(n_a, dtype=I64)
        chunks = split_chunks(starts, workers)

        def run(chunk, a=a, b=b, cap=cap, n_a=n_a, n_b=acc_b.shape[0]):
            ca = np.zeros(n_a, dtype=I64)
            cb = np.zeros(n_b, dtype=I64)
            w = _kernels.count_side(a[0], a[1], b[0], b[1], a[2], b[2], chunk, ca, cb, cap)
            return ca, cb, w

        for ca, cb, w in map_chunks(run, chunks, workers):
            acc_a += ca
            acc_b += cb
            wedges += int(w)
    if stats is not None:
        stats.add_wedges(phase, wedges)
    if (counts_u.size and int(counts_u.max()) > overflow_limit) or (
        counts_v.size and int(counts_v.max()) > overflow_limit
    ):
        raise CountOverflowError("butterfly count exceeds the safe integer range")
    return SupportVector(u=counts_u, v=counts_v)


def _biadjacency(g: BipartiteGraph) -> np.ndarray:
    a = np.zeros((g.u_count, g.v_count), dtype=I64)
    if g.edge_count:
        src = np.repeat(np.arange(g.u_count, dtype=I64), np.diff(g.u_offsets))
        a[src, g.u_neighbors] = 1
    return a


def _pairwise_butterflies(a: np.ndarray) -> np.ndarray:
    """Per-row butterfly counts from a 0/1 biadjacency matrix."""
    if a.shape[0] == 0:
        return np.zeros(0, dtype=I64)
    common = a @ a.T
    np.fill_diagonal(common, 0)
    per_pair = common * (common - 1) // 2
    return per_pair.sum(axis=1)


def count_naive(g: BipartiteGraph) -> SupportVector:
    """Dense oracle: enumerate shared neighbors for every same-side pair.

    Only meant for small graphs; the work is quadratic in each side.
    """
    if g.u_count * g.v_count > 16_000_000:
        raise ValueError("graph too large for the dense counting oracle")
    a = _biadjacency(g)
    return SupportVector(u=_pairwise_butterflies(a), v=_pairwise_butterflies(a.T))


def shared_butterflies(view: PeelableView, u1: int, u2: int) -> int:
    """Butterflies shared by two live U vertices: C(c,2) over c live common neighbors."""
    if u1 == u2:
        raise ValueError("vertices must be distinct")
    n1 = view.u_neighbors[view.u_offsets[u1] : view.u_offsets[u1 + 1]]
    n2 = view.u_neighbors[view.u_offsets[u2] : view.u_offsets[u2 + 1]]
    c = np.intersect1d(n1, n2, assume_unique=True).size
    return c * (c - 1) // 2
