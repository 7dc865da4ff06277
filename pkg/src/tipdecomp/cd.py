"""Coarse decomposition: partition the peeled side into subsets whose tip
numbers fall in disjoint ranges, by repeatedly peeling a whole support range
per iteration.

Range upper bounds are chosen so each subset covers roughly the same wedge
mass, with a two-way adaptive target: the per-subset target is recomputed
from what is left, and scaled down when the previous subset overshot its
target. The hybrid update option replaces a peel iteration by recounting the
remaining live graph whenever recounting is the cheaper of the two.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bigraph import (
    BipartiteGraph,
    PeelableView,
    induce_subgraph,
    maybe_compact,
    oriented,
    wedge_counts,
)
from .butterfly import count_per_vertex
from .errors import InvalidConfigError, InvalidPartitionError
from .peel import batch_update
from .stats import PeelStats

I64 = np.int64

DEFAULT_PARTITIONS = 150


@dataclass
class RangePartition:
    """Output of the coarse phase.

    ``boundaries`` has one more entry than ``subsets``; subset i owns tip
    numbers in [boundaries[i], boundaries[i+1]). ``support_init`` holds, for
    every vertex, its support snapshot taken right before its own subset
    started peeling. ``subset_wedges`` are full-graph wedge sums per subset,
    used by the fine phase as workload estimates.
    """

    boundaries: np.ndarray
    subsets: list[np.ndarray]
    support_init: np.ndarray
    subset_wedges: np.ndarray

    @property
    def subset_count(self) -> int:
        return len(self.subsets)

    def subset_of(self) -> np.ndarray:
        """Label -> subset index map."""
        out = np.full(self.support_init.shape[0], -1, dtype=I64)
        for i, members in enumerate(self.subsets):
            out[members] = i
        return out

    def validate_for(self, g: BipartiteGraph) -> None:
        n_u = g.u_count
        if self.support_init.shape[0] != n_u:
            raise InvalidPartitionError("support vector length does not match the graph")
        if len(self.boundaries) != len(self.subsets) + 1:
            raise InvalidPartitionError("boundary/subset count mismatch")
        if np.any(np.diff(self.boundaries) <= 0):
            raise InvalidPartitionError("range boundaries must be strictly ascending")
        if self.subsets:
            allv = np.concatenate(self.subsets)
        else:
            allv = np.zeros(0, dtype=I64)
        if allv.size != n_u or np.unique(allv).size != n_u:
            raise InvalidPartitionError("subsets must partition the peeled side")
        if allv.size and (allv.min() < 0 or allv.max() >= n_u):
            raise InvalidPartitionError("subset vertex outside the graph")


def adaptive_target(remaining_wedges: int, remaining_subsets: int, prev_scale: float = 1.0) -> float:
    """Wedge target for the next subset: remaining average times the overshoot scale."""
    if remaining_subsets < 1:
        raise InvalidConfigError("remaining_subsets must be >= 1")
    return (remaining_wedges / remaining_subsets) * prev_scale


def find_hi(live_supports: np.ndarray, live_w: np.ndarray, tgt: float) -> int:
    """Smallest support value whose cumulative wedge mass reaches ``tgt``, plus one.

    Wedge weights are bucketed by current support and prefix-summed in
    ascending support order. If the total mass falls short, the maximum live
    support plus one is returned so the final range swallows everything.
    """
    if live_supports.size == 0:
        raise ValueError("need at least one live vertex")
    order = np.argsort(live_supports, kind="stable")
    s_sorted = live_supports[order]
    cum = np.cumsum(live_w[order], dtype=I64)
    pos = int(np.searchsorted(cum, tgt, side="left"))
    if pos >= cum.shape[0]:
        return int(s_sorted[-1]) + 1
    return int(s_sorted[pos]) + 1


def huc_costs(active: np.ndarray, view: PeelableView) -> tuple[int, int]:
    """(peel cost, recount cost) over the live graph.

    Peeling ``active`` costs its live wedge mass: sum over members of the live
    degrees of their neighbors. Recounting costs at most min(d_u, live d_v)
    summed over live edges.
    """
    g = view.base
    c_peel = int(_kernels.peel_cost(np.asarray(active, dtype=I64), g.u_offsets, g.u_neighbors, view.true_v_degree))
    c_rcnt = int(
        _kernels.recount_cost(g.u_offsets, g.u_neighbors, view.alive, g.u_degree, view.true_v_degree)
    )
    return c_peel, c_rcnt


def huc_decide(active: np.ndarray, view: PeelableView) -> str:
    """"recount" iff peeling strictly costs more than recounting; ties peel."""
    c_peel, c_rcnt = huc_costs(active, view)
    return "recount" if c_peel > c_rcnt else "peel"


def recount_supports(
    g0: BipartiteGraph,
    view: PeelableView,
    supports: np.ndarray,
    stats: PeelStats | None = None,
    phase: str = "cd",
    workers: int = 1,
) -> int:
    """Replace live supports with fresh butterfly counts of the live graph.

    Dead vertices keep their last stored value. Returns the wedges traversed
    by the recount.
    """
    live = np.flatnonzero(view.alive)
    if live.size == 0:
        return 0
    sub = induce_subgraph(g0, live)
    before = stats.wedges_traversed if stats is not None else 0
    counts = count_per_vertex(sub, workers=workers, stats=stats, phase=phase)
    supports[sub.u_original] = counts.u
    return (stats.wedges_traversed - before) if stats is not None else 0


def coarse_decompose(
    g: BipartiteGraph,
    side: str = "u",
    partitions: int = DEFAULT_PARTITIONS,
    huc: bool = True,
    dgm: bool = True,
    dgm_threshold: int | None = None,
    workers: int = 1,
) -> tuple[RangePartition, PeelStats]:
    """Partition the peeled side into subsets with disjoint tip-number ranges.

    Supports are initialized by counting; each subset snapshots the live
    supports, fixes its range upper bound, then peels every live vertex whose
    support falls inside the range until none remain, one synchronization
    round per iteration. Vertices left after ``partitions`` subsets are swept
    into one final subset.
    """
    if partitions < 1:
        raise InvalidConfigError("partitions must be >= 1")
    if workers < 1:
        raise InvalidConfigError("workers must be >= 1")
    g0 = oriented(g, side)
    stats = PeelStats()
    with stats.timing("count"):
        sv = count_per_vertex(g0, workers=workers, stats=stats, phase="count")
    supports = sv.u.copy()
    n_u = g0.u_count
    w = wedge_counts(g0, "u").w
    view = PeelableView(g0)
    threshold = dgm_threshold if dgm_threshold is not None else max(1, g0.edge_count)
    if threshold <= 0:
        raise InvalidConfigError("dgm_threshold must be positive")

    support_init = np.zeros(n_u, dtype=I64)
    boundaries = [0]
    subsets: list[np.ndarray] = []
    subset_wedges: list[int] = []
    remaining = int(w.sum())
    scale = 1.0
    live_count = n_u

    with stats.timing("cd"):
        i = 0
        while live_count > 0:
            i += 1
            lo = boundaries[-1]
            live = np.flatnonzero(view.alive)
            support_init[live] = supports[live]
            if i <= partitions:
                tgt = adaptive_target(remaining, partitions - i + 1, scale)
                hi = find_hi(supports[live], w[live], tgt)
            else:
                tgt = None
                hi = int(supports[live].max()) + 1
            active = live[supports[live] < hi]
            members: list[np.ndarray] = []
            while active.size:
                stats.sync_rounds += 1
                # Decide before killing: the cost model uses the live degrees
                # as they stand when the set is still part of the live graph.
                decision = huc_decide(active, view) if huc else "peel"
                view.kill(active)
                live_count -= active.size
                members.append(active)
                if decision == "recount":
                    wedges_iter = recount_supports(g0, view, supports, stats, "cd", workers)
                    stats.recount_invocations += 1
                    cand = np.flatnonzero(view.alive)
                else:
                    cand, wedges_iter = batch_update(active, lo, supports, view, workers=workers)
                    stats.add_wedges("cd", wedges_iter)
                active = cand[supports[cand] < hi]
                if dgm:
                    view.wedges_since_compaction += wedges_iter
                    maybe_compact(view, threshold)
            merged = np.sort(np.concatenate(members))
            covered = int(w[merged].sum())
            subsets.append(merged)
            boundaries.append(hi)
            subset_wedges.append(covered)
            remaining -= covered
            if tgt is not None and covered > 0:
                scale = min(1.0, tgt / covered)

    part = RangePartition(
        boundaries=np.asarray(boundaries, dtype=I64),
        subsets=subsets,
        support_init=support_init,
        subset_wedges=np.asarray(subset_wedges, dtype=I64),
    )
    return part, stats
