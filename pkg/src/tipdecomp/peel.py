"""Peeling: the shared update kernel, sequential bottom-up peeling, the batch
parallel baseline, and a recount-from-scratch oracle.

All tip values and supports are 64-bit; real graphs push both past 32 bits.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._parallel import map_chunks, split_chunks
from .bigraph import BipartiteGraph, PeelableView, oriented
from .butterfly import _biadjacency, _pairwise_butterflies, count_per_vertex
from .stats import PeelStats

I64 = np.int64


@dataclass
class TipResult:
    """Final tip number per peeled-side vertex (indexed by internal label)."""

    theta: np.ndarray
    side: str = "u"

    @property
    def theta_max(self) -> int:
        return int(self.theta.max()) if self.theta.size else 0


class MinSupportQueue:
    """Binary min-heap over (support, label) with lazy decrease-key.

    Updated vertices are re-pushed; stale entries are skipped on pop by
    checking against the live support array. Ties break toward the smaller
    label via tuple ordering.
    """

    def __init__(self, supports: np.ndarray, alive: np.ndarray | None = None):
        if alive is None:
            self._heap = [(int(s), i) for i, s in enumerate(supports)]
        else:
            self._heap = [(int(supports[i]), int(i)) for i in np.flatnonzero(alive)]
        heapq.heapify(self._heap)

    def push(self, label: int, support: int) -> None:
        heapq.heappush(self._heap, (int(support), int(label)))

    def pop_min(self, supports: np.ndarray, alive: np.ndarray):
        """Return (label, support) for the minimum live entry, or None when drained."""
        heap = self._heap
        while heap:
            s, lbl = heapq.heappop(heap)
            if alive[lbl] and supports[lbl] == s:
                return lbl, s
        return None


def update(
    u: int,
    theta_floor: int,
    supports: np.ndarray,
    view: PeelableView,
    stats: PeelStats | None = None,
    phase: str = "peel",
) -> np.ndarray:
    """Peel ``u``: decrement 2-hop neighbors by shared butterflies, floored.

    Every live vertex sharing c >= 2 live common neighbors with ``u`` loses
    C(c,2) support, saturating at ``theta_floor``. Returns the labels whose
    support was updated. Wedges scanned are recorded into ``stats``.
    """
    n_u = view.base.u_count
    wdg = np.zeros(n_u, dtype=I64)
    nze = np.empty(n_u, dtype=I64)
    touched = np.empty(n_u, dtype=I64)
    n_t, wedges = _kernels.peel_single(
        u,
        view.u_offsets,
        view.u_neighbors,
        view.v_offsets,
        view.v_neighbors,
        view.alive,
        supports,
        theta_floor,
        wdg,
        nze,
        touched,
    )
    if stats is not None:
        stats.add_wedges(phase, int(wedges))
    return touched[:n_t].copy()


def batch_update(
    us: np.ndarray,
    theta_floor: int,
    supports: np.ndarray,
    view: PeelableView,
    workers: int = 1,
) -> tuple[np.ndarray, int]:
    """Peel a set of vertices concurrently with aggregate floored decrements.

    Each worker accumulates decrements into a private dense array; the merged
    sum is applied once, capped at ``theta_floor``. With a fixed floor this is
    arithmetically identical to any interleaving of per-vertex updates, so the
    result does not depend on the worker count. ``us`` must already be dead.
    Returns (touched labels, wedges scanned).
    """
    n_u = view.base.u_count
    chunks = split_chunks(np.asarray(us, dtype=I64), workers)

    def run(chunk):
        dec = np.zeros(n_u, dtype=I64)
        flag = np.zeros(n_u, dtype=bool)
        w = _kernels.peel_batch(
            chunk,
            view.u_offsets,
            view.u_neighbors,
            view.v_offsets,
            view.v_neighbors,
            view.alive,
            dec,
            flag,
        )
        return dec, flag, w

    dec_total = np.zeros(n_u, dtype=I64)
    flag_total = np.zeros(n_u, dtype=bool)
    wedges = 0
    for dec, flag, w in map_chunks(run, chunks, workers):
        dec_total += dec
        flag_total |= flag
        wedges += int(w)
    touched = np.flatnonzero(flag_total)
    if touched.size:
        supports[touched] = np.maximum(theta_floor, supports[touched] - dec_total[touched])
    return touched, wedges


def initial_heap(supports: np.ndarray, alive: np.ndarray | None = None):
    """(heap values, heap labels, size) for the fused peel kernel.

    Arrays sorted ascending by (support, label) already satisfy the binary
    min-heap property.
    """
    if alive is None:
        labels = np.arange(supports.shape[0], dtype=I64)
        vals = supports
    else:
        labels = np.flatnonzero(alive).astype(I64)
        vals = supports[labels]
    order = np.lexsort((labels, vals))
    return np.ascontiguousarray(vals[order]), np.ascontiguousarray(labels[order]), int(labels.shape[0])


def tip_decompose_bup(g: BipartiteGraph, side: str = "u") -> tuple[TipResult, PeelStats]:
    """Sequential bottom-up peeling: always extract a minimum-support vertex."""
    g0 = oriented(g, side)
    stats = PeelStats()
    with stats.timing("count"):
        sv = count_per_vertex(g0, stats=stats, phase="count")
    supports = sv.u.copy()
    n_u = g0.u_count
    theta = np.zeros(n_u, dtype=I64)
    view = PeelableView(g0)
    heap_s, heap_l, heap_n = initial_heap(supports)
    wdg = np.zeros(n_u, dtype=I64)
    nze = np.empty(n_u, dtype=I64)
    with stats.timing("bup"):
        wedges = _kernels.peel_subgraph(
            view.u_offsets,
            view.u_neighbors,
            view.v_offsets,
            view.v_neighbors,
            view.alive,
            supports,
            theta,
            heap_s,
            heap_l,
            heap_n,
            wdg,
            nze,
            0,
        )
        stats.add_wedges("bup", int(wedges))
    return TipResult(theta=theta, side=side), stats


def tip_oracle_recount(g: BipartiteGraph, side: str = "u") -> TipResult:
    """Independent oracle: recount butterflies from scratch after every deletion.

    Keeps a running floor k; each step recounts the live subgraph with the
    dense pairwise method, removes the minimum-count vertex (ties toward the
    smaller label), and assigns it max(k, count). Shares no traversal code
    with the peeling path.
    """
    g0 = oriented(g, side)
    a = _biadjacency(g0)
    n_u = g0.u_count
    alive = np.ones(n_u, dtype=bool)
    theta = np.zeros(n_u, dtype=I64)
    k = 0
    for _ in range(n_u):
        live = np.flatnonzero(alive)
        counts = _pairwise_butterflies(a[live])
        pick = int(np.argmin(counts))  # argmin takes the first, i.e. smallest label
        u = int(live[pick])
        k = max(k, int(counts[pick]))
        theta[u] = k
        alive[u] = False
    return TipResult(theta=theta, side=side)


def tip_decompose_parb(
    g: BipartiteGraph, side: str = "u", workers: int = 1
) -> tuple[TipResult, PeelStats]:
    """Batch-mode parallel baseline: peel all minimum-support vertices per round.

    Every round costs one synchronization; the assigned value is floored at
    the running maximum so it never decreases.
    """
    g0 = oriented(g, side)
    stats = PeelStats()
    with stats.timing("count"):
        sv = count_per_vertex(g0, workers=workers, stats=stats, phase="count")
    supports = sv.u.copy()
    n_u = g0.u_count
    theta = np.zeros(n_u, dtype=I64)
    view = PeelableView(g0)
    running = 0
    live_count = n_u
    with stats.timing("parb"):
        while live_count > 0:
            live = np.flatnonzero(view.alive)
            s_min = int(supports[live].min())
            batch = live[supports[live] == s_min]
            running = max(running, s_min)
            theta[batch] = running
            view.kill(batch)
            live_count -= batch.size
            _, wedges = batch_update(batch, running, supports, view, workers=workers)
            stats.add_wedges("parb", wedges)
            stats.sync_rounds += 1
    return TipResult(theta=theta, side=side), stats
