"""Fine decomposition: exact tip numbers by sequentially peeling each coarse
subset's induced subgraph, with subsets processed concurrently.

Workload-aware scheduling: subsets enter a shared task queue sorted by
descending wedge estimate, and idle workers pop from the front. One worker
owns one subset end to end; the only cross-worker state is the queue and the
disjoint per-vertex result slots, so outputs are independent of scheduling.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bigraph import BipartiteGraph, PeelableView, induce_subgraph, maybe_compact, oriented
from .butterfly import count_per_vertex
from .cd import DEFAULT_PARTITIONS, RangePartition, coarse_decompose
from .errors import InvalidConfigError
from .peel import MinSupportQueue, TipResult, initial_heap
from .stats import PeelStats

I64 = np.int64


@dataclass
class SubsetTask:
    subset_id: int
    members: np.ndarray
    wedge_estimate: int
    theta_lo: int
    theta_hi: int


def make_tasks(part: RangePartition) -> list[SubsetTask]:
    """One task per subset, sorted by descending wedge estimate (stable by id)."""
    tasks = [
        SubsetTask(
            subset_id=i,
            members=part.subsets[i],
            wedge_estimate=int(part.subset_wedges[i]),
            theta_lo=int(part.boundaries[i]),
            theta_hi=int(part.boundaries[i + 1]),
        )
        for i in range(part.subset_count)
    ]
    tasks.sort(key=lambda t: (-t.wedge_estimate, t.subset_id))
    return tasks


class _TaskQueue:
    """Shared FIFO with an atomic pop that records (task, worker, pop order)."""

    def __init__(self, tasks: list[SubsetTask]):
        self._q = deque(tasks)
        self._lock = threading.Lock()
        self._ctr = 0
        self.trace: list[tuple[int, int, int]] = []

    def pop(self, worker_id: int) -> SubsetTask | None:
        with self._lock:
            if not self._q:
                return None
            task = self._q.popleft()
            self.trace.append((task.subset_id, worker_id, self._ctr))
            self._ctr += 1
            return task


def schedule(tasks: list[SubsetTask], workers: int = 1) -> list[tuple[int, int, int]]:
    """Run the pop protocol over ``tasks`` and return its trace.

    The pop order is always the queue order; which worker takes which task is
    timing-dependent for workers > 1.
    """
    queue = _TaskQueue(sorted(tasks, key=lambda t: (-t.wedge_estimate, t.subset_id)))
    if workers <= 1:
        while queue.pop(0) is not None:
            pass
    else:
        def drain(wid):
            while queue.pop(wid) is not None:
                pass

        threads = [threading.Thread(target=drain, args=(wid,)) for wid in range(workers)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
    return queue.trace


def fd_huc_recount(
    view: PeelableView,
    external: np.ndarray,
    stats: PeelStats | None = None,
    phase: str = "fd",
) -> np.ndarray:
    """Fresh supports for a subset's live subgraph: live-count plus external count.

    ``external`` is the per-vertex butterfly count outside the subgraph, fixed
    at subset start. Entries of dead vertices come back as just ``external``
    (their live count is zero).
    """
    out = external.astype(I64).copy()
    live = np.flatnonzero(view.alive)
    if live.size == 0:
        return out
    sub = induce_subgraph(view.base, live)
    counts = count_per_vertex(sub, stats=stats, phase=phase)
    out[sub.u_original] += counts.u
    return out


def _peel_subset(
    g0: BipartiteGraph,
    part: RangePartition,
    task: SubsetTask,
    huc: bool,
    dgm: bool,
    dgm_threshold: int | None,
    stats: PeelStats,
) -> tuple[np.ndarray, np.ndarray, int]:
    """Sequential bottom-up peel of one induced subgraph.

    Returns (parent labels, their tip numbers, wedges actually traversed).
    """
    members = task.members
    if members.size == 0:
        return members, members, 0
    wedges_before = stats.phase_wedges.get("fd", 0)
    sub = induce_subgraph(g0, members)
    n_s = sub.u_count
    supports = part.support_init[sub.u_original].copy()
    theta = np.zeros(n_s, dtype=I64)
    view = PeelableView(sub)
    threshold = dgm_threshold if dgm_threshold is not None else max(1, sub.edge_count)

    wdg = np.zeros(n_s, dtype=I64)
    nze = np.empty(n_s, dtype=I64)

    if not huc:
        # Hot path: the whole extract-min/update loop, including periodic
        # compaction, runs as one compiled call.
        heap_s, heap_l, heap_n = initial_heap(supports)
        wedges = _kernels.peel_subgraph(
            sub.u_offsets,
            sub.u_neighbors,
            sub.v_offsets,
            sub.v_neighbors,
            view.alive,
            supports,
            theta,
            heap_s,
            heap_l,
            heap_n,
            wdg,
            nze,
            threshold if dgm else 0,
        )
        stats.add_wedges("fd", int(wedges))
        assert np.all((task.theta_lo <= theta) & (theta < task.theta_hi))
        return sub.u_original, theta, int(wedges)

    pristine = count_per_vertex(sub, stats=stats, phase="fd")
    external = supports - pristine.u  # butterflies shared with higher subsets

    touched = np.empty(n_s, dtype=I64)
    queue = MinSupportQueue(supports)
    single = np.empty(1, dtype=I64)
    while True:
        item = queue.pop_min(supports, view.alive)
        if item is None:
            break
        u, s = item
        assert task.theta_lo <= s < task.theta_hi
        theta[u] = s
        single[0] = u
        # Costs are evaluated while u is still live, like the coarse phase.
        c_peel = int(_kernels.peel_cost(single, sub.u_offsets, sub.u_neighbors, view.true_v_degree))
        c_rcnt = int(
            _kernels.recount_cost(sub.u_offsets, sub.u_neighbors, view.alive, sub.u_degree, view.true_v_degree)
        )
        recount = c_peel > c_rcnt
        view.kill(single)
        if recount:
            before = stats.wedges_traversed
            fresh = fd_huc_recount(view, external, stats=stats, phase="fd")
            stats.recount_invocations += 1
            # Floor at the last assigned value; exact counts below it belong
            # to vertices that must still be extracted at this level.
            live = np.flatnonzero(view.alive)
            if live.size:
                supports[live] = np.maximum(s, fresh[live])
                queue = MinSupportQueue(supports, view.alive)
            wedges_iter = stats.wedges_traversed - before
            if dgm:
                view.wedges_since_compaction += wedges_iter
                maybe_compact(view, threshold)
            continue
        n_t, wedges = _kernels.peel_single(
            u,
            view.u_offsets,
            view.u_neighbors,
            view.v_offsets,
            view.v_neighbors,
            view.alive,
            supports,
            s,
            wdg,
            nze,
            touched,
        )
        stats.add_wedges("fd", int(wedges))
        for i in range(n_t):
            queue.push(touched[i], supports[touched[i]])
        if dgm:
            view.wedges_since_compaction += int(wedges)
            maybe_compact(view, threshold)
    return sub.u_original, theta, stats.phase_wedges.get("fd", 0) - wedges_before


def fine_decompose(
    g: BipartiteGraph,
    part: RangePartition,
    side: str = "u",
    huc: bool = False,
    dgm: bool = True,
    dgm_threshold: int | None = None,
    workers: int = 1,
) -> tuple[TipResult, PeelStats]:
    """Exact tip numbers from a coarse partition.

    Every subset is induced on (its members, all of V), its supports start
    from the snapshot taken by the coarse phase, and it is peeled bottom-up in
    isolation. No synchronization rounds are incurred; workers join once at
    the end.
    """
    if workers < 1:
        raise InvalidConfigError("workers must be >= 1")
    if dgm_threshold is not None and dgm_threshold <= 0:
        raise InvalidConfigError("dgm_threshold must be positive")
    g0 = oriented(g, side)
    part.validate_for(g0)
    stats = PeelStats()
    theta = np.zeros(g0.u_count, dtype=I64)
    tasks = make_tasks(part)
    queue = _TaskQueue(tasks)
    result_lock = threading.Lock()
    actual_wedges: dict[int, int] = {}

    def drain(worker_id: int, local: PeelStats) -> None:
        while True:
            task = queue.pop(worker_id)
            if task is None:
                return
            labels, values, wedges = _peel_subset(g0, part, task, huc, dgm, dgm_threshold, local)
            with result_lock:
                theta[labels] = values
                actual_wedges[task.subset_id] = wedges

    with stats.timing("fd"):
        if workers == 1 or len(tasks) <= 1:
            drain(0, stats)
        else:
            locals_ = [PeelStats() for _ in range(workers)]
            threads = [
                threading.Thread(target=drain, args=(wid, locals_[wid])) for wid in range(workers)
            ]
            for t in threads:
                t.start()
            for t in threads:
                t.join()
            for loc in locals_:
                stats.merge(loc)
    # Observability hooks, not part of PeelStats proper: the pop trace and the
    # wedges each subset actually cost (the scheduling estimates are proxies).
    stats.schedule_trace = list(queue.trace)
    stats.subset_actual_wedges = actual_wedges
    return TipResult(theta=theta, side=side), stats


def tip_decompose_receipt(
    g: BipartiteGraph,
    side: str = "u",
    partitions: int = DEFAULT_PARTITIONS,
    huc: bool = True,
    dgm: bool = True,
    dgm_threshold: int | None = None,
    workers: int = 1,
    fd_huc: bool = False,
) -> tuple[TipResult, PeelStats, RangePartition]:
    """Full two-phase decomposition: coarse range partition, then fine peeling.

    ``huc`` controls the hybrid update in the coarse phase; the fine phase has
    its own switch (off by default, where it rarely pays).
    """
    part, stats = coarse_decompose(
        g,
        side=side,
        partitions=partitions,
        huc=huc,
        dgm=dgm,
        dgm_threshold=dgm_threshold,
        workers=workers,
    )
    result, fd_stats = fine_decompose(
        g,
        part,
        side=side,
        huc=fd_huc,
        dgm=dgm,
        dgm_threshold=dgm_threshold,
        workers=workers,
    )
    stats.merge(fd_stats)
    return result, stats, part
