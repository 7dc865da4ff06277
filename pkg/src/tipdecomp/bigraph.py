"""Bipartite graph container and the mutable peeling view over it.

Both vertex sides get dense 0-based internal labels. Labels follow one global
priority order over the union of the two sides: vertices sorted by descending
degree, ties broken by smaller original ID, then by side. The counting
traversal prunes neighbor scans with rank comparisons, which is only sound
because every adjacency list is stored in ascending label order and per-side
label order agrees with the global rank order.

Original IDs are arbitrary non-negative integers and the two sides are
independent namespaces: the same number may appear on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyGraphError

I64 = np.int64


@dataclass
class WedgeCounts:
    """Per-vertex wedge counts w[x] = sum of neighbor degrees, over the full graph."""

    w: np.ndarray

    @property
    def total(self) -> int:
        return int(self.w.sum())


@dataclass
class BipartiteGraph:
    """Immutable compressed adjacency for both sides of a bipartite graph.

    ``u_offsets``/``u_neighbors`` hold, for each U label, its V neighbors in
    ascending V-label order (and symmetrically for ``v_*``). ``u_rank`` maps a
    U label to its global priority rank (0 = highest degree); rank arrays are
    a permutation of 0..(u_count+v_count-1) across both sides.
    ``u_original`` maps internal labels back to input IDs.
    """

    u_count: int
    v_count: int
    edge_count: int
    u_offsets: np.ndarray
    u_neighbors: np.ndarray
    v_offsets: np.ndarray
    v_neighbors: np.ndarray
    u_degree: np.ndarray
    v_degree: np.ndarray
    u_rank: np.ndarray
    v_rank: np.ndarray
    u_original: np.ndarray
    v_original: np.ndarray

    def u_label_of(self, original_ids) -> np.ndarray:
        """Map original U-side IDs to internal labels."""
        order = np.argsort(self.u_original)
        pos = np.searchsorted(self.u_original[order], original_ids)
        return order[pos]

    def v_label_of(self, original_ids) -> np.ndarray:
        order = np.argsort(self.v_original)
        pos = np.searchsorted(self.v_original[order], original_ids)
        return order[pos]

    def u_nbrs(self, u: int) -> np.ndarray:
        return self.u_neighbors[self.u_offsets[u] : self.u_offsets[u + 1]]

    def v_nbrs(self, v: int) -> np.ndarray:
        return self.v_neighbors[self.v_offsets[v] : self.v_offsets[v + 1]]

    def edge_pairs(self) -> np.ndarray:
        """All edges as (u_label, v_label) rows, in u-major order."""
        src = np.repeat(np.arange(self.u_count, dtype=I64), np.diff(self.u_offsets))
        return np.column_stack([src, self.u_neighbors])

    def swapped(self) -> "BipartiteGraph":
        """The same graph with the two sides exchanged.

        Degrees and adjacency are untouched, so the global rank arrays stay
        valid for the counting traversal.
        """
        return BipartiteGraph(
            u_count=self.v_count,
            v_count=self.u_count,
            edge_count=self.edge_count,
            u_offsets=self.v_offsets,
            u_neighbors=self.v_neighbors,
            v_offsets=self.u_offsets,
            v_neighbors=self.u_neighbors,
            u_degree=self.v_degree,
            v_degree=self.u_degree,
            u_rank=self.v_rank,
            v_rank=self.u_rank,
            u_original=self.v_original,
            v_original=self.u_original,
        )


def oriented(g: BipartiteGraph, side: str) -> BipartiteGraph:
    """Return ``g`` with the requested side in the U (peeled) position."""
    if side == "u":
        return g
    if side == "v":
        return g.swapped()
    raise ValueError(f"side must be 'u' or 'v', got {side!r}")


def _empty_graph() -> BipartiteGraph:
    z = np.zeros(0, dtype=I64)
    zo = np.zeros(1, dtype=I64)
    return BipartiteGraph(0, 0, 0, zo, z, zo, z, z, z, z, z, z, z)


def _assemble(eu: np.ndarray, ev: np.ndarray, u_ids: np.ndarray, v_ids: np.ndarray) -> BipartiteGraph:
    """Build the CSR pair from deduplicated edges given as per-side id indices."""
    nu, nv = len(u_ids), len(v_ids)
    m = len(eu)
    u_deg = np.bincount(eu, minlength=nu).astype(I64)
    v_deg = np.bincount(ev, minlength=nv).astype(I64)

    # Global priority: degree descending, then smaller original ID, then U side.
    deg_all = np.concatenate([u_deg, v_deg])
    orig_all = np.concatenate([u_ids, v_ids])
    side_all = np.concatenate([np.zeros(nu, dtype=I64), np.ones(nv, dtype=I64)])
    order = np.lexsort((side_all, orig_all, -deg_all))
    rank_all = np.empty(nu + nv, dtype=I64)
    rank_all[order] = np.arange(nu + nv, dtype=I64)

    # Per-side labels follow global rank order, so ascending label order
    # within each adjacency list is also ascending rank order.
    u_perm = np.argsort(rank_all[:nu], kind="stable")  # label -> id index
    v_perm = np.argsort(rank_all[nu:], kind="stable")
    u_lab = np.empty(nu, dtype=I64)
    u_lab[u_perm] = np.arange(nu, dtype=I64)
    v_lab = np.empty(nv, dtype=I64)
    v_lab[v_perm] = np.arange(nv, dtype=I64)

    lu = u_lab[eu]
    lv = v_lab[ev]

    idx = np.lexsort((lv, lu))
    u_neighbors = lv[idx]
    u_offsets = np.zeros(nu + 1, dtype=I64)
    np.cumsum(np.bincount(lu, minlength=nu), out=u_offsets[1:])

    idx = np.lexsort((lu, lv))
    v_neighbors = lu[idx]
    v_offsets = np.zeros(nv + 1, dtype=I64)
    np.cumsum(np.bincount(lv, minlength=nv), out=v_offsets[1:])

    return BipartiteGraph(
        u_count=nu,
        v_count=nv,
        edge_count=m,
        u_offsets=u_offsets,
        u_neighbors=u_neighbors,
        v_offsets=v_offsets,
        v_neighbors=v_neighbors,
        u_degree=u_deg[u_perm],
        v_degree=v_deg[v_perm],
        u_rank=rank_all[:nu][u_perm],
        v_rank=rank_all[nu:][v_perm],
        u_original=u_ids[u_perm],
        v_original=v_ids[v_perm],
    )


def build_graph(edge_list) -> BipartiteGraph:
    """Build a relabeled, sorted graph from (u_id, v_id) pairs.

    Duplicate edges collapse; the edge count is the number of distinct pairs.
    Raises EmptyGraphError if nothing remains.
    """
    edges = np.asarray(edge_list, dtype=I64)
    if edges.size == 0:
        raise EmptyGraphError("edge list is empty")
    edges = edges.reshape(-1, 2)
    if (edges < 0).any():
        raise ValueError("vertex IDs must be non-negative")
    edges = np.unique(edges, axis=0)
    u_ids, eu = np.unique(edges[:, 0], return_inverse=True)
    v_ids, ev = np.unique(edges[:, 1], return_inverse=True)
    return _assemble(eu.astype(I64), ev.astype(I64), u_ids, v_ids)


def wedge_counts(g: BipartiteGraph, side: str = "u") -> WedgeCounts:
    """w[x] = sum of full-graph degrees of x's neighbors, for each x on ``side``."""
    g0 = oriented(g, side)
    contrib = g0.v_degree[g0.u_neighbors]
    cs = np.concatenate([np.zeros(1, dtype=I64), np.cumsum(contrib, dtype=I64)])
    return WedgeCounts(w=cs[g0.u_offsets[1:]] - cs[g0.u_offsets[:-1]])


def induce_subgraph(g: BipartiteGraph, u_subset) -> BipartiteGraph:
    """Subgraph keeping exactly the edges whose U endpoint is in ``u_subset``.

    The subgraph is rebuilt with its own degree-ordered labels; its
    ``u_original``/``v_original`` arrays hold the parent's internal labels, so
    results computed on the subgraph map straight back. V vertices that lose
    all their edges are dropped. An empty subset yields an empty graph.
    """
    subset = np.unique(np.asarray(u_subset, dtype=I64))
    if subset.size == 0:
        return _empty_graph()
    if subset[0] < 0 or subset[-1] >= g.u_count:
        raise ValueError("u_subset contains labels outside the graph")
    ev_parent = np.concatenate([g.u_neighbors[g.u_offsets[u] : g.u_offsets[u + 1]] for u in subset])
    if ev_parent.size == 0:
        return _empty_graph()
    eu_parent = np.repeat(subset, g.u_degree[subset])
    u_ids, eu = np.unique(eu_parent, return_inverse=True)
    v_ids, ev = np.unique(ev_parent, return_inverse=True)
    return _assemble(eu.astype(I64), ev.astype(I64), u_ids, v_ids)


class PeelableView:
    """Mutable adjacency view over a graph restricted to not-yet-peeled U vertices.

    The effective CSR arrays start out shared with the base graph and are
    rebuilt by :func:`compact`, which drops every edge whose U endpoint died.
    Between compactions the effective lists may contain stale entries for dead
    vertices; scans still pay for them, which is exactly the waste periodic
    compaction removes. ``live_degree_*`` mirror the effective list lengths;
    ``true_v_degree`` tracks the exact live degree of each V vertex and is
    updated on every kill (the peel/recount cost model needs it).
    """

    def __init__(self, g: BipartiteGraph):
        self.base = g
        self.alive = np.ones(g.u_count, dtype=bool)
        self.u_offsets = g.u_offsets
        self.u_neighbors = g.u_neighbors
        self.v_offsets = g.v_offsets
        self.v_neighbors = g.v_neighbors
        self.live_degree_u = g.u_degree.copy()
        self.live_degree_v = g.v_degree.copy()
        self.true_v_degree = g.v_degree.copy()
        self.wedges_since_compaction = 0

    @property
    def live_count(self) -> int:
        return int(self.alive.sum())

    def kill(self, us) -> None:
        """Mark U vertices dead and update the exact live degrees."""
        us = np.asarray(us, dtype=I64)
        if us.size == 0:
            return
        self.alive[us] = False
        lo = self.base.u_offsets[us]
        hi = self.base.u_offsets[us + 1]
        touched = np.concatenate([self.base.u_neighbors[a:b] for a, b in zip(lo, hi)])
        if touched.size:
            self.true_v_degree -= np.bincount(touched, minlength=self.base.v_count)


def compact(view: PeelableView) -> PeelableView:
    """Drop all effective edges whose U endpoint is dead; reset the wedge counter."""
    from . import _kernels

    view.u_offsets, view.u_neighbors, view.v_offsets, view.v_neighbors = _kernels.compact_csr(
        view.u_offsets, view.u_neighbors, view.v_offsets, view.v_neighbors, view.alive
    )
    view.live_degree_u = np.diff(view.u_offsets)
    view.live_degree_v = np.diff(view.v_offsets)
    view.wedges_since_compaction = 0
    return view


def maybe_compact(view: PeelableView, threshold: int) -> bool:
    """Compact iff at least ``threshold`` wedges were traversed since the last one."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    if view.wedges_since_compaction >= threshold:
        compact(view)
        return True
    return False
