"""Synthetic bipartite graphs for tests and benchmarks.

Randomness comes from numpy's PCG64 stream seeded explicitly, so a given
spec always produces the same edge set. Vertices that end up with no edges do
not exist in the built graph (everything here is edge-list driven).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bigraph import BipartiteGraph, _empty_graph, build_graph
from .errors import GenError


@dataclass
class GenSpec:
    """A named generator family plus its keyword parameters."""

    family: str
    params: dict = field(default_factory=dict)


def random_bipartite(u: int, v: int, p: float, seed: int) -> BipartiteGraph:
    """Each of the u*v possible edges present independently with probability p."""
    if u <= 0 or v <= 0:
        raise GenError("side sizes must be positive")
    if not 0.0 <= p <= 1.0:
        raise GenError("p must lie in [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    mask = rng.random((u, v)) < p
    edges = np.argwhere(mask)
    if edges.size == 0:
        return _empty_graph()
    return build_graph(edges)


def complete(u: int, v: int) -> BipartiteGraph:
    if u <= 0 or v <= 0:
        raise GenError("side sizes must be positive")
    uu, vv = np.meshgrid(np.arange(u), np.arange(v), indexing="ij")
    return build_graph(np.column_stack([uu.ravel(), vv.ravel()]))


def block_chain(blocks: list[tuple[int, int]]) -> BipartiteGraph:
    """Complete blocks chained by one shared V vertex per consecutive pair.

    Sharing a single V vertex creates no cross-block butterflies, so each
    block keeps the tip values of an isolated complete block; distinct block
    shapes therefore yield distinct tip values.
    """
    if not blocks:
        raise GenError("need at least one block")
    edges = []
    next_u = 0
    next_v = 0
    prev_last_v = None
    for a, b in blocks:
        if a <= 0 or b <= 0:
            raise GenError("block sides must be positive")
        us = range(next_u, next_u + a)
        vs = []
        if prev_last_v is not None:
            vs.append(prev_last_v)
        fresh = b - len(vs)
        vs.extend(range(next_v, next_v + fresh))
        next_u += a
        next_v += fresh
        for uu in us:
            for vv in vs:
                edges.append((uu, vv))
        prev_last_v = vs[-1]
    return build_graph(edges)


def star_heavy(hub_degree: int, leaf_count: int) -> BipartiteGraph:
    """Degree-1 U leaves spread over V hubs of the given degree.

    Leaves share no pair of neighbors, so no butterflies exist, yet peeling a
    leaf would scan its hub's whole list; recounting the live graph is far
    cheaper than peeling here, which is the imbalance this family exercises.
    """
    if hub_degree <= 0 or leaf_count <= 0:
        raise GenError("hub_degree and leaf_count must be positive")
    leaves = np.arange(leaf_count)
    hubs = leaves // hub_degree
    return build_graph(np.column_stack([leaves, hubs]))


_FAMILIES = {
    "random_bipartite": random_bipartite,
    "complete": complete,
    "block_chain": block_chain,
    "star_heavy": star_heavy,
}


def generate(spec: GenSpec) -> BipartiteGraph:
    if spec.family not in _FAMILIES:
        raise GenError(f"unknown family {spec.family!r}")
    return _FAMILIES[spec.family](**spec.params)


def counting_corpus() -> list[tuple[str, BipartiteGraph]]:
    """At least 200 graphs for the counting cross-check."""
    out = []
    sizes = [(10, 10), (20, 15), (25, 25), (40, 20), (40, 40), (60, 30), (60, 60)]
    ps = [0.05, 0.1, 0.2, 0.3, 0.5]
    for u, v in sizes:
        for p in ps:
            for seed in range(5):
                g = random_bipartite(u, v, p, seed=seed + 1000 * u + 17 * v + int(p * 100))
                out.append((f"rand_{u}x{v}_p{p}_s{seed}", g))
    for a in range(1, 6):
        for b in range(1, 6):
            out.append((f"complete_{a}x{b}", complete(a, b)))
    chains = [
        [(2, 3), (2, 4), (2, 5)],
        [(3, 3), (2, 6), (4, 2)],
        [(2, b) for b in range(3, 11)],
        [(a, 3) for a in range(2, 8)],
        [(5, 5), (4, 4), (3, 3), (2, 2)],
    ]
    for i, blocks in enumerate(chains):
        out.append((f"chain_{i}", block_chain(blocks)))
    return out


def peel_corpus() -> list[tuple[str, BipartiteGraph]]:
    """Around a hundred graphs for the decomposition equivalence sweeps."""
    out = []
    sizes = [(12, 12), (25, 18), (30, 10), (40, 40)]
    ps = [0.05, 0.1, 0.2, 0.3, 0.5]
    for u, v in sizes:
        for p in ps:
            for seed in range(4):
                g = random_bipartite(u, v, p, seed=seed + 31 * u + 7 * v + int(p * 100))
                out.append((f"rand_{u}x{v}_p{p}_s{seed}", g))
    for p in (0.1, 0.3):
        for seed in range(2):
            out.append((f"rand_60x60_p{p}_s{seed}", random_bipartite(60, 60, p, seed=seed + int(p * 10))))
    for a, b in [(1, 1), (1, 4), (2, 2), (2, 5), (3, 3), (3, 6), (4, 4), (5, 5), (6, 3), (5, 2)]:
        out.append((f"complete_{a}x{b}", complete(a, b)))
    chains = [
        [(2, 3), (2, 4), (2, 5)],
        [(2, b) for b in range(3, 9)],
        [(3, 3), (3, 4), (3, 5), (3, 6)],
        [(a, a) for a in range(2, 6)],
        [(2, 3)] * 4,
        [(4, 3), (2, 7), (3, 4)],
    ]
    for i, blocks in enumerate(chains):
        out.append((f"chain_{i}", block_chain(blocks)))
    for hd, lc in [(5, 20), (8, 40), (10, 30), (20, 60), (3, 9)]:
        out.append((f"star_{hd}x{lc}", star_heavy(hd, lc)))
    return out
