"""Tip decomposition of bipartite graphs.

Butterfly counting, sequential and batch-parallel peeling baselines, and the
two-phase decomposition (coarse range partitioning followed by independent
fine peeling) with hybrid-update and graph-compaction optimizations.
"""

from .bigraph import (
    BipartiteGraph,
    PeelableView,
    WedgeCounts,
    build_graph,
    compact,
    induce_subgraph,
    maybe_compact,
    oriented,
    wedge_counts,
)
from .butterfly import SupportVector, count_naive, count_per_vertex, shared_butterflies
from .cd import RangePartition, adaptive_target, coarse_decompose, find_hi, huc_decide
from .errors import (
    CountOverflowError,
    EmptyGraphError,
    GenError,
    InvalidConfigError,
    InvalidPartitionError,
    ParseError,
    TipDecompError,
)
from .fd import SubsetTask, fd_huc_recount, fine_decompose, schedule, tip_decompose_receipt
from .io import EdgeListDocument, parse_edge_list, write_stats, write_tips
from .peel import (
    MinSupportQueue,
    PeelStats,
    TipResult,
    tip_decompose_bup,
    tip_decompose_parb,
    tip_oracle_recount,
    update,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "PeelableView",
    "WedgeCounts",
    "SupportVector",
    "RangePartition",
    "SubsetTask",
    "TipResult",
    "PeelStats",
    "MinSupportQueue",
    "EdgeListDocument",
    "build_graph",
    "wedge_counts",
    "induce_subgraph",
    "oriented",
    "compact",
    "maybe_compact",
    "count_per_vertex",
    "count_naive",
    "shared_butterflies",
    "update",
    "tip_decompose_bup",
    "tip_decompose_parb",
    "tip_oracle_recount",
    "coarse_decompose",
    "fine_decompose",
    "tip_decompose_receipt",
    "find_hi",
    "adaptive_target",
    "huc_decide",
    "fd_huc_recount",
    "schedule",
    "parse_edge_list",
    "write_tips",
    "write_stats",
    "TipDecompError",
    "EmptyGraphError",
    "CountOverflowError",
    "InvalidConfigError",
    "InvalidPartitionError",
    "GenError",
    "ParseError",
    "__version__",
]
