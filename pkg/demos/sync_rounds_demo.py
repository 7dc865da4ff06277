"""Why range peeling needs so few synchronization rounds.

Batch-mode peeling handles one support value per round, so a graph with many
distinct tip values forces many rounds. Range peeling sweeps a whole support
interval per round and the round count tracks the number of ranges instead.
"""

import tipdecomp as td
from tipdecomp import genbench as gb
from tipdecomp.cd import coarse_decompose

# Chained complete blocks: block (2, b) contributes tip value C(b, 2), so
# fifty block shapes give fifty distinct tip levels.
g = gb.block_chain([(2, b) for b in range(3, 53)])
reference, _ = td.tip_decompose_bup(g)
print(f"graph with {len(set(reference.theta.tolist()))} distinct tip values")

_, parb = td.tip_decompose_parb(g, workers=2)
print(f"batch-mode baseline: {parb.sync_rounds} rounds")

for p in (2, 4, 8):
    part, cd = coarse_decompose(g, partitions=p)
    print(f"range peeling, {part.subset_count:2d} subsets: {cd.sync_rounds} rounds "
          f"({parb.sync_rounds / cd.sync_rounds:.1f}x fewer)")
