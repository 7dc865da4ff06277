"""End-to-end command-line usage: write an edge list, decompose it, verify.

The same flow works from a shell:

    tipdecomp graph.el --verify --stats stats.json -o tips.tsv
"""

import json
import tempfile
from pathlib import Path

from tipdecomp import cli, genbench as gb
from tipdecomp.io import write_edge_list

workdir = Path(tempfile.mkdtemp(prefix="tipdecomp-demo-"))
graph_path = workdir / "graph.el"
tips_path = workdir / "tips.tsv"
stats_path = workdir / "stats.json"

g = gb.block_chain([(2, 3), (2, 4), (3, 5), (2, 6)])
pairs = [(int(g.u_original[u]), int(g.v_original[v])) for u, v in g.edge_pairs()]
with open(graph_path, "w") as f:
    write_edge_list(pairs, f)
print(f"wrote {g.edge_count} edges to {graph_path}")

code = cli.main([
    str(graph_path),
    "--algorithm", "receipt",
    "--partitions", "4",
    "--verify",
    "-o", str(tips_path),
    "--stats", str(stats_path),
])
print(f"exit status {code} (0 = success, 3 would mean a verification mismatch)")

print("\ntips (vertex id, tip number):")
print(tips_path.read_text())
print("run statistics:")
print(json.dumps(json.loads(stats_path.read_text()), indent=2))
