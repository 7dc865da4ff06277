import io
import json

import numpy as np
import pytest

import tipdecomp as td
from tipdecomp import genbench as gb
from tipdecomp.io import parse_edge_list, stats_document, write_edge_list, write_stats, write_tips


class TestParseEdgeList:
    def test_comments_and_edges(self):
        doc = parse_edge_list(io.StringIO("% header\n1 2\n1 3\n"))
        assert doc.edges == [(1, 2), (1, 3)]
        assert doc.comment_lines == 1

    def test_duplicates_kept(self):
        doc = parse_edge_list(io.StringIO("1 2\n1 2\n"))
        assert doc.edges == [(1, 2), (1, 2)]

    def test_arity_violation(self):
        with pytest.raises(td.ParseError) as exc:
            parse_edge_list(io.StringIO("1 2 3\n"))
        assert exc.value.line_number == 1

    def test_error_line_number_counts_all_lines(self):
        with pytest.raises(td.ParseError) as exc:
            parse_edge_list(io.StringIO("% c\n\n1 2\nx y\n"))
        assert exc.value.line_number == 4

    def test_negative_rejected(self):
        with pytest.raises(td.ParseError):
            parse_edge_list(io.StringIO("-1 2\n"))

    def test_non_integer_rejected(self):
        with pytest.raises(td.ParseError):
            parse_edge_list(io.StringIO("1 2.5\n"))

    def test_plus_sign_and_underscores_rejected(self):
        with pytest.raises(td.ParseError):
            parse_edge_list(io.StringIO("+1 2\n"))
        with pytest.raises(td.ParseError):
            parse_edge_list(io.StringIO("1_0 2\n"))

    def test_hash_comments_and_blanks(self):
        doc = parse_edge_list(io.StringIO("# c\n\n  \n5 6\n"))
        assert doc.edges == [(5, 6)]
        assert doc.comment_lines == 1
        assert doc.blank_lines == 2

    def test_line_accounting_is_total(self):
        text = "% a\n1 2\n\n# b\n3 4\n 5\t6 \n"
        doc = parse_edge_list(io.StringIO(text))
        n_lines = text.count("\n")
        assert len(doc.edges) + doc.comment_lines + doc.blank_lines == n_lines

    def test_whitespace_fuzz(self):
        rng = np.random.Generator(np.random.PCG64(60))
        pairs = [(int(rng.integers(0, 50)), int(rng.integers(0, 50))) for _ in range(100)]
        lines = []
        for u, v in pairs:
            pad = " " * int(rng.integers(0, 3))
            sep = " " if rng.random() < 0.5 else "\t"
            lines.append(f"{pad}{u}{sep}{v}{pad}\n")
        doc = parse_edge_list(io.StringIO("".join(lines)))
        assert doc.edges == pairs


class TestWriteTips:
    def test_k22_with_remapped_ids(self):
        g = td.build_graph([(7, 0), (7, 1), (3, 0), (3, 1)])
        result, _ = td.tip_decompose_bup(g)
        sink = io.StringIO()
        write_tips(result, g.u_original, sink)
        assert sink.getvalue() == "3\t1\n7\t1\n"

    def test_empty(self):
        g = gb.random_bipartite(3, 3, 0.0, seed=0)
        result, _, _ = td.tip_decompose_receipt(g)
        sink = io.StringIO()
        write_tips(result, g.u_original, sink)
        assert sink.getvalue() == ""

    def test_roundtrip(self):
        g = gb.random_bipartite(25, 25, 0.3, seed=61)
        result, _ = td.tip_decompose_bup(g)
        sink = io.StringIO()
        write_tips(result, g.u_original, sink)
        parsed = {}
        for line in sink.getvalue().splitlines():
            k, v = line.split("\t")
            parsed[int(k)] = int(v)
        expect = {int(g.u_original[i]): int(result.theta[i]) for i in range(g.u_count)}
        assert parsed == expect


class TestWriteStats:
    def test_fresh_stats(self):
        sink = io.StringIO()
        write_stats(td.PeelStats(), None, sink)
        doc = json.loads(sink.getvalue())
        assert doc["wedges_traversed"] == 0
        assert doc["sync_rounds"] == 0
        assert doc["recount_invocations"] == 0
        assert doc["subsets"]["count"] == 0

    def test_single_partition_run(self):
        g = td.build_graph([(u, v) for u in range(3) for v in range(3)])
        _, stats, part = td.tip_decompose_receipt(g, partitions=1)
        doc = stats_document(stats, part)
        assert doc["subsets"]["count"] == 1
        assert doc["subsets"]["wedge_estimates"] == [27]

    def test_roundtrip_field_by_field(self):
        g = gb.random_bipartite(20, 20, 0.3, seed=62)
        _, stats, part = td.tip_decompose_receipt(g, partitions=3)
        sink = io.StringIO()
        write_stats(stats, part, sink)
        doc = json.loads(sink.getvalue())
        assert doc["wedges_traversed"] == stats.wedges_traversed
        assert doc["sync_rounds"] == stats.sync_rounds
        assert doc["recount_invocations"] == stats.recount_invocations
        assert doc["subsets"]["count"] == part.subset_count
        assert doc["subsets"]["wedge_estimates"] == [int(x) for x in part.subset_wedges]
        assert set(doc["phase_times_ms"].keys()) == {"count", "cd", "fd"}

    def test_stable_key_order(self):
        sink1, sink2 = io.StringIO(), io.StringIO()
        write_stats(td.PeelStats(), None, sink1)
        write_stats(td.PeelStats(), None, sink2)
        assert sink1.getvalue() == sink2.getvalue()
        keys = list(json.loads(sink1.getvalue()).keys())
        assert keys == ["wedges_traversed", "sync_rounds", "recount_invocations", "phase_times_ms", "subsets"]


class TestWriteEdgeList:
    def test_roundtrip_through_parser(self):
        edges = [(3, 1), (0, 2), (3, 0)]
        sink = io.StringIO()
        write_edge_list(edges, sink)
        doc = parse_edge_list(io.StringIO(sink.getvalue()))
        assert sorted(doc.edges) == sorted(edges)
