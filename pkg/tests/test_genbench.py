import numpy as np
import pytest

import tipdecomp as td
from tipdecomp import genbench as gb


class TestGenerators:
    def test_complete_2x2(self):
        g = gb.complete(2, 2)
        assert (g.u_count, g.v_count, g.edge_count) == (2, 2, 4)

    def test_random_p_zero_is_empty(self):
        g = gb.random_bipartite(10, 10, 0.0, seed=4)
        assert g.edge_count == 0 and g.u_count == 0

    def test_random_p_one_is_complete(self):
        g = gb.random_bipartite(4, 6, 1.0, seed=4)
        assert g.edge_count == 24

    def test_same_seed_same_edges(self):
        a = gb.random_bipartite(30, 30, 0.2, seed=123)
        b = gb.random_bipartite(30, 30, 0.2, seed=123)
        assert np.array_equal(a.edge_pairs(), b.edge_pairs())
        assert np.array_equal(a.u_original, b.u_original)

    def test_different_seed_differs(self):
        a = gb.random_bipartite(30, 30, 0.2, seed=1)
        b = gb.random_bipartite(30, 30, 0.2, seed=2)
        assert a.edge_count != b.edge_count or not np.array_equal(a.edge_pairs(), b.edge_pairs())

    def test_block_chain_distinct_tips(self):
        g = gb.block_chain([(2, 3), (2, 4), (2, 5)])
        r, _ = td.tip_decompose_bup(g)
        assert len(set(r.theta.tolist())) >= 3
        # blocks keep their isolated tip values: C(b,2) for (2,b) blocks
        assert set(r.theta.tolist()) == {3, 6, 10}

    def test_block_chain_shares_one_vertex(self):
        g = gb.block_chain([(2, 3), (2, 3)])
        # 2 blocks of 3 V vertices sharing one: 5 V vertices total
        assert g.v_count == 5
        assert g.u_count == 4

    def test_star_heavy_shape(self):
        g = gb.star_heavy(5, 20)
        assert g.u_count == 20
        assert g.v_count == 4
        assert np.all(g.u_degree == 1)
        assert td.count_per_vertex(g).total_butterflies == 0

    def test_invalid_params(self):
        with pytest.raises(td.GenError):
            gb.random_bipartite(0, 5, 0.5, seed=1)
        with pytest.raises(td.GenError):
            gb.random_bipartite(5, 5, 1.5, seed=1)
        with pytest.raises(td.GenError):
            gb.block_chain([])
        with pytest.raises(td.GenError):
            gb.star_heavy(0, 10)

    def test_genspec_dispatch(self):
        g = gb.generate(gb.GenSpec("complete", {"u": 2, "v": 2}))
        assert g.edge_count == 4
        with pytest.raises(td.GenError):
            gb.generate(gb.GenSpec("nope", {}))


class TestCorpora:
    def test_counting_corpus_size(self, counting_corpus):
        assert len(counting_corpus) >= 200

    def test_peel_corpus_size(self, peel_corpus):
        assert len(peel_corpus) >= 100

    def test_corpora_are_reproducible(self, peel_corpus):
        again = gb.peel_corpus()
        assert len(again) == len(peel_corpus)
        for (n1, g1), (n2, g2) in zip(peel_corpus[:10], again[:10]):
            assert n1 == n2
            assert g1.edge_count == g2.edge_count
