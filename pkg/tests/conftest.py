import io

import numpy as np
import pytest

import tipdecomp as td
from tipdecomp import genbench as gb


@pytest.fixture(scope="session")
def counting_corpus():
    return gb.counting_corpus()


@pytest.fixture(scope="session")
def peel_corpus():
    return gb.peel_corpus()


@pytest.fixture(scope="session")
def bup_reference(peel_corpus):
    """name -> (TipResult, PeelStats) for the sequential baseline, shared by tests."""
    return {name: td.tip_decompose_bup(g) for name, g in peel_corpus}


def tips_bytes(result, original_ids) -> bytes:
    sink = io.StringIO()
    td.write_tips(result, original_ids, sink)
    return sink.getvalue().encode()


def assert_same_theta(a, b, msg=""):
    assert np.array_equal(a.theta, b.theta), msg
