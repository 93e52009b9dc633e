from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from berge_turan.core import BLUE, RED, Graph, Hypergraph, RedBlueGraph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def hypergraphs(draw, min_n=3, max_n=7, r=3, max_m=8):
    n = draw(st.integers(min_n, max_n))
    cands = list(combinations(range(n), r))
    chosen = draw(st.lists(st.sampled_from(cands), unique=True, max_size=max_m))
    return Hypergraph.from_edges(n, r, chosen)


@st.composite
def redblue_graphs(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    colors = draw(st.lists(st.sampled_from((RED, BLUE)), min_size=g.m, max_size=g.m))
    return RedBlueGraph(g, tuple(colors))


@pytest.fixture
def k5_plus_pendant():
    return Graph.from_edges(6, list(combinations(range(5), 2)) + [(4, 5)])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[cid])
