from itertools import combinations

import pytest
from hypothesis import given

from berge_turan.classify import (
    CLIQUE_BLOCK,
    LOW_DEGREE,
    classify_components,
    classify_leaf_blocks,
    min_degree_long_path,
    peel_low_degree,
    removal_cost,
)
from berge_turan.constructions import construct_W, monochrome
from berge_turan.core import BLUE, RED, Graph, RedBlueGraph
from berge_turan.kelmans import per_vertex_bound

from conftest import graphs


def clique(vs):
    return list(combinations(vs, 2))


def test_component_examples(k5_plus_pendant):
    assert [c.label for c in classify_components(Graph.complete(5), 8)] == ["nice"]
    strong = classify_components(k5_plus_pendant, 8)
    assert [c.label for c in strong] == ["strong"]
    assert strong[0].core_set == frozenset(range(5))
    assert strong[0].peel_trace[0].vertex == 5 and strong[0].peel_trace[0].reason == LOW_DEGREE
    bad = classify_components(Graph.complete(4), 8)
    assert [c.label for c in bad] == ["bad"]
    assert bad[0].peel_trace[0].reason == CLIQUE_BLOCK
    with pytest.raises(ValueError):
        classify_components(Graph.complete(4), 7)


def test_components_are_classified_separately():
    g = Graph.from_edges(9, clique(range(5)) + clique(range(5, 9)))
    labels = {min(c.vertices): c.label for c in classify_components(g, 8)}
    assert labels == {0: "nice", 5: "bad"}


@given(graphs(max_n=9))
def test_component_totality(g):
    comps = classify_components(g, 8)
    assert sorted(v for c in comps for v in c.vertices) == list(range(g.n))
    for c in comps:
        assert c.label in ("nice", "strong", "bad")
        assert (c.label == "nice") == (not c.peel_trace)
        assert c.core_set <= c.vertices
        removed = [r.vertex for r in c.peel_trace]
        assert len(removed) == len(set(removed))
        assert set(removed) | c.core_set == c.vertices


def test_leaf_block_examples():
    g = Graph.from_edges(7, clique(range(6)) + [(5, 6)])
    labels = {b.label for b in classify_leaf_blocks(g, 8) if len(b.vertices) == 6}
    assert labels == {"nice"}
    tri = Graph.from_edges(8, clique(range(6)) + clique([5, 6, 7]))
    small = [b for b in classify_leaf_blocks(tri, 8) if b.vertices == frozenset({5, 6, 7})]
    assert small[0].label == "bad"


def test_troublesome_threshold():
    # W(40,7,3) as a leaf block: 3*37 + 3 + 1 = ... edges vs (4 - 4/3) * 39 = 104
    w = construct_W(40, 7, 3)
    pendant = Graph.from_edges(41, list(w.edges) + [(0, 40)])
    blocks = [b for b in classify_leaf_blocks(pendant, 8) if len(b.vertices) == 40]
    assert blocks and blocks[0].edges == w.m
    expect = "troublesome" if w.m >= 104 else "bad"
    assert blocks[0].label == expect
    assert classify_leaf_blocks(pendant, 8, size_threshold=41)[0].label in ("bad", "nice", "strong")


@given(graphs(max_n=9))
def test_leaf_block_totality(g):
    for b in classify_leaf_blocks(g, 8):
        assert b.label in ("nice", "strong", "bad", "troublesome")
        if b.label == "troublesome":
            assert len(b.vertices) >= 32


def test_peel_examples():
    k4 = peel_low_degree(Graph.complete(4), 4)
    assert not k4.residue and [r.degree for r in k4.trace] == [3, 2, 1, 0]
    k5 = peel_low_degree(Graph.complete(5), 4)
    assert k5.residue == frozenset(range(5)) and not k5.trace
    w = peel_low_degree(construct_W(10, 7, 2), 3)
    assert w.residue == frozenset(range(5))


def test_peel_accounting_against_cap():
    # a W-shaped red-blue graph: each removed vertex stays within the cap
    w = construct_W(14, 7, 3)
    rb = RedBlueGraph(w, tuple(RED if i % 3 else BLUE for i in range(w.m)))
    res = peel_low_degree(rb, 4)
    alive = set(range(w.n))
    for rem in res.trace:
        cost = removal_cost(rb, rem.vertex, alive, 3)
        assert rem.blue is not None and rem.blue <= rem.degree <= 3
        # blue edges plus red triangles at v never exceed i + C(d - i, 2)
        assert cost <= per_vertex_bound(rem.degree, rem.blue, 3, 3)
        alive.discard(rem.vertex)
    assert res.trace


def test_min_degree_long_path_examples():
    with pytest.raises(ValueError):
        min_degree_long_path(Graph.complete(4), 1, 3)
    glued = Graph.from_edges(7, clique([0, 1, 2, 3]) + clique([3, 4, 5, 6]))
    c6 = min_degree_long_path(Graph.cycle(6), 0, 2)
    assert c6.kind == "path" and len(c6.path) >= 4


def test_min_degree_long_path_exception_at_cut_vertex():
    # every path from the shared vertex of two K_4 has 4 vertices: exception
    glued = Graph.from_edges(7, clique([0, 1, 2, 3]) + clique([3, 4, 5, 6]))
    out = min_degree_long_path(glued, 3, 3)
    assert out.kind == "exception" and len(out.block) == 4 and len(out.path) == 4
    # from a non-cut vertex the path crosses into the other clique
    other = min_degree_long_path(glued, 0, 3)
    assert other.kind == "path" and len(other.path) >= 5
