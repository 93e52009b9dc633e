import random
from itertools import combinations, product

import pytest
from hypothesis import given

from berge_turan.constructions import construct_W, monochrome
from berge_turan.core import BLUE, RED, Graph, RedBlueGraph, count_cliques
from berge_turan.kelmans import (
    ParameterSpec,
    evaluate,
    identify_w,
    kelmans,
    kelmans_colored,
    p_star,
    per_vertex_bound,
    recolor_pipeline,
)
from berge_turan.reduction import g_r

from conftest import graphs, redblue_graphs


def brute_pstar(g: Graph, r: int) -> int:
    """Every colouring, scored from scratch."""
    best = 0
    for cols in product((RED, BLUE), repeat=g.m):
        best = max(best, g_r(RedBlueGraph(g, cols), r))
    return best


def test_kelmans_examples():
    p = Graph.path(3)
    assert kelmans(p, 0, 2) == p
    c5 = Graph.cycle(5)
    out = kelmans(c5, 3, 0)
    assert set(out.edges) == {(0, 1), (1, 2), (0, 2), (3, 4), (0, 4)}
    assert count_cliques(c5, 3) == 0 and count_cliques(out, 3) == 1
    star = Graph.from_edges(5, [(0, x) for x in range(1, 5)])
    moved = kelmans(star, 0, 1)
    assert moved.neighbors(1) == [0, 2, 3, 4] and moved.degree(0) == 1
    with pytest.raises(ValueError):
        kelmans(p, 1, 1)


def test_colored_examples():
    # red ux with blue vx: the colours swap
    g = Graph.from_edges(3, [(0, 2), (1, 2)])
    rb = RedBlueGraph.from_map(g, {(0, 2): RED, (1, 2): BLUE})
    out = kelmans_colored(rb, 0, 1)
    assert out.color(0, 2) == BLUE and out.color(1, 2) == RED
    all_red = monochrome(Graph.cycle(5), RED)
    assert set(kelmans_colored(all_red, 3, 0).colors) == {RED}
    c5 = Graph.cycle(5)
    one_blue = RedBlueGraph.from_map(c5, {e: (BLUE if e == (3, 4) else RED) for e in c5.edges})
    assert kelmans_colored(one_blue, 3, 0).blue.m == 1
    with pytest.raises(ValueError):
        kelmans_colored(one_blue, 2, 2)


@given(graphs(min_n=2, max_n=8))
def test_edge_conservation_and_clique_monotonicity(g):
    for u, v in product(range(g.n), repeat=2):
        if u == v:
            continue
        h = kelmans(g, u, v)
        assert h.m == g.m
        for j in (2, 3, 4):
            assert count_cliques(h, j) >= count_cliques(g, j)
        if g.has_edge(u, v):
            assert h.has_edge(u, v)


@given(redblue_graphs(min_n=2, max_n=7))
def test_colored_bookkeeping(rb):
    for u, v in product(range(rb.n), repeat=2):
        if u == v:
            continue
        out = kelmans_colored(rb, u, v)
        assert out.graph == kelmans(rb.graph, u, v)
        assert out.blue.m == rb.blue.m
        assert out.red == kelmans(rb.red, u, v)
        assert g_r(out, 3) >= g_r(rb, 3)


def test_longest_path_can_grow_under_kelmans():
    # three triangles on a common vertex: longest path 5 -> 6 after (5 -> 4)
    from berge_turan.core import longest_path_order

    f3 = Graph.from_edges(7, [(0, 3), (0, 6), (3, 6), (1, 4), (1, 6), (4, 6), (2, 5), (2, 6), (5, 6)])
    assert longest_path_order(f3) == 5
    assert longest_path_order(kelmans(f3, 5, 4)) == 6


def test_pstar_examples():
    assert p_star(Graph.complete(3), 3).value == 3
    assert p_star(Graph.complete(4), 3).value == 6
    assert p_star(Graph.complete(4), 3).exact


@given(graphs(max_n=6))
def test_pstar_matches_oracle(g):
    if g.m > 10:
        return
    assert p_star(g, 3).value == brute_pstar(g, 3)


def test_pstar_limits():
    g = Graph.complete(8)
    with pytest.raises(ValueError):
        p_star(g, 3)
    approx = p_star(g, 3, heuristic=True)
    assert not approx.exact and approx.value >= max(g.m, count_cliques(g, 3))


def test_pstar_feasibility_small():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(3, 6)
        pairs = list(combinations(range(n), 2))
        g = Graph.from_edges(n, rng.sample(pairs, rng.randint(0, min(9, len(pairs)))))
        base = p_star(g, 3).value
        for e in pairs:
            if not g.has_edge(*e):
                assert p_star(g.add_edge(*e), 3).value >= base + 1
        for u, v in product(range(n), repeat=2):
            if u != v:
                assert p_star(kelmans(g, u, v), 3).value >= base


def test_evaluate_dispatch():
    k4 = Graph.complete(4)
    assert evaluate(k4, ParameterSpec("clique_count", 3)) == 4
    assert evaluate(monochrome(k4, BLUE), ParameterSpec("g_r", 3)) == 6
    assert evaluate(k4, ParameterSpec("p_star", 3)) == 6
    with pytest.raises(TypeError):
        evaluate(k4, ParameterSpec("g_r", 3))
    with pytest.raises(ValueError):
        ParameterSpec("spectral", 3)
    with pytest.raises(ValueError):
        ParameterSpec("g_r", 1)


@pytest.mark.parametrize("d,i,t,want", [(4, 0, 4, 6), (4, 4, 4, 4), (3, 0, 4, 3)])
def test_per_vertex_bound_examples(d, i, t, want):
    assert per_vertex_bound(d, i, 3, t) == want


def test_per_vertex_bound_exhaustive():
    for r in (3, 4, 5):
        for t in range(r, 9):
            for d in range(t + 1):
                for i in range(d + 1):
                    per_vertex_bound(d, i, r, t)
    with pytest.raises(ValueError):
        per_vertex_bound(5, 0, 3, 4)
    with pytest.raises(ValueError):
        per_vertex_bound(2, 0, 3, 2)


def test_identify_w():
    assert identify_w(construct_W(20, 9, 4), 10, "path") == 4
    assert identify_w(construct_W(20, 9, 4), 9, "cycle") == 4
    with pytest.raises(ValueError):
        identify_w(Graph.complete(20), 10, "path")


def test_pipeline_monored_is_identity():
    w = monochrome(construct_W(33, 9, 4), RED)
    out = recolor_pipeline(w, 3, 10)
    assert out.steps == [] and out.coloring == w and out.terminal_color == RED


@pytest.mark.parametrize("n,order,s,k,family", [(20, 9, 4, 10, "path"), (20, 7, 3, 8, "path"), (20, 8, 3, 8, "cycle"), (20, 10, 4, 10, "cycle")])
def test_pipeline_monotone(n, order, s, k, family):
    w = construct_W(n, order, s)
    rng = random.Random(order * 100 + s)
    for _ in range(25):
        rb = RedBlueGraph(w, tuple(rng.choice((RED, BLUE)) for _ in w.edges))
        out = recolor_pipeline(rb, 3, k, family)
        assert out.terminal_color in (RED, BLUE)
        assert all(st.g_r_after >= st.g_r_before for st in out.steps)
        rows = out.log_csv().splitlines()
        assert rows[0] == "step_id,description,g_r_before,g_r_after"
        assert len(rows) == len(out.steps) + 1


def test_pipeline_rejects_bad_input():
    with pytest.raises(ValueError):
        recolor_pipeline(monochrome(Graph.complete(10), RED), 3, 10)
    with pytest.raises(ValueError):
        recolor_pipeline(monochrome(construct_W(20, 6, 2), RED), 3, 7)


def test_monochrome_gap_at_2r_plus_2():
    # paths, k = 2r+2: the monoblue W(n,k-1,r) beats the monored one
    w = construct_W(33, 7, 3)
    assert g_r(monochrome(w, BLUE), 3) == 93
    assert g_r(monochrome(w, RED), 3) == 91
    # cycles at k = 2r+2: equal
    wc = construct_W(33, 8, 3)
    assert g_r(monochrome(wc, BLUE), 3) == g_r(monochrome(wc, RED), 3)
