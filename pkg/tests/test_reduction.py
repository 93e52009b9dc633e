import json
import random
from dataclasses import replace
from itertools import combinations

import pytest
from hypothesis import given

from berge_turan.berge import PATH, BergeEmbedding, validate_embedding
from berge_turan.constructions import construct_W, monochrome
from berge_turan.core import BLUE, RED, Graph, Hypergraph
from berge_turan.reduction import (
    ReductionCertificate,
    build_auxiliary,
    g_r,
    lift_path,
    maximum_matching,
    reduce,
    verify_certificate,
)
from berge_turan.search import random_instances

from conftest import hypergraphs


def brute_max_matching(aux) -> int:
    best = 0

    def rec(i, used, size):
        nonlocal best
        best = max(best, size)
        if i == len(aux.pairs) or size + len(aux.pairs) - i <= best:
            return
        for e in aux.pair_to_edges[i]:
            if e not in used:
                rec(i + 1, used | {e}, size + 1)
        rec(i + 1, used, size)

    rec(0, frozenset(), 0)
    return best


def test_auxiliary_examples():
    one = build_auxiliary(Hypergraph.from_edges(3, 3, [(0, 1, 2)]))
    assert one.pairs == ((0, 1), (0, 2), (1, 2)) and one.incidences == 3
    two = build_auxiliary(Hypergraph.from_edges(6, 3, [(0, 1, 2), (3, 4, 5)]))
    assert all(len(x) == 1 for x in two.pair_to_edges)
    k4 = build_auxiliary(Hypergraph.complete(4, 3))
    assert len(k4.pairs) == 6 and all(len(x) == 3 for x in k4.edge_to_pairs)


def test_reduce_examples():
    c = reduce(Hypergraph.from_edges(3, 3, [(0, 1, 2)]))
    assert c.output.graph.edges == ((0, 1),) and c.output.colors == (BLUE,)
    assert g_r(c.output, 3) == 1
    c6 = reduce(Hypergraph.complete(6, 3))
    assert c6.output.graph == Graph.complete(6) and set(c6.output.colors) == {RED}
    assert g_r(c6.output, 3) == 20
    c2 = reduce(Hypergraph.from_edges(6, 3, [(0, 1, 2), (3, 4, 5)]))
    assert c2.output.blue.m == 2 and g_r(c2.output, 3) == 2


def test_g_r_examples():
    k4 = Graph.complete(4)
    assert g_r(monochrome(k4, BLUE), 3) == 6
    assert g_r(monochrome(k4, RED), 3) == 4
    assert g_r(monochrome(construct_W(20, 7, 3), RED), 3) == 52
    with pytest.raises(ValueError):
        g_r(monochrome(k4, RED), 1)


@given(hypergraphs(max_n=7, max_m=9))
def test_matching_is_maximum(h):
    aux = build_auxiliary(h)
    match = maximum_matching(aux)
    used = [e for e in match if e >= 0]
    assert len(used) == len(set(used))
    assert len(used) == brute_max_matching(aux)


@given(hypergraphs(max_n=8, max_m=14))
def test_certificate_invariants(h):
    c = reduce(h)
    assert verify_certificate(c)
    assert h.m <= g_r(c.output, 3)
    assert set(c.output.graph.edges) <= h.shadow().edge_set


@given(hypergraphs(max_n=7, max_m=10))
def test_paths_lift(h):
    c = reduce(h)
    g = c.output.graph

    def walk(path):
        if len(path) >= 2:
            vs, hs = lift_path(c, path)
            ok, why = validate_embedding(h, BergeEmbedding(PATH, vs, hs))
            assert ok, why
        if len(path) == 6:
            return
        for w in g.neighbors(path[-1]):
            if w not in path:
                walk(path + [w])

    for v in range(g.n):
        walk([v])


def test_json_round_trip_and_determinism():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(4, 9)
        h = next(random_instances("hypergraph", n, 3, rng.randint(1, min(20, len(list(combinations(range(n), 3))))), rng.randrange(10**6)))
        c = reduce(h)
        back = ReductionCertificate.from_dict(json.loads(c.to_json()))
        assert back == c
        assert reduce(h).to_json() == c.to_json()


def test_tampered_certificates_fail():
    h = Hypergraph.complete(5, 3)
    c = reduce(h)
    edges = c.output.graph.edges
    # a duplicated target that still contains both edges
    shared = [(e, f) for e in edges for f in edges if e < f and set(e) | set(f) <= set(c.matching[e])]
    e, f = shared[0]
    dup = dict(c.matching)
    dup[f] = dup[e]
    assert verify_certificate(replace(c, matching=dup)).reason == "matching not injective"

    c = reduce(Hypergraph.complete(6, 3))
    red = c.red_hyperedges[0]
    drop = (red[0], red[1])
    cmap = c.output.color_map
    del cmap[drop]
    from berge_turan.core import RedBlueGraph

    g = Graph(c.output.n, tuple(sorted(cmap)))
    smaller = RedBlueGraph.from_map(g, cmap)
    matching = {k: v for k, v in c.matching.items() if k != drop}
    verdict = verify_certificate(replace(c, output=smaller, matching=matching))
    assert not verdict and verdict.reason == "red hyperedge not a clique"


def test_verdict_truthiness():
    from berge_turan.reduction import Verdict

    assert Verdict(True) and not Verdict(False, "x")
