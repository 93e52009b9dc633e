from itertools import combinations

import networkx as nx
import pytest

from berge_turan.berge import find_berge_path, has_berge_cycle_at_least
from berge_turan.core import Graph, Hypergraph, is_connected_hypergraph, is_two_connected
from berge_turan.search import (
    Counterexample,
    SearchReport,
    are_isomorphic,
    enumerate_graphs,
    exact_hypergraph_turan,
    naive_enumerate,
    random_instances,
    verify_graph_turan,
)

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def brute_turan(n, r, k, pattern="path", connected=False):
    """Every hyperedge subset, largest first."""
    cands = list(combinations(range(n), r))
    for size in range(len(cands), -1, -1):
        for chosen in combinations(cands, size):
            h = Hypergraph.from_edges(n, r, chosen)
            if connected and not is_connected_hypergraph(h):
                continue
            hit = find_berge_path(h, k) if pattern == "path" else has_berge_cycle_at_least(h, k)
            if hit is None:
                return size
    return None  # no admissible hypergraph at all


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_naive(n):
    assert len(enumerate_graphs(n)) == len(naive_enumerate(n)) == KNOWN_COUNTS[n]


@pytest.mark.parametrize("n", [6, 7])
def test_enumeration_known_counts(n):
    assert len(enumerate_graphs(n)) == KNOWN_COUNTS[n]


def test_enumeration_filters():
    assert len(enumerate_graphs(3, connected=True)) == 2
    assert len(enumerate_graphs(4, connected=True)) == 6
    assert len(enumerate_graphs(5, two_connected=True)) == 10
    assert all(is_two_connected(g) for g in enumerate_graphs(6, two_connected=True))
    with pytest.raises(ValueError):
        enumerate_graphs(10)


def test_no_duplicate_classes():
    gs = enumerate_graphs(6)
    nxs = [nx.Graph(list(g.edges)) for g in gs]
    for G, g in zip(nxs, gs):
        G.add_nodes_from(range(g.n))
    by_key = {}
    for G in nxs:
        by_key.setdefault((G.number_of_edges(), tuple(sorted(d for _, d in G.degree()))), []).append(G)
    for bucket in by_key.values():
        for a, b in combinations(bucket, 2):
            assert not nx.is_isomorphic(a, b)


def test_isomorphism_test():
    c6 = Graph.cycle(6)
    relabelled = Graph.from_edges(6, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)])
    assert are_isomorphic(c6, relabelled)
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(c6, two_triangles)


def test_eg_path_example():
    reports = verify_graph_turan("eg-path", 7, [4])
    rep = next(r for r in reports if r.n == 7)
    assert rep.value == 6
    assert sorted(len(c) for c in rep.witness.components()) == [1, 3, 3]


def test_eg_cycle_example():
    rep = next(r for r in verify_graph_turan("eg-cycle", 6, [4]) if r.n == 6)
    assert rep.value <= 7


def test_kopylov_threshold():
    rep = next(r for r in verify_graph_turan("kopylov", 7, [5]) if r.n == 7)
    assert rep.extra["threshold"] == 11


@pytest.mark.parametrize("kind", ["conn-path", "li-ning", "whitney"])
def test_other_statements_hold(kind):
    assert verify_graph_turan(kind, 6)


def test_min_degree_statement():
    assert verify_graph_turan("min-degree-path", 7, [2, 3])


def test_graph_sweep_rejects_large_or_unknown():
    with pytest.raises(ValueError):
        verify_graph_turan("eg-path", 9)
    with pytest.raises(ValueError):
        verify_graph_turan("no-such", 5)


def test_counterexample_carries_graph():
    exc = Counterexample("demo", Graph.path(3), "detail")
    assert "demo: detail" in str(exc) and "3 2" in str(exc)


@pytest.mark.parametrize(
    "n,k,want",
    [(5, 5, 4), (6, 5, 4), (3, 3, 1), (4, 3, 1), (5, 3, 1), (6, 3, 2), (7, 3, 2), (7, 4, 3)],
)
def test_exact_values(n, k, want):
    rep = exact_hypergraph_turan(n, 3, k)
    assert rep.exact and rep.value == want
    assert find_berge_path(rep.witness, k) is None and rep.witness.m == want


@pytest.mark.parametrize("n,k", [(4, 3), (4, 4), (5, 3), (5, 4), (5, 5)])
def test_exact_search_matches_brute_force(n, k):
    assert exact_hypergraph_turan(n, 3, k).value == brute_turan(n, 3, k)


@pytest.mark.parametrize("n,k", [(4, 3), (5, 4), (5, 5)])
def test_exact_cycle_and_connected_modes(n, k):
    assert exact_hypergraph_turan(n, 3, k, pattern="cycle").value == brute_turan(n, 3, k, "cycle")
    rep = exact_hypergraph_turan(n, 3, k, mode="connected")
    assert rep.value == brute_turan(n, 3, k, connected=True)
    if rep.value:
        assert is_connected_hypergraph(rep.witness)


def test_monotone_in_n():
    vals = [exact_hypergraph_turan(n, 3, 4).value for n in range(4, 8)]
    assert vals == sorted(vals)


def test_budget_and_limits():
    rep = exact_hypergraph_turan(7, 3, 5, node_cap=10)
    assert "budget_exceeded" in rep.flags and not rep.exact
    assert rep.value is not None and find_berge_path(rep.witness, 5) is None
    with pytest.raises(ValueError):
        exact_hypergraph_turan(8, 3, 5)
    approx = exact_hypergraph_turan(8, 3, 5, heuristic=True, node_cap=2000)
    assert "heuristic" in approx.flags
    with pytest.raises(ValueError):
        exact_hypergraph_turan(6, 3, 5, mode="weird")


def test_report_serialisation():
    rep = exact_hypergraph_turan(5, 3, 5)
    d = rep.to_dict()
    assert "seconds" not in d and d["value"] == 4 and d["witness"].startswith("5 3 4")
    assert "seconds" in rep.to_dict(timings=True)
    assert isinstance(rep, SearchReport)


def test_random_instances_deterministic():
    a = next(random_instances("hypergraph", 8, 3, 10, seed=1))
    b = next(random_instances("hypergraph", 8, 3, 10, seed=1))
    assert a == b and a.m == 10
    g = next(random_instances("two-connected-graph", 8, 2, 12, seed=2))
    assert is_two_connected(g)
    h = next(random_instances("connected-hypergraph", 9, 3, 8, seed=3))
    assert is_connected_hypergraph(h)
    assert len(list(random_instances("graph", 5, 2, 4, seed=0, count=3))) == 3
    with pytest.raises(ValueError):
        next(random_instances("weird", 5, 3, 2, seed=0))
