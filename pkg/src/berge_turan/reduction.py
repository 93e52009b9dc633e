"""Hypergraph -> red-blue graph reduction with a checkable certificate.

A maximum matching between vertex pairs and hyperedges is computed.
Hyperedges reachable from an unmatched hyperedge by alternating walks
become red (all their pairs become red edges); every other matched
hyperedge contributes its partner pair as a blue edge.  Each hyperedge
then hosts a blue edge or a red K_r, so e(H) <= g_r of the output, and any
path or cycle in the output lifts to a Berge copy through the matching.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import BLUE, RED, Edge, Graph, HyperEdge, Hypergraph, RedBlueGraph, count_cliques


@dataclass(frozen=True)
class Auxiliary:
    """Bipartite containment structure: pairs (A side) vs hyperedges (B side)."""

    pairs: tuple[Edge, ...]
    hyperedges: tuple[HyperEdge, ...]
    pair_to_edges: tuple[tuple[int, ...], ...]
    edge_to_pairs: tuple[tuple[int, ...], ...]

    @property
    def incidences(self) -> int:
        return sum(len(x) for x in self.pair_to_edges)


def build_auxiliary(h: Hypergraph) -> Auxiliary:
    """Pairs are restricted to those inside at least one hyperedge."""
    pairs = sorted({p for e in h.edges for p in combinations(e, 2)})
    index = {p: i for i, p in enumerate(pairs)}
    p2e: list[list[int]] = [[] for _ in pairs]
    e2p = []
    for j, e in enumerate(h.edges):
        ids = [index[p] for p in combinations(e, 2)]
        e2p.append(tuple(sorted(ids)))
        for i in ids:
            p2e[i].append(j)
    return Auxiliary(tuple(pairs), h.edges, tuple(map(tuple, p2e)), tuple(e2p))


def maximum_matching(aux: Auxiliary) -> list[int]:
    """Kuhn's algorithm, pairs in lexicographic order; returns pair -> hyperedge id (or -1)."""
    owner = [-1] * len(aux.hyperedges)
    match = [-1] * len(aux.pairs)

    def augment(p: int, seen: list[bool]) -> bool:
        for e in aux.pair_to_edges[p]:
            if seen[e]:
                continue
            seen[e] = True
            if owner[e] < 0 or augment(owner[e], seen):
                owner[e] = p
                match[p] = e
                return True
        return False

    for p in range(len(aux.pairs)):
        augment(p, [False] * len(aux.hyperedges))
    return match


@dataclass(frozen=True)
class ReductionCertificate:
    source: Hypergraph
    output: RedBlueGraph
    matching: dict[Edge, HyperEdge]
    red_hyperedges: tuple[HyperEdge, ...]
    blue_hyperedges: tuple[HyperEdge, ...]

    def to_dict(self) -> dict:
        g = self.output.graph
        return {
            "source": {"n": self.source.n, "r": self.source.r, "edges": [list(e) for e in self.source.edges]},
            "graph": {"n": g.n, "edges": [list(e) for e in g.edges]},
            "colors": list(self.output.colors),
            "matching": [[list(e), list(self.matching[e])] for e in g.edges],
            "red_hyperedges": [list(e) for e in self.red_hyperedges],
            "blue_hyperedges": [list(e) for e in self.blue_hyperedges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "ReductionCertificate":
        src = d["source"]
        source = Hypergraph.from_edges(src["n"], src["r"], src["edges"])
        g = Graph.from_edges(d["graph"]["n"], d["graph"]["edges"])
        given = [tuple(e) for e in d["graph"]["edges"]]
        cmap = dict(zip(given, d["colors"]))
        output = RedBlueGraph.from_map(g, {tuple(sorted(e)): c for e, c in cmap.items()})
        matching = {tuple(sorted(e)): tuple(sorted(f)) for e, f in d["matching"]}
        return cls(
            source,
            output,
            matching,
            tuple(tuple(e) for e in d["red_hyperedges"]),
            tuple(tuple(e) for e in d["blue_hyperedges"]),
        )


def reduce(h: Hypergraph) -> ReductionCertificate:
    aux = build_auxiliary(h)
    match = maximum_matching(aux)
    partner = [-1] * len(aux.hyperedges)
    for p, e in enumerate(match):
        if e >= 0:
            partner[e] = p
    # alternating closure from the unmatched hyperedges
    red = [partner[e] < 0 for e in range(len(aux.hyperedges))]
    queue = deque(e for e in range(len(aux.hyperedges)) if red[e])
    while queue:
        e = queue.popleft()
        for p in aux.edge_to_pairs[e]:
            f = match[p]
            # f >= 0 by maximality: otherwise e ... p would augment
            if f >= 0 and not red[f]:
                red[f] = True
                queue.append(f)
    color: dict[Edge, str] = {}
    matching: dict[Edge, HyperEdge] = {}
    for e, is_red in enumerate(red):
        if is_red:
            for p in aux.edge_to_pairs[e]:
                color[aux.pairs[p]] = RED
                matching[aux.pairs[p]] = aux.hyperedges[match[p]]
    for e, is_red in enumerate(red):
        if not is_red:
            pair = aux.pairs[partner[e]]
            color[pair] = BLUE
            matching[pair] = aux.hyperedges[e]
    g = Graph(h.n, tuple(sorted(color)))
    return ReductionCertificate(
        h,
        RedBlueGraph.from_map(g, color),
        matching,
        tuple(e for e, is_red in zip(aux.hyperedges, red) if is_red),
        tuple(e for e, is_red in zip(aux.hyperedges, red) if not is_red),
    )


def g_r(g: RedBlueGraph, r: int) -> int:
    """Blue edge count plus the number of red K_r."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return g.blue.m + count_cliques(g.red, r)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(c: ReductionCertificate) -> Verdict:
    """Re-check every certificate invariant from scratch."""
    src, out = c.source, c.output
    if out.n != src.n:
        return Verdict(False, "vertex sets differ")
    hyper = set(src.edges)
    edges = list(out.graph.edges)
    if set(c.matching) != set(edges):
        return Verdict(False, "matching does not cover the output edges")
    targets = [c.matching[e] for e in edges]
    if any(t not in hyper for t in targets):
        return Verdict(False, "matching target is not a hyperedge")
    for (u, v), t in zip(edges, targets):
        if u not in t or v not in t:
            return Verdict(False, "edge not inside its matched hyperedge")
    if len(set(targets)) != len(targets):
        return Verdict(False, "matching not injective")
    red_h, blue_h = set(c.red_hyperedges), set(c.blue_hyperedges)
    if red_h & blue_h:
        return Verdict(False, "hyperedge both red and blue")
    if red_h | blue_h != hyper or len(c.red_hyperedges) + len(c.blue_hyperedges) != len(hyper):
        return Verdict(False, "colour classes do not partition the hyperedges")
    colors = dict(zip(edges, out.colors))
    hosted_blue = {c.matching[e] for e in edges if colors[e] == BLUE}
    for f in c.blue_hyperedges:
        if f not in hosted_blue:
            return Verdict(False, "blue hyperedge without its blue edge")
    for f in c.red_hyperedges:
        for a in range(len(f)):
            for b in range(a + 1, len(f)):
                if colors.get((f[a], f[b])) != RED:
                    return Verdict(False, "red hyperedge not a clique")
    if src.m > g_r(out, src.r):
        return Verdict(False, "e(H) exceeds g_r")
    return Verdict(True)


def lift_path(c: ReductionCertificate, vertices) -> Optional[tuple[tuple[int, ...], tuple[HyperEdge, ...]]]:
    """Map a path of the output graph to its defining hyperedges."""
    vs = tuple(vertices)
    hs = []
    for a, b in zip(vs, vs[1:]):
        e = (a, b) if a < b else (b, a)
        if e not in c.matching:
            return None
        hs.append(c.matching[e])
    return vs, tuple(hs)
