"""Berge paths and cycles: exact search, certificates and validation.

Order of a Berge path = number of defining vertices; its length is the
number of defining hyperedges (order - 1).  A Berge cycle of order k has
k defining vertices and k defining hyperedges.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from . import kernels
from .core import HyperEdge, Hypergraph, twin_classes

PATH = "path"
CYCLE = "cycle"


@dataclass(frozen=True)
class BergeEmbedding:
    """Defining vertices plus the hyperedge hosting each pattern edge.

    ``hyperedges[i]`` hosts the pattern edge ``vertices[i] vertices[i+1]``;
    for a cycle the last hyperedge hosts ``vertices[-1] vertices[0]``.
    """

    pattern: str
    vertices: tuple[int, ...]
    hyperedges: tuple[HyperEdge, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def pattern_edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        pairs = [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.pattern == CYCLE:
            pairs.append((vs[-1], vs[0]))
        return pairs

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "vertices": list(self.vertices),
            "hyperedges": [list(e) for e in self.hyperedges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "BergeEmbedding":
        return cls(d["pattern"], tuple(d["vertices"]), tuple(tuple(e) for e in d["hyperedges"]))


def validate_embedding(h: Hypergraph, emb: BergeEmbedding) -> tuple[bool, str]:
    """Check an embedding against ``h`` from first principles.

    Deliberately independent of the search code: plain set operations only.
    Returns ``(ok, reason)``.
    """
    vs = list(emb.vertices)
    hs = [tuple(e) for e in emb.hyperedges]
    if emb.pattern not in (PATH, CYCLE):
        return False, f"unknown pattern {emb.pattern!r}"
    if len(set(vs)) != len(vs):
        return False, "defining vertices not distinct"
    if any(not 0 <= x < h.n for x in vs):
        return False, "defining vertex out of range"
    if emb.pattern == PATH:
        if len(vs) < 1 or len(hs) != len(vs) - 1:
            return False, "path needs order-1 hyperedges"
        pairs = list(zip(vs, vs[1:]))
    else:
        if len(vs) < 2 or len(hs) != len(vs):
            return False, "cycle needs as many hyperedges as vertices"
        pairs = list(zip(vs, vs[1:] + vs[:1]))
    if len(set(hs)) != len(hs):
        return False, "hyperedge used twice"
    present = set(h.edges)
    for (a, b), e in zip(pairs, hs):
        if e not in present:
            return False, f"{list(e)} is not a hyperedge"
        if a not in e or b not in e:
            return False, f"pair {a}-{b} not inside {list(e)}"
    return True, "ok"


def _embedding(h: Hypergraph, pattern: str, found) -> Optional[BergeEmbedding]:
    if found is None:
        return None
    verts, ids = found
    return BergeEmbedding(pattern, tuple(verts), tuple(h.edges[i] for i in ids))


def find_berge_path(h: Hypergraph, k: int) -> Optional[BergeEmbedding]:
    """A Berge path with exactly ``k`` defining vertices, or ``None``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if k > h.n or k - 1 > h.m:
        return None
    found = kernels.berge_search(h.n, h.masks, kernels.PATH_EXACT, k, twin=h.twin_classes)
    return _embedding(h, PATH, found)


def longest_berge_path(h: Hypergraph) -> Optional[BergeEmbedding]:
    if h.n == 0 or h.m == 0:
        return None
    found = kernels.berge_search(h.n, h.masks, kernels.PATH_LONGEST, h.n, twin=h.twin_classes)
    return _embedding(h, PATH, found)


def longest_berge_path_order(h: Hypergraph) -> int:
    """0 for the empty vertex set, 1 when there are no hyperedges."""
    if h.n == 0:
        return 0
    best = longest_berge_path(h)
    return 1 if best is None else best.order


def has_berge_cycle_at_least(h: Hypergraph, k: int) -> Optional[BergeEmbedding]:
    """A Berge cycle with at least ``k`` defining vertices, or ``None``."""
    if k < 3:
        raise ValueError("k must be at least 3")
    if k > h.n or k > h.m:
        return None
    found = kernels.berge_search(h.n, h.masks, kernels.CYCLE_AT_LEAST, k, twin=h.twin_classes)
    return _embedding(h, CYCLE, found)


def is_berge_path_free(h: Hypergraph, k: int) -> bool:
    return find_berge_path(h, k) is None


def is_berge_cycle_free(h: Hypergraph, k: int) -> bool:
    """No Berge cycle of order at least ``k``."""
    return has_berge_cycle_at_least(h, k) is None


def berge_path_between(h: Hypergraph, u: int, v: int) -> Optional[BergeEmbedding]:
    """Shortest Berge path from ``u`` to ``v`` (BFS in the incidence graph)."""
    if u == v:
        raise ValueError("endpoints must differ")
    inc: list[list[int]] = [[] for _ in range(h.n)]
    for i, e in enumerate(h.edges):
        for x in e:
            inc[x].append(i)
    # parent pointers: vertex -> (previous vertex, hyperedge id)
    parent: dict[int, tuple[int, int]] = {u: (-1, -1)}
    used_edges = set()
    queue = deque([u])
    while queue and v not in parent:
        x = queue.popleft()
        for i in inc[x]:
            if i in used_edges:
                continue
            used_edges.add(i)
            for y in h.edges[i]:
                if y not in parent:
                    parent[y] = (x, i)
                    queue.append(y)
    if v not in parent:
        return None
    verts, ids = [v], []
    while verts[-1] != u:
        prev, i = parent[verts[-1]]
        ids.append(i)
        verts.append(prev)
    verts.reverse()
    ids.reverse()
    return BergeEmbedding(PATH, tuple(verts), tuple(h.edges[i] for i in ids))


def berge_cycle_through(h: Hypergraph, u: int, v: int) -> Optional[BergeEmbedding]:
    """A Berge cycle having both ``u`` and ``v`` as defining vertices.

    Cycles of order 2 (two hyperedges both containing ``u`` and ``v``)
    count here, matching the two-disjoint-paths reading.
    """
    if u == v:
        raise ValueError("u and v must differ")
    twin = twin_classes(h.n, h.edges, fixed=(u, v))
    found = kernels.berge_search(h.n, h.masks, kernels.CYCLE_THROUGH, 2, u, v, twin)
    return _embedding(h, CYCLE, found)


def _split_cycle(cycle: BergeEmbedding, u: int, v: int) -> tuple[BergeEmbedding, BergeEmbedding]:
    vs, hs = list(cycle.vertices), list(cycle.hyperedges)
    start = vs.index(u)
    vs = vs[start:] + vs[:start]
    hs = hs[start:] + hs[:start]
    j = vs.index(v)
    first = BergeEmbedding(PATH, tuple(vs[: j + 1]), tuple(hs[:j]))
    back_v = vs[j:] + [u]
    back_h = hs[j:]
    second = BergeEmbedding(PATH, tuple(reversed(back_v)), tuple(reversed(back_h)))
    return first, second


def two_disjoint_berge_paths(
    h: Hypergraph, u: int, v: int
) -> Optional[tuple[BergeEmbedding, BergeEmbedding]]:
    """Two u-v Berge paths sharing only u and v and no hyperedge."""
    cycle = berge_cycle_through(h, u, v)
    if cycle is None:
        return None
    return _split_cycle(cycle, u, v)


def _set_gadget(h: Hypergraph, sides: list[list[int]]) -> tuple[Hypergraph, list[int], list[set[int]]]:
    """Apex per side, one padding hyperedge per side vertex, and the
    complete r-graph on each side's padding vertices."""
    r = h.r
    nxt = h.n
    edges = list(h.edges)
    apexes, regions = [], []
    for side in sides:
        apex = nxt
        nxt += 1
        pads: list[int] = []
        for x in side:
            fresh = list(range(nxt, nxt + r - 2))
            nxt += r - 2
            pads.extend(fresh)
            edges.append(tuple(sorted([x, apex] + fresh)))
        edges.extend(combinations(pads, r))
        apexes.append(apex)
        regions.append({apex, *pads})
    return Hypergraph.from_edges(nxt, r, edges), apexes, regions


def two_disjoint_berge_paths_between_sets(
    h: Hypergraph, s1: Iterable[int], s2: Iterable[int]
) -> Optional[tuple[BergeEmbedding, BergeEmbedding]]:
    """Two vertex- and hyperedge-disjoint Berge paths from S1 to S2."""
    a, b = sorted(set(s1)), sorted(set(s2))
    if len(a) < 2 or len(b) < 2:
        raise ValueError("both sets need at least two vertices")
    if set(a) & set(b):
        raise ValueError("sets must be disjoint")
    if any(not 0 <= x < h.n for x in a + b):
        raise ValueError("set vertex out of range")
    big, (apex1, apex2), (reg1, reg2) = _set_gadget(h, [a, b])
    found = two_disjoint_berge_paths(big, apex1, apex2)
    if found is None:
        return None
    side1 = reg1 | set(a)
    side2 = reg2 | set(b)
    return tuple(_strip(p, side1, side2) for p in found)  # type: ignore[return-value]


def _strip(path: BergeEmbedding, side1: set[int], side2: set[int]) -> BergeEmbedding:
    vs = path.vertices
    # last vertex on the S1 side, then the first S2-side vertex after it;
    # both are original set vertices and every hyperedge between is original
    i = max(idx for idx, x in enumerate(vs) if x in side1)
    j = min(idx for idx, x in enumerate(vs) if idx > i and x in side2)
    return BergeEmbedding(PATH, vs[i : j + 1], path.hyperedges[i:j])
