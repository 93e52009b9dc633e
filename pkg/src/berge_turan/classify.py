"""Peel-based classification of components and leaf blocks.

Vertices are removed one at a time, always the lowest-labelled vertex
that currently qualifies, and every removal is recorded, so results are
reproducible even where the order could matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .core import BLUE, Graph, RedBlueGraph, blocks, count_cliques, longest_path_from

LOW_DEGREE = "low_degree"
CLIQUE_BLOCK = "clique_block_non_cut"


@dataclass(frozen=True)
class Removal:
    vertex: int
    degree: int
    reason: str
    blue: Optional[int] = None  # incident blue edges, when a colouring is given

    def to_dict(self) -> dict:
        d = {"vertex": self.vertex, "degree": self.degree, "reason": self.reason}
        if self.blue is not None:
            d["blue"] = self.blue
        return d


@dataclass(frozen=True)
class PeelResult:
    graph: Graph  # input labels kept; removed vertices are isolated
    residue: frozenset[int]
    trace: tuple[Removal, ...]


def _blue_degree(rb: Optional[RedBlueGraph], v: int, alive: set[int]) -> Optional[int]:
    if rb is None:
        return None
    return sum(1 for w in rb.blue.neighbors(v) if w in alive)


def peel_low_degree(
    g: Union[Graph, RedBlueGraph], threshold: int, vertices: Optional[set[int]] = None
) -> PeelResult:
    """Remove vertices of degree < threshold until none is left."""
    rb = g if isinstance(g, RedBlueGraph) else None
    base = rb.graph if rb is not None else g
    alive = set(range(base.n)) if vertices is None else set(vertices)
    trace = []
    while True:
        pick = None
        for v in sorted(alive):
            d = sum(1 for w in base.neighbors(v) if w in alive)
            if d < threshold:
                pick = (v, d)
                break
        if pick is None:
            break
        v, d = pick
        trace.append(Removal(v, d, LOW_DEGREE, _blue_degree(rb, v, alive)))
        alive.discard(v)
    return PeelResult(base.remove_vertices(set(range(base.n)) - alive), frozenset(alive), tuple(trace))


# --------------------------------------------------------------- components


@dataclass(frozen=True)
class ComponentClass:
    label: str
    vertices: frozenset[int]
    core_set: frozenset[int]
    peel_trace: tuple[Removal, ...]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "size": len(self.vertices),
            "vertices": sorted(self.vertices),
            "residue_size": len(self.core_set),
            "residue": sorted(self.core_set),
            "trace_length": len(self.peel_trace),
            "trace": [r.to_dict() for r in self.peel_trace],
        }


def _is_clique(g: Graph, verts) -> bool:
    vs = list(verts)
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :])


def _component_peel(g: Graph, comp: set[int], k: int, rb: Optional[RedBlueGraph]):
    low = k // 2 - 1
    size = k // 2
    alive = set(comp)
    trace = []
    while alive:
        sub = g.remove_vertices(set(range(g.n)) - alive)
        candidates: dict[int, tuple[int, str]] = {}
        for v in alive:
            d = sub.degree(v)
            if d < low:
                candidates[v] = (d, LOW_DEGREE)
        dec = blocks(sub)
        for b in dec.blocks:
            if not b <= alive or len(b) != size or not _is_clique(sub, b):
                continue
            for v in b:
                if v not in dec.cut_vertices and v not in candidates:
                    candidates[v] = (sub.degree(v), CLIQUE_BLOCK)
        if not candidates:
            break
        v = min(candidates)
        d, why = candidates[v]
        trace.append(Removal(v, d, why, _blue_degree(rb, v, alive)))
        alive.discard(v)
    return frozenset(alive), tuple(trace)


def classify_components(g: Union[Graph, RedBlueGraph], k: int) -> list[ComponentClass]:
    """nice: nothing peels; strong: a nonempty proper residue; bad: residue empty."""
    if k < 8:
        raise ValueError("k must be at least 8")
    rb = g if isinstance(g, RedBlueGraph) else None
    base = rb.graph if rb is not None else g
    out = []
    for comp in base.components():
        cset = set(comp)
        residue, trace = _component_peel(base, cset, k, rb)
        if not trace:
            label = "nice"
        elif residue:
            label = "strong"
        else:
            label = "bad"
        out.append(ComponentClass(label, frozenset(cset), residue, trace))
    return out


# --------------------------------------------------------------- leaf blocks


@dataclass(frozen=True)
class BlockClass:
    label: str
    vertices: frozenset[int]
    cut_vertex: Optional[int]
    residue: frozenset[int]
    trace: tuple[Removal, ...] = field(default=())
    edges: int = 0

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "size": len(self.vertices),
            "vertices": sorted(self.vertices),
            "cut_vertex": self.cut_vertex,
            "edges": self.edges,
            "residue_size": len(self.residue),
            "residue": sorted(self.residue),
            "trace_length": len(self.trace),
        }


def classify_leaf_blocks(g: Graph, k: int, size_threshold: Optional[int] = None) -> list[BlockClass]:
    """nice: every non-cut vertex has degree >= floor(k/2); strong: the
    peel (non-cut vertices of degree < floor(k/2), one by one) leaves a
    non-cut vertex; bad otherwise.  Troublesome (even k only): bad, at
    least ``size_threshold`` vertices and e(B) >= (floor(k/2) - 4/3)(|B| - 1).
    """
    if size_threshold is None:
        size_threshold = 4 * k
    half = k // 2
    dec = blocks(g)
    out = []
    for b, cuts in zip(dec.blocks, dec.block_cut_tree):
        if len(cuts) > 1:
            continue
        cut = cuts[0] if cuts else None
        sub, _ = g.induced(b)
        e_b = sub.m
        alive = set(b)
        trace = []
        while True:
            pick = None
            for v in sorted(alive):
                if v == cut:
                    continue
                d = sum(1 for w in g.neighbors(v) if w in alive)
                if d < half:
                    pick = (v, d)
                    break
            if pick is None:
                break
            trace.append(Removal(pick[0], pick[1], LOW_DEGREE))
            alive.discard(pick[0])
        if not trace:
            label = "nice"
        elif alive - {cut}:
            label = "strong"
        else:
            label = "bad"
            dense = Fraction(e_b) >= (half - Fraction(4, 3)) * (len(b) - 1)
            if k % 2 == 0 and len(b) >= size_threshold and dense:
                label = "troublesome"
        out.append(BlockClass(label, frozenset(b), cut, frozenset(alive), tuple(trace), e_b))
    return out


# ----------------------------------------------------------- long paths


@dataclass(frozen=True)
class LongPathOutcome:
    """``kind`` is 'path', 'exception' (v is a cut vertex of a K_{t+1} block)
    or 'neither' (a counterexample to the min-degree path lemma)."""

    kind: str
    path: tuple[int, ...] = ()
    block: frozenset[int] = frozenset()


def min_degree_long_path(g: Graph, v: int, t: int) -> LongPathOutcome:
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n < t + 2:
        raise ValueError(f"graph needs at least t+2 = {t + 2} vertices")
    if min(g.degrees()) < t:
        raise ValueError(f"minimum degree below t = {t}")
    path = longest_path_from(g, v, t + 2)
    if len(path) >= t + 2:
        return LongPathOutcome("path", tuple(path))
    dec = blocks(g)
    if v in dec.cut_vertices:
        for b in dec.blocks:
            if v in b and len(b) == t + 1 and _is_clique(g, b):
                return LongPathOutcome("exception", tuple(path), frozenset(b))
    return LongPathOutcome("neither", tuple(path))


def removal_cost(rb: RedBlueGraph, v: int, alive: set[int], r: int) -> int:
    """Blue edges plus red K_r at ``v`` inside ``alive`` (peel accounting)."""
    red_nb = {w for w in rb.red.neighbors(v) if w in alive}
    blue = sum(1 for w in rb.blue.neighbors(v) if w in alive)
    if r < 2:
        raise ValueError("r must be at least 2")
    sub, _ = rb.red.induced(red_nb)
    return blue + (count_cliques(sub, r - 1) if red_nb else 0)
