"""Kelmans operations, red-blue graph parameters and the W recolouring pipeline."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Union

from . import kernels
from .constructions import construct_W, w_parts
from .core import BLUE, RED, Edge, Graph, RedBlueGraph, count_cliques
from .reduction import g_r

DEFAULT_BRUTE_LIMIT = 22


def kelmans(g: Graph, u: int, v: int) -> Graph:
    """G[u -> v]: every neighbour x of u outside N[v] moves from u to v."""
    if u == v:
        raise ValueError("u and v must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    moved = g.adj[u] & ~g.adj[v] & ~(1 << v)
    edges = []
    for a, b in g.edges:
        if a == u and (moved >> b) & 1:
            edges.append((v, b))
        elif b == u and (moved >> a) & 1:
            edges.append((v, a))
        else:
            edges.append((a, b))
    return Graph.from_edges(g.n, edges)


def kelmans_colored(g: RedBlueGraph, u: int, v: int) -> RedBlueGraph:
    """Coloured Kelmans: ux moves to vx keeping its colour when x is not a
    neighbour of v; a red ux with a blue vx swap colours."""
    if u == v:
        raise ValueError("u and v must differ")
    cmap = dict(g.color_map)
    base = g.graph
    for x in range(base.n):
        if x in (u, v) or not base.has_edge(u, x):
            continue
        ux = (min(u, x), max(u, x))
        vx = (min(v, x), max(v, x))
        if not base.has_edge(v, x):
            cmap[vx] = cmap.pop(ux)
        elif cmap[ux] == RED and cmap[vx] == BLUE:
            cmap[ux], cmap[vx] = BLUE, RED
    return RedBlueGraph.from_map(Graph(base.n, tuple(sorted(cmap))), cmap)


# --------------------------------------------------------------- parameters


@dataclass(frozen=True)
class ParameterSpec:
    """``kind`` is ``clique_count`` (size j), ``g_r`` or ``p_star`` (uniformity r)."""

    kind: str
    size: int
    brute_limit: int = DEFAULT_BRUTE_LIMIT
    heuristic: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("clique_count", "g_r", "p_star"):
            raise ValueError(f"unknown parameter kind {self.kind!r}")
        if self.size < 2:
            raise ValueError("clique size / uniformity must be at least 2")


@dataclass(frozen=True)
class PStar:
    value: int
    exact: bool


def p_star(g: Graph, r: int, brute_limit: int = DEFAULT_BRUTE_LIMIT, heuristic: bool = False) -> PStar:
    """max over red-blue colourings of (blue edges + red K_r)."""
    index = {e: i for i, e in enumerate(g.edges)}
    cliques = []
    for c in _cliques(g, r):
        cliques.append(sum(1 << index[p] for p in combinations(c, 2)))
    if g.m <= brute_limit:
        return PStar(kernels.pstar_bruteforce(g.m, cliques), True)
    if not heuristic:
        raise ValueError(f"{g.m} edges exceed the exact limit {brute_limit}; enable the heuristic")
    return PStar(_pstar_greedy(g.m, cliques), False)


def _cliques(g: Graph, r: int) -> list[tuple[int, ...]]:
    out = []

    def rec(clique: list[int], cand: int) -> None:
        if len(clique) == r:
            out.append(tuple(clique))
            return
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            clique.append(w)
            rec(clique, cand & g.adj[w])
            clique.pop()

    for v in range(g.n):
        rec([v], g.adj[v] & ~((1 << (v + 1)) - 1))
    return out


def _value(m: int, red: int, cliques: list[int]) -> int:
    return m - bin(red).count("1") + sum(1 for c in cliques if c & red == c)


def _pstar_greedy(m: int, cliques: list[int]) -> int:
    """Lower bound: grow the red set clique by clique while it helps."""
    red = 0
    best = _value(m, red, cliques)
    improved = True
    while improved:
        improved = False
        for c in cliques:
            if c & red == c:
                continue
            val = _value(m, red | c, cliques)
            if val > best:
                best, red, improved = val, red | c, True
    all_red = (1 << m) - 1
    return max(best, _value(m, all_red, cliques))


def evaluate(obj: Union[Graph, RedBlueGraph], spec: ParameterSpec) -> int:
    if spec.kind == "g_r":
        if not isinstance(obj, RedBlueGraph):
            raise TypeError("g_r needs a red-blue graph")
        return g_r(obj, spec.size)
    g = obj.graph if isinstance(obj, RedBlueGraph) else obj
    if spec.kind == "clique_count":
        return count_cliques(g, spec.size)
    return p_star(g, spec.size, spec.brute_limit, spec.heuristic).value


def per_vertex_bound(d: int, i: int, r: int, t: int) -> int:
    """Blue edges plus red K_r at a vertex of degree d with i blue edges.

    Returns i + C(d-i, r-1) after checking it against the per-vertex cap
    (C(t, r-1) at degree t, one less below).
    """
    if not 0 <= i <= d <= t:
        raise ValueError("need 0 <= i <= d <= t")
    if r < 3:
        raise ValueError("r must be at least 3")
    if t < r:
        raise ValueError("the cap needs t >= r")
    value = i + comb(d - i, r - 1)
    cap = comb(t, r - 1) if d == t else comb(t, r - 1) - 1
    if value > cap:
        raise AssertionError(f"per-vertex value {value} exceeds cap {cap}")
    return value


# ------------------------------------------------------------ recolouring


@dataclass(frozen=True)
class Step:
    step_id: int
    description: str
    g_r_before: int
    g_r_after: int


@dataclass
class PipelineResult:
    coloring: RedBlueGraph
    steps: list[Step] = field(default_factory=list)
    s: int = 0
    branch: str = ""

    @property
    def terminal_color(self) -> Optional[str]:
        cols = set(self.coloring.colors)
        return cols.pop() if len(cols) == 1 else None

    def log_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["step_id", "description", "g_r_before", "g_r_after"])
        for s in self.steps:
            w.writerow([s.step_id, s.description, s.g_r_before, s.g_r_after])
        return buf.getvalue()


def identify_w(g: Graph, k: int, family: str) -> int:
    """The s with g == W(n, k-1, s) (family 'path') or W(n, k, s) ('cycle')."""
    order = k - 1 if family == "path" else k
    if family not in ("path", "cycle"):
        raise ValueError("family must be 'path' or 'cycle'")
    for s in range(1, order // 2 + 1):
        if order <= g.n and construct_W(g.n, order, s) == g:
            return s
    raise ValueError(f"graph is not a labelled W(n,{order},s)")


def recolor_pipeline(g: RedBlueGraph, r: int, k: int, family: str = "path") -> PipelineResult:
    """Recolour a W-shaped red-blue graph to a monochrome one without
    decreasing g_r, logging every step that changes the colouring.

    t = floor(k/2)-1 (path family, W(n,k-1,s)) or floor((k-1)/2) (cycle
    family, W(n,k,s)).  When t > r: X-internal and Z-incident edges turn
    red together, then X-Y edges, then Y-internal edges.  When t = r: if
    X is monored everything goes red (Z-incident first), otherwise
    everything goes blue (Z-incident first).
    """
    if k < 2 * r + 2:
        raise ValueError("the pipeline needs k >= 2r+2")
    s = identify_w(g.graph, k, family)
    order = k - 1 if family == "path" else k
    t = k // 2 - 1 if family == "path" else (k - 1) // 2
    X, Y, Z = (set(p) for p in w_parts(g.n, order, s))
    edges = g.graph.edges

    def sel(pred) -> list[Edge]:
        return [e for e in edges if pred(e)]

    x_int = sel(lambda e: e[0] in X and e[1] in X)
    z_inc = sel(lambda e: e[0] in Z or e[1] in Z)
    x_y = sel(lambda e: (e[0] in X and e[1] in Y) or (e[0] in Y and e[1] in X))
    y_int = sel(lambda e: e[0] in Y and e[1] in Y)

    if t > r:
        branch = "red"
        plan = [
            ("X-internal and Z-incident edges to red", x_int + z_inc, RED),
            ("X-Y edges to red", x_y, RED),
            ("Y-internal edges to red", y_int, RED),
        ]
    elif all(g.color(*e) == RED for e in x_int):
        branch = "red"
        plan = [
            ("Z-incident edges to red", z_inc, RED),
            ("remaining edges to red", list(edges), RED),
        ]
    else:
        branch = "blue"
        plan = [
            ("Z-incident edges to blue", z_inc, BLUE),
            ("remaining edges to blue", list(edges), BLUE),
        ]

    result = PipelineResult(g, s=s, branch=branch)
    current = g
    value = g_r(current, r)
    for desc, group, color in plan:
        if all(current.color(*e) == color for e in group):
            continue
        nxt = current.recolor(group, color)
        after = g_r(nxt, r)
        result.steps.append(Step(len(result.steps) + 1, desc, value, after))
        current, value = nxt, after
    result.coloring = current
    return result
