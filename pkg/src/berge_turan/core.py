"""Graph, hypergraph and red-blue graph types plus the classical algorithms
built on them (clique counts, longest paths/cycles, blocks, hypergraph
connectivity)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from . import kernels

Edge = tuple[int, int]
HyperEdge = tuple[int, ...]

RED = "R"
BLUE = "B"


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``; ``edges`` is sorted."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        prev = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {e} for n={self.n}")
            if prev is not None and e <= prev:
                raise ValueError("edges must be sorted and distinct")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            norm.add(_norm_edge(int(u), int(v)))
        return cls(n, tuple(sorted(norm)))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        return cls(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if (adj[u] >> v) & 1))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(combinations(range(n), 2)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, ())

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @cached_property
    def adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adj[v]
        return [w for w in range(self.n) if (mask >> w) & 1]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges) + [(u, v)])

    def remove_vertices(self, removed: Iterable[int]) -> "Graph":
        """G - A with labels kept; removed vertices become isolated."""
        gone = set(removed)
        return Graph(self.n, tuple(e for e in self.edges if e[0] not in gone and e[1] not in gone))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """G[S] relabelled densely; returns the graph and new->old labels."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(order), tuple(sorted(edges))), order

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    nxt |= self.adj[b.bit_length() - 1]
                    f ^= b
                nxt &= ~comp
                comp |= nxt
                frontier = nxt
            seen |= comp
            comps.append([v for v in range(self.n) if (comp >> v) & 1])
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


@dataclass(frozen=True)
class Hypergraph:
    """r-uniform hypergraph on ``0..n-1``; hyperedges are sorted tuples,
    kept in lexicographic order."""

    n: int
    r: int
    edges: tuple[HyperEdge, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("uniformity must be positive")
        prev = None
        for e in self.edges:
            if len(e) != self.r:
                raise ValueError(f"hyperedge {e} does not have {self.r} vertices")
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise ValueError(f"hyperedge {e} is not strictly increasing")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"hyperedge {e} out of range for n={self.n}")
            if prev is not None and e <= prev:
                raise ValueError("hyperedges must be sorted and distinct")
            prev = e

    @classmethod
    def from_edges(cls, n: int, r: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        norm = set()
        for e in edges:
            t = tuple(sorted(int(x) for x in e))
            if len(set(t)) != len(t):
                raise ValueError(f"repeated vertex in {t}")
            norm.add(t)
        return cls(n, r, tuple(sorted(norm)))

    @classmethod
    def complete(cls, n: int, r: int) -> "Hypergraph":
        return cls(n, r, tuple(combinations(range(n), r)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << x for x in e) for e in self.edges)

    @cached_property
    def edge_set(self) -> frozenset[HyperEdge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def shadow(self) -> Graph:
        """2-shadow: pairs co-occurring in some hyperedge."""
        return Graph.from_edges(self.n, {p for e in self.edges for p in combinations(e, 2)})

    def without_edge(self, edge: HyperEdge) -> "Hypergraph":
        return Hypergraph(self.n, self.r, tuple(e for e in self.edges if e != edge))

    def with_edge(self, edge: Iterable[int]) -> "Hypergraph":
        return Hypergraph.from_edges(self.n, self.r, list(self.edges) + [tuple(edge)])

    @cached_property
    def twin_classes(self) -> tuple[int, ...]:
        """Class id (smallest member) per vertex; u, w share a class iff
        swapping them maps E(H) onto itself."""
        return twin_classes(self.n, self.edges)


def twin_classes(n: int, edges: Sequence[HyperEdge], fixed: Iterable[int] = ()) -> tuple[int, ...]:
    """Partition vertices into classes of pairwise-swappable vertices.

    Vertices in ``fixed`` are kept in singleton classes.
    """
    edge_set = frozenset(edges)
    inc: list[list[HyperEdge]] = [[] for _ in range(n)]
    for e in edges:
        for x in e:
            inc[x].append(e)
    pinned = set(fixed)
    cls = list(range(n))
    for a in range(n):
        if cls[a] != a or a in pinned:
            continue
        for b in range(a + 1, n):
            if cls[b] != b or b in pinned or len(inc[a]) != len(inc[b]):
                continue
            if _swappable(a, b, inc[a], edge_set):
                cls[b] = a
    return tuple(cls)


def _swappable(a: int, b: int, inc_a: list[HyperEdge], edge_set: frozenset) -> bool:
    for e in inc_a:
        if b in e:
            continue
        image = tuple(sorted(b if x == a else x for x in e))
        if image not in edge_set:
            return False
    # |inc_a| == |inc_b| and every a-edge maps into E, so the swap is a bijection
    return True


@dataclass(frozen=True)
class RedBlueGraph:
    """Graph with a total red/blue colouring; ``colors[i]`` colours
    ``graph.edges[i]``."""

    graph: Graph
    colors: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != len(self.graph.edges):
            raise ValueError("colouring must be total over the edges")
        for c in self.colors:
            if c not in (RED, BLUE):
                raise ValueError(f"unknown colour {c!r}")

    @classmethod
    def from_map(cls, graph: Graph, color: Mapping[Edge, str]) -> "RedBlueGraph":
        return cls(graph, tuple(color[e] for e in graph.edges))

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def color_map(self) -> dict[Edge, str]:
        return dict(zip(self.graph.edges, self.colors))

    def color(self, u: int, v: int) -> str:
        return self.color_map[_norm_edge(u, v)]

    def _part(self, c: str) -> Graph:
        return Graph(self.n, tuple(e for e, col in zip(self.graph.edges, self.colors) if col == c))

    @cached_property
    def red(self) -> Graph:
        return self._part(RED)

    @cached_property
    def blue(self) -> Graph:
        return self._part(BLUE)

    def recolor(self, edges: Iterable[Edge], c: str) -> "RedBlueGraph":
        cmap = dict(self.color_map)
        for e in edges:
            cmap[_norm_edge(*e)] = c
        return RedBlueGraph.from_map(self.graph, cmap)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (vertex sets, in discovery order), cut vertices and the
    block-cut tree as block index -> cut vertices it contains."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_cut_tree: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def leaf_blocks(self) -> list[frozenset[int]]:
        return [b for b, cuts in zip(self.blocks, self.block_cut_tree) if len(cuts) <= 1]

    def cut_tree_edges(self) -> list[tuple[int, int]]:
        return [(i, c) for i, cuts in enumerate(self.block_cut_tree) for c in cuts]


# ----------------------------------------------------------------- graph ops


def count_cliques(g: Graph, j: int) -> int:
    """Number of j-vertex complete subgraphs of ``g``."""
    if j < 1:
        raise ValueError("clique size must be at least 1")
    if j > g.n:
        return 0
    return kernels.count_cliques(g.adj, j)


def longest_path_order(g: Graph) -> int:
    """Maximum number of vertices on a simple path (exact)."""
    return kernels.longest_path_order(g.adj)


def longest_cycle_order(g: Graph) -> int:
    """Maximum number of vertices on a simple cycle, 0 if acyclic."""
    return kernels.longest_cycle_order(g.adj)


def longest_path_from(g: Graph, v: int, target: int = 0) -> list[int]:
    return kernels.longest_path_from(g.adj, v, target)


def longest_path_between(g: Graph, x: int, y: int) -> int:
    return kernels.longest_path_between(g.adj, x, y)


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components via Hopcroft-Tarjan (iterative DFS).

    Isolated vertices are reported as singleton blocks.
    """
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    timer = 0
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    for root in range(n):
        if disc[root] != -1:
            continue
        if not nbrs[root]:
            disc[root] = timer
            timer += 1
            found.append(frozenset([root]))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(nbrs[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                if p != root:
                    cuts.add(p)
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (p, v):
                        break
                found.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    tree = tuple(tuple(sorted(b & cuts)) for b in found)
    return BlockDecomposition(tuple(found), frozenset(cuts), tree)


def is_two_connected(g: Graph) -> bool:
    """Graph 2-connectivity: n >= 3, a single block and no cut vertex."""
    if g.n < 3:
        return False
    dec = blocks(g)
    return len(dec.blocks) == 1 and not dec.cut_vertices


# ------------------------------------------------------- hypergraph connectivity


def _union_find_components(n: int, vertices: Iterable[int], groups: Iterable[Iterable[int]]) -> int:
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for grp in groups:
        it = iter(grp)
        first = next(it, None)
        if first is None:
            continue
        rf = find(first)
        for x in it:
            rx = find(x)
            if rx != rf:
                parent[rx] = rf
    return len({find(v) for v in parent})


def is_connected_hypergraph(h: Hypergraph) -> bool:
    """No partition of V into two non-empty parts with every hyperedge
    inside one part.  Degree-0 vertices disconnect whenever n >= 2."""
    if h.n <= 1:
        return True
    return _union_find_components(h.n, range(h.n), h.edges) == 1


def hypergraph_cut_vertices(h: Hypergraph) -> frozenset[int]:
    if not is_connected_hypergraph(h):
        raise ValueError("hypergraph is not connected")
    if h.n < 3:
        return frozenset()
    cuts = set()
    for v in range(h.n):
        rest = [x for x in range(h.n) if x != v]
        truncated = ([x for x in e if x != v] for e in h.edges)
        if _union_find_components(h.n, rest, truncated) > 1:
            cuts.add(v)
    return frozenset(cuts)


def hypergraph_cut_hyperedges(h: Hypergraph) -> tuple[HyperEdge, ...]:
    if not is_connected_hypergraph(h):
        raise ValueError("hypergraph is not connected")
    if h.n < 2:
        return ()
    cuts = []
    for e in h.edges:
        others = (f for f in h.edges if f != e)
        if _union_find_components(h.n, range(h.n), others) > 1:
            cuts.append(e)
    return tuple(cuts)


def is_2_connected_hypergraph(h: Hypergraph) -> bool:
    if not is_connected_hypergraph(h):
        return False
    return not hypergraph_cut_vertices(h) and not hypergraph_cut_hyperedges(h)
