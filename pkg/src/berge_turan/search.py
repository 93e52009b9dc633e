"""Exhaustive graph enumeration, classical Turán checks and exact
Berge-Turán branch and bound."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterator, Optional, Union

from . import formats
from .berge import find_berge_path, has_berge_cycle_at_least
from .classify import min_degree_long_path
from .constructions import FormulaQuery, formula_detail
from .core import (
    Graph,
    Hypergraph,
    is_2_connected_hypergraph,
    is_connected_hypergraph,
    is_two_connected,
    longest_cycle_order,
    longest_path_between,
    longest_path_order,
)

MAX_ENUM_N = 9
MAX_EXACT_CANDIDATES = 40


class Counterexample(Exception):
    """A checked statement failed; ``graph`` holds the offending instance."""

    def __init__(self, statement: str, graph: Union[Graph, Hypergraph], detail: str = ""):
        self.statement = statement
        self.graph = graph
        self.detail = detail
        super().__init__(f"{statement}: {detail}\n{formats.serialize(graph)}")


@dataclass
class SearchReport:
    problem: str
    n: int
    k: int
    value: Optional[int]
    r: int = 2
    mode: str = "all"
    witness: Optional[Union[Graph, Hypergraph]] = None
    nodes: int = 0
    seconds: float = 0.0
    flags: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return "budget_exceeded" not in self.flags and "heuristic" not in self.flags

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "problem": self.problem,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "mode": self.mode,
            "value": self.value,
            "witness": formats.serialize(self.witness) if self.witness is not None else None,
            "nodes": self.nodes,
            "flags": list(self.flags),
        }
        if self.extra:
            d["extra"] = self.extra
        if timings:
            d["seconds"] = round(self.seconds, 3)
        return d


# ------------------------------------------------------------ isomorphism


def _refine(adj: tuple[int, ...], colors: list) -> list:
    """Colour refinement to a stable partition.

    Colours are ``(rank, signature hash)`` pairs, comparable between
    different graphs whose signature sets agree.
    """
    n = len(adj)
    cur = list(colors)
    ncls = len(set(cur))
    while True:
        sig = []
        for v in range(n):
            nb = sorted(cur[w] for w in range(n) if (adj[v] >> w) & 1)
            sig.append((cur[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        # keep the full signature as colour identity, compressed by rank
        new = [(ranks[s], hash(s)) for s in sig]
        if len(ranks) == ncls:
            return cur
        cur = new
        ncls = len(ranks)


def wl_invariant(g: Graph) -> tuple:
    """Isomorphism invariant: sorted stable colours plus the edge count."""
    colors = _refine(g.adj, [(0, 0)] * g.n)
    return (g.n, g.m, tuple(sorted(colors)))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return _iso_search(g1.adj, g2.adj, [(0, 0)] * g1.n, [(0, 0)] * g2.n)


def _iso_search(a1, a2, c1: list, c2: list) -> bool:
    c1 = _refine(a1, c1)
    c2 = _refine(a2, c2)
    if sorted(c1) != sorted(c2):
        return False
    n = len(a1)
    cells: dict = {}
    for v, c in enumerate(c1):
        cells.setdefault(c, []).append(v)
    big = [c for c, vs in cells.items() if len(vs) > 1]
    if not big:
        perm = [0] * n
        where = {c: v for v, c in enumerate(c2)}
        for v, c in enumerate(c1):
            perm[v] = where[c]
        return all(
            ((a1[v] >> w) & 1) == ((a2[perm[v]] >> perm[w]) & 1) for v in range(n) for w in range(v + 1, n)
        )
    target = min(big)
    v = cells[target][0]
    mark = (-1, hash((target, "individualised")))
    for w in range(n):
        if c2[w] != target:
            continue
        n1 = list(c1)
        n2 = list(c2)
        n1[v] = mark
        n2[w] = mark
        if _iso_search(a1, a2, n1, n2):
            return True
    return False


def naive_canonical(g: Graph) -> tuple:
    """Brute-force canonical form over all n! relabellings (oracle, n <= 7)."""
    best = None
    for perm in permutations(range(g.n)):
        code = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges))
        if best is None or code < best:
            best = code
    return best


def naive_enumerate(n: int) -> list[Graph]:
    """All 2^C(n,2) labelled graphs deduplicated by brute-force canonical form."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if (mask >> i) & 1))
        seen.setdefault(naive_canonical(g), g)
    return [Graph(n, code) for code in sorted(seen)]


# ------------------------------------------------------------ enumeration


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n <= 1:
        return (Graph(n, ()),)
    parents = _all_graphs(n - 1)
    new = n - 1
    buckets: dict[tuple, list[Graph]] = {}
    out: list[Graph] = []
    for parent in parents:
        pdeg = parent.degrees()
        for mask in range(1 << (n - 1)):
            nbrs = [w for w in range(n - 1) if (mask >> w) & 1]
            d = len(nbrs)
            # the added vertex has maximum degree in the child
            if any(pdeg[w] + ((mask >> w) & 1) > d for w in range(n - 1)):
                continue
            child = Graph(n, tuple(sorted(parent.edges + tuple((w, new) for w in nbrs))))
            key = wl_invariant(child)
            bucket = buckets.setdefault(key, [])
            if any(are_isomorphic(child, other) for other in bucket):
                continue
            bucket.append(child)
            out.append(child)
    out.sort(key=lambda g: (g.m, g.edges))
    return tuple(out)


def enumerate_graphs(n: int, connected: bool = False, two_connected: bool = False) -> list[Graph]:
    """One representative per isomorphism class of n-vertex graphs."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_ENUM_N:
        raise ValueError(f"exact enumeration supports n <= {MAX_ENUM_N}")
    graphs = _all_graphs(n)
    if two_connected:
        return [g for g in graphs if is_two_connected(g)]
    if connected:
        return [g for g in graphs if g.is_connected()]
    return list(graphs)


@lru_cache(maxsize=None)
def _path_orders(n: int) -> tuple[int, ...]:
    return tuple(longest_path_order(g) for g in _all_graphs(n))


@lru_cache(maxsize=None)
def _cycle_orders(n: int) -> tuple[int, ...]:
    return tuple(longest_cycle_order(g) for g in _all_graphs(n))


# --------------------------------------------------------------- vertex-disjoint paths


def disjoint_paths_count(g: Graph, u: int, v: int, cap: int = 2) -> int:
    """Internally vertex-disjoint u-v paths (up to ``cap``), by augmenting
    paths in the vertex-split flow network."""
    n = g.n
    # node 2x = x_in, 2x+1 = x_out; capacity 1 on x_in -> x_out except u, v
    cap_map: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, c: int) -> None:
        cap_map[(a, b)] = cap_map.get((a, b), 0) + c
        cap_map.setdefault((b, a), 0)

    big = n + 1
    for x in range(n):
        add(2 * x, 2 * x + 1, big if x in (u, v) else 1)
    for a, b in g.edges:
        add(2 * a + 1, 2 * b, 1)
        add(2 * b + 1, 2 * a, 1)
    out_nb: dict[int, list[int]] = {}
    for a, b in cap_map:
        out_nb.setdefault(a, []).append(b)
    src, dst = 2 * u + 1, 2 * v
    flow = 0
    while flow < cap:
        prev = {src: None}
        stack = [src]
        while stack and dst not in prev:
            a = stack.pop()
            for b in out_nb.get(a, ()):
                if b not in prev and cap_map[(a, b)] > 0:
                    prev[b] = a
                    stack.append(b)
        if dst not in prev:
            break
        b = dst
        while prev[b] is not None:
            a = prev[b]
            cap_map[(a, b)] -= 1
            cap_map[(b, a)] += 1
            b = a
        flow += 1
    return flow


# ------------------------------------------------------- classical checks


GRAPH_KINDS = ("eg-path", "eg-cycle", "conn-path", "kopylov", "min-degree-path", "li-ning", "whitney")


def _pick_witness(graphs: list[Graph]) -> Optional[Graph]:
    if not graphs:
        return None
    return min(graphs, key=formats.serialize)


def verify_graph_turan(kind: str, n_max: int, ks: Optional[list[int]] = None, n_min: int = 1) -> list[SearchReport]:
    """Check a classical statement on every isomorphism class up to ``n_max``.

    Raises :class:`Counterexample` on the first failure.
    """
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {', '.join(GRAPH_KINDS)}")
    if n_max > 8:
        raise ValueError("classical sweeps support n <= 8")
    reports = []
    for n in range(max(n_min, 1), n_max + 1):
        reports.extend(_CHECKS[kind](n, ks))
    return reports


def _extremal(n: int, kind: str, k: int, graphs, orders, bound: Optional[Fraction], problem: str, mode: str):
    start = time.perf_counter()
    free = [g for g, o in zip(graphs, orders) if o < k]
    value = max((g.m for g in free), default=None)
    witness = _pick_witness([g for g in free if g.m == value])
    rep = SearchReport(problem, n, k, value, mode=mode, witness=witness, nodes=len(graphs))
    rep.seconds = time.perf_counter() - start
    if bound is not None:
        rep.extra["bound"] = str(bound)
        if value is not None and value > bound:
            raise Counterexample(problem, witness, f"{value} edges exceed {bound}")
    return rep, free


def _check_eg_path(n: int, ks) -> list[SearchReport]:
    graphs, orders = _all_graphs(n), _path_orders(n)
    out = []
    for k in ks or range(2, n + 1):
        if not 2 <= k <= n:
            continue
        bound = formula_detail(FormulaQuery("eg-path", n, k)).exact
        rep, free = _extremal(n, "path", k, graphs, orders, bound, "eg-path", "all")
        tight = [g for g in free if g.m == bound]
        for g in tight:
            comps = g.components()
            if not all(len(c) == k - 1 and g.induced(c)[0].m == comb(k - 1, 2) for c in comps):
                raise Counterexample("eg-path equality", g, "attains the bound but is not a union of K_{k-1}")
        rep.extra["attains_bound"] = bool(tight)
        out.append(rep)
    return out


def _check_eg_cycle(n: int, ks) -> list[SearchReport]:
    graphs, orders = _all_graphs(n), _cycle_orders(n)
    out = []
    for k in ks or range(3, n + 1):
        if not 3 <= k <= n:
            continue
        bound = formula_detail(FormulaQuery("eg-cycle", n, k)).exact
        out.append(_extremal(n, "cycle", k, graphs, orders, bound, "eg-cycle", "all")[0])
    return out


def _check_conn_path(n: int, ks) -> list[SearchReport]:
    idx = [i for i, g in enumerate(_all_graphs(n)) if g.is_connected()]
    graphs = [_all_graphs(n)[i] for i in idx]
    orders = [_path_orders(n)[i] for i in idx]
    out = []
    for k in ks or range(5, n + 1):
        if not 5 <= k <= n:
            continue
        expected = formula_detail(FormulaQuery("conn-path-graph", n, k)).value
        rep, _ = _extremal(n, "path", k, graphs, orders, None, "conn-path", "connected")
        rep.extra["formula"] = expected
        if rep.value != expected:
            raise Counterexample("conn-path exact value", rep.witness, f"found {rep.value}, formula {expected}")
        out.append(rep)
    return out


def _check_kopylov(n: int, ks) -> list[SearchReport]:
    idx = [i for i, g in enumerate(_all_graphs(n)) if is_two_connected(g)]
    graphs = [_all_graphs(n)[i] for i in idx]
    orders = [_cycle_orders(n)[i] for i in idx]
    out = []
    for k in ks or range(5, n + 1):
        if not 5 <= k <= n:
            continue
        threshold = formula_detail(FormulaQuery("kopylov", n, k)).value
        for g, o in zip(graphs, orders):
            if g.m > threshold and o < k:
                raise Counterexample("kopylov", g, f"{g.m} > {threshold} edges but no cycle of length >= {k}")
        rep, _ = _extremal(n, "cycle", k, graphs, orders, Fraction(threshold), "kopylov", "two_connected")
        rep.extra["threshold"] = threshold
        out.append(rep)
    return out


def _check_min_degree_path(n: int, ks) -> list[SearchReport]:
    out = []
    graphs = [g for g in _all_graphs(n) if g.is_connected()]
    for t in ks or (2, 3):
        if n < t + 2:
            continue
        start = time.perf_counter()
        checked = exceptions = 0
        for g in graphs:
            if min(g.degrees()) < t:
                continue
            checked += 1
            for v in range(n):
                res = min_degree_long_path(g, v, t)
                if res.kind == "neither":
                    raise Counterexample("min-degree path", g, f"vertex {v}, t={t}")
                exceptions += res.kind == "exception"
        rep = SearchReport("min-degree-path", n, t, checked, mode="connected", nodes=checked)
        rep.extra = {"t": t, "graphs": checked, "exceptional_vertices": exceptions}
        rep.seconds = time.perf_counter() - start
        out.append(rep)
    return out


def li_ning_threshold(g: Graph, x: int, y: int) -> int:
    """Largest s with at least (n-1)/2 vertices outside {x, y} of degree >= s."""
    degs = sorted((g.degree(w) for w in range(g.n) if w not in (x, y)), reverse=True)
    need = -(-(g.n - 1) // 2)
    if need <= 0 or need > len(degs):
        return 0
    return degs[need - 1]


def _check_li_ning(n: int, ks) -> list[SearchReport]:
    if n < 3:
        return []
    start = time.perf_counter()
    graphs = [g for g in _all_graphs(n) if is_two_connected(g)]
    pairs = 0
    for g in graphs:
        for x, y in combinations(range(n), 2):
            s = li_ning_threshold(g, x, y)
            if s >= 1 and longest_path_between(g, x, y) < s + 1:
                raise Counterexample("li-ning", g, f"pair {x},{y} with s={s}")
            pairs += 1
    rep = SearchReport("li-ning", n, 0, len(graphs), mode="two_connected", nodes=pairs)
    rep.extra = {"graphs": len(graphs), "pairs": pairs}
    rep.seconds = time.perf_counter() - start
    return [rep]


def _check_whitney(n: int, ks) -> list[SearchReport]:
    if n < 3:
        return []
    start = time.perf_counter()
    graphs = _all_graphs(n)
    agree = 0
    for g in graphs:
        by_blocks = is_two_connected(g)
        by_paths = all(disjoint_paths_count(g, u, v) >= 2 for u, v in combinations(range(n), 2))
        if by_blocks != by_paths:
            raise Counterexample("whitney", g, f"blocks say {by_blocks}, path counts say {by_paths}")
        agree += by_blocks
    rep = SearchReport("whitney", n, 0, agree, nodes=len(graphs))
    rep.extra = {"graphs": len(graphs), "two_connected": agree}
    rep.seconds = time.perf_counter() - start
    return [rep]


_CHECKS = {
    "eg-path": _check_eg_path,
    "eg-cycle": _check_eg_cycle,
    "conn-path": _check_conn_path,
    "kopylov": _check_kopylov,
    "min-degree-path": _check_min_degree_path,
    "li-ning": _check_li_ning,
    "whitney": _check_whitney,
}


# ------------------------------------------------- exact Berge-Turán search


class _Budget(Exception):
    pass


def _transposition_smaller(chosen: list[int], cands: list[tuple[int, ...]], index: dict, n: int) -> bool:
    """True if some vertex transposition maps the chosen set to a
    lexicographically larger characteristic vector (i.e. it is not the
    orbit representative)."""
    cur = sorted(chosen)
    for a in range(n):
        for b in range(a + 1, n):
            img = []
            for i in chosen:
                e = cands[i]
                if a in e or b in e:
                    e = tuple(sorted(b if x == a else a if x == b else x for x in e))
                img.append(index[e])
            img.sort()
            # larger vector = earlier first difference present in img
            for p, q in zip(img, cur):
                if p != q:
                    if p < q:
                        return True
                    break
    return False


def exact_hypergraph_turan(
    n: int,
    r: int,
    k: int,
    pattern: str = "path",
    mode: str = "all",
    node_cap: int = 5_000_000,
    time_cap: float = 120.0,
    heuristic: bool = False,
) -> SearchReport:
    """Maximum hyperedges in an n-vertex r-graph with no Berge-P_k
    (``pattern='path'``) or no Berge cycle of order >= k (``'cycle'``).

    Include/exclude branch and bound over the lexicographically ordered
    candidate r-sets; only orbit representatives (checked against vertex
    transpositions) are expanded, which is sound because deleting the last
    hyperedge of a representative leaves a representative.
    """
    if pattern not in ("path", "cycle"):
        raise ValueError("pattern must be 'path' or 'cycle'")
    if mode not in ("all", "connected", "two_connected"):
        raise ValueError("mode must be all, connected or two_connected")
    cands = list(combinations(range(n), r))
    if len(cands) > MAX_EXACT_CANDIDATES and not heuristic:
        raise ValueError(f"C({n},{r}) = {len(cands)} candidates exceed the exact limit {MAX_EXACT_CANDIDATES}")
    index = {e: i for i, e in enumerate(cands)}
    need = k - 1 if pattern == "path" else k

    def contains(edges: list[tuple[int, ...]]) -> bool:
        h = Hypergraph(n, r, tuple(sorted(edges)))
        if pattern == "path":
            return find_berge_path(h, k) is not None
        return has_berge_cycle_at_least(h, k) is not None

    def feasible(edges: list[tuple[int, ...]]) -> bool:
        if mode == "all":
            return True
        h = Hypergraph(n, r, tuple(sorted(edges)))
        return is_connected_hypergraph(h) if mode == "connected" else is_2_connected_hypergraph(h)

    start = time.perf_counter()
    nodes = 0
    best_val = -1
    best_set: list[int] = []
    if feasible([]):
        best_val, best_set = 0, []
    chosen: list[int] = []

    def dfs(i: int) -> None:
        nonlocal nodes, best_val, best_set
        nodes += 1
        if nodes > node_cap or (nodes & 1023 == 0 and time.perf_counter() - start > time_cap):
            raise _Budget
        if len(chosen) > best_val and feasible([cands[j] for j in chosen]):
            best_val, best_set = len(chosen), list(chosen)
        if i == len(cands) or len(chosen) + len(cands) - i <= best_val:
            return
        chosen.append(i)
        ok = True
        if len(chosen) >= need and contains([cands[j] for j in chosen]):
            ok = False
        if ok and _transposition_smaller(chosen, cands, index, n):
            ok = False
        if ok:
            dfs(i + 1)
        chosen.pop()
        # a nonempty representative always contains cands[0] = {0..r-1}
        if i > 0:
            dfs(i + 1)

    flags = []
    try:
        if cands:
            dfs(0)
    except _Budget:
        flags.append("budget_exceeded")
    if heuristic and len(cands) > MAX_EXACT_CANDIDATES:
        flags.append("heuristic")
    witness = Hypergraph(n, r, tuple(sorted(cands[j] for j in best_set))) if best_val >= 0 else None
    problem = f"berge-{pattern}"
    rep = SearchReport(problem, n, k, best_val if best_val >= 0 else None, r=r, mode=mode, witness=witness, nodes=nodes)
    rep.flags = flags
    rep.seconds = time.perf_counter() - start
    return rep


# --------------------------------------------------------- random corpora


RANDOM_KINDS = ("hypergraph", "connected-hypergraph", "two-connected-graph", "graph")


def random_instances(
    kind: str, n: int, r: int, m: int, seed: int, count: Optional[int] = None
) -> Iterator[Union[Graph, Hypergraph]]:
    """Seeded, reproducible stream of random instances."""
    if kind not in RANDOM_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    rng = random.Random(seed)
    produced = 0
    while count is None or produced < count:
        yield _one_instance(kind, n, r, m, rng)
        produced += 1


def _one_instance(kind: str, n: int, r: int, m: int, rng: random.Random):
    if kind == "graph":
        pairs = list(combinations(range(n), 2))
        return Graph.from_edges(n, rng.sample(pairs, min(m, len(pairs))))
    if kind == "two-connected-graph":
        return _ear_graph(n, m, rng)
    cands = list(combinations(range(n), r))
    if m > len(cands):
        raise ValueError(f"only {len(cands)} possible hyperedges")
    if kind == "hypergraph":
        return Hypergraph.from_edges(n, r, rng.sample(cands, m))
    if n > 1 and m * (r - 1) < n - 1:
        raise ValueError("too few hyperedges to connect every vertex")
    for _ in range(100_000):
        h = Hypergraph.from_edges(n, r, rng.sample(cands, m))
        if is_connected_hypergraph(h):
            return h
    raise RuntimeError("rejection sampling failed to find a connected instance")


def _ear_graph(n: int, m: int, rng: random.Random) -> Graph:
    """Random 2-connected graph: a cycle, ears through new vertices, then chords."""
    if n < 3 or m < n or m > comb(n, 2):
        raise ValueError("need n >= 3 and n <= m <= C(n,2)")
    order = list(range(n))
    rng.shuffle(order)
    # every ear adds one more edge than vertices, so at most m - n ears
    ears = rng.randint(0, min(m - n, n - 3))
    c = n if ears == 0 else rng.randint(3, n - ears)
    edges = {tuple(sorted((order[i], order[(i + 1) % c]))) for i in range(c)}
    placed = order[:c]
    rest = order[c:]
    cuts = sorted(rng.sample(range(1, len(rest)), ears - 1)) if ears > 1 else []
    for lo, hi in zip([0] + cuts, cuts + [len(rest)]):
        ear = rest[lo:hi]
        if not ear:
            continue
        a, b = rng.sample(placed, 2)
        chain = [a] + ear + [b]
        edges.update(tuple(sorted(p)) for p in zip(chain, chain[1:]))
        placed.extend(ear)
    missing = [p for p in combinations(range(n), 2) if p not in edges]
    rng.shuffle(missing)
    while len(edges) < m:
        edges.add(missing.pop())
    return Graph.from_edges(n, edges)
