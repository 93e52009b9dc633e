"""Extremal constructions and closed-form Turán values.

Labeling is deterministic so serialized constructions are byte-stable:
core vertices first, then the parity pair (odd k), then the rest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Optional, Sequence

from .core import BLUE, RED, Graph, Hypergraph, RedBlueGraph


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


# ------------------------------------------------------------- hypergraphs


@dataclass(frozen=True)
class HInfo:
    n: int
    k: int
    r: int
    core: tuple[int, ...]
    parity_pair: Optional[tuple[int, int]]
    degenerate: bool


def h_info(n: int, k: int, r: int) -> HInfo:
    t = k // 2 - 1
    pair = (t, t + 1) if k % 2 else None
    # fewer than r-1 core vertices leaves (almost) nothing to take
    return HInfo(n, k, r, tuple(range(t)), pair, degenerate=k < 2 * r - 1)


def construct_H(n: int, k: int, r: int) -> Hypergraph:
    """All r-sets with at least r-1 vertices in the core L, |L| = floor(k/2)-1;
    for odd k also the r-sets containing the parity pair and r-2 core vertices."""
    if n < k:
        raise ValueError(f"need n >= k (got n={n}, k={k})")
    if k < 2 or r < 2:
        raise ValueError("need k >= 2 and r >= 2")
    info = h_info(n, k, r)
    core = list(info.core)
    t = len(core)
    edges = list(combinations(core, r))
    for base in combinations(core, r - 1):
        for z in range(t, n):
            edges.append(base + (z,))
    if info.parity_pair is not None and r >= 2:
        for base in combinations(core, r - 2):
            edges.append(base + info.parity_pair)
    return Hypergraph.from_edges(n, r, edges)


# ------------------------------------------------------------------ graphs


def construct_W(n: int, k: int, s: int) -> Graph:
    """K_s joined to the disjoint union of (n-k+s) isolated vertices and K_{k-2s}.

    X = 0..s-1, Y = the next k-2s labels, Z = the rest.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if k < 2 * s:
        raise ValueError(f"need k >= 2s (got k={k}, s={s})")
    if n < k:
        raise ValueError(f"need n >= k (got n={n}, k={k})")
    X = range(s)
    Y = range(s, k - s)
    edges = list(combinations(X, 2)) + list(combinations(Y, 2))
    edges += [(x, w) for x in X for w in range(s, n)]
    return Graph.from_edges(n, edges)


def w_parts(n: int, k: int, s: int) -> tuple[range, range, range]:
    return range(s), range(s, k - s), range(k - s, n)


def construct_G2(n: int, b_size: Optional[int] = None) -> Graph:
    """A = {a1, a2} (an edge), B independent and completely joined to A,
    every J vertex adjacent to exactly a1 and b1.  Labels: A, B, J."""
    if b_size is None:
        b_size = (n - 2) // 2
    if n < 3 or b_size < 1 or 2 + b_size > n:
        raise ValueError("need |A| = 2, a nonempty B and |J| >= 0")
    a1, a2 = 0, 1
    B = range(2, 2 + b_size)
    J = range(2 + b_size, n)
    edges = [(a1, a2)] + [(a, b) for a in (a1, a2) for b in B]
    edges += [(c, x) for c in J for x in (a1, B[0])]
    return Graph.from_edges(n, edges)


def construct_G3(n: int, star_sizes: Sequence[int]) -> Graph:
    """A = {a1, a2}, B completely joined to A, G[J] a forest of >= 2 stars.

    In a star with >= 3 vertices the leaves attach to a1 and the centre to
    both a1 and a2; in a 2-vertex star both ends attach to a1 and a2.
    Labels: A, then B, then each star (centre first).
    """
    sizes = list(star_sizes)
    if len(sizes) < 2:
        raise ValueError("G[J] needs more than one component")
    if any(s < 2 for s in sizes):
        raise ValueError("every star needs at least two vertices")
    b_size = n - 2 - sum(sizes)
    if b_size < 1:
        raise ValueError("n too small: B must be nonempty")
    a1, a2 = 0, 1
    edges = [(a1, a2)] + [(a, b) for a in (a1, a2) for b in range(2, 2 + b_size)]
    nxt = 2 + b_size
    for s in sizes:
        center, leaves = nxt, range(nxt + 1, nxt + s)
        nxt += s
        edges += [(center, x) for x in leaves]
        edges += [(center, a1), (center, a2)]
        if s == 2:
            edges += [(x, a) for x in leaves for a in (a1, a2)]
        else:
            edges += [(x, a1) for x in leaves]
    return Graph.from_edges(n, edges)


def monochrome(g: Graph, color: str) -> RedBlueGraph:
    if color not in (RED, BLUE):
        raise ValueError(f"colour must be {RED!r} or {BLUE!r}")
    return RedBlueGraph(g, (color,) * g.m)


# ---------------------------------------------------------------- formulas


@dataclass(frozen=True)
class FormulaQuery:
    family: str
    n: int
    k: int
    r: int = 2

    @property
    def t_path(self) -> int:
        return self.k // 2 - 1

    @property
    def t_cycle(self) -> int:
        return (self.k - 1) // 2

    @property
    def pq(self) -> tuple[int, int]:
        return divmod(self.n, self.k - 1) if self.k > 1 else (0, self.n)

    @property
    def k_odd(self) -> int:
        return self.k % 2

    @property
    def r1_divides_n1(self) -> int:
        return int((self.n + 1) % (self.r + 1) == 0)


@dataclass(frozen=True)
class FormulaValue:
    family: str
    n: int
    k: int
    r: int
    exact: Fraction
    in_hypothesis: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def value(self) -> int:
        return self.exact.numerator // self.exact.denominator

    @property
    def is_integral(self) -> bool:
        return self.exact.denominator == 1

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "value": self.value,
            "exact": str(self.exact),
            "in_hypothesis": self.in_hypothesis,
            "notes": list(self.notes),
        }


def _eg_path(q):
    return Fraction((q.k - 2) * q.n, 2), q.n >= q.k >= 2, ("upper bound",)


def _eg_cycle(q):
    return Fraction((q.k - 1) * (q.n - 1), 2), q.n >= q.k >= 3, ("upper bound",)


def _conn_path_graph(q):
    n, k = q.n, q.k
    a = comb(k - 2, 2) + (n - k + 2)
    b = comb(_cdiv(k, 2), 2) + ((k - 2) // 2) * (n - _cdiv(k, 2))
    return Fraction(max(a, b)), n >= k >= 5, ()


def _kopylov(q):
    n, k = q.n, q.k
    t = q.t_cycle
    a = comb(k - 2, 2) + 2 * (n - k + 2)
    b = comb(k - t, 2) + t * (n - k + t)
    return Fraction(max(a, b)), n >= k >= 5, ("threshold: more edges force a long cycle",)


def _berge_path_bound(q):
    n, k, r = q.n, q.k, q.r
    if k >= r + 2:
        return Fraction(n * comb(k - 1, r), k - 1), k > 4 and r + 2 > 4, ("upper bound, case k >= r+2",)
    return Fraction(n * (k - 2), r + 1), r >= k - 1 > 2, ("upper bound, case r >= k-1",)


def _berge_path(q):
    p, rem = q.pq
    return Fraction(p * comb(q.k - 1, q.r) + comb(rem, q.r)), q.k >= q.r + 2, ()


def _berge_path_small(q):
    n, k, r = q.n, q.k, q.r
    val = (n // (r + 1)) * (k - 2) + q.r1_divides_n1
    return Fraction(val), 4 <= k <= r + 1, ()


def _berge_p3(q):
    return Fraction(q.n // q.r), q.k == 3, ()


def _conn_berge_path(q):
    n, k, r = q.n, q.k, q.r
    val = comb(k // 2 - 1, r - 1) * (n - _cdiv(k, 2)) + comb(_cdiv(k, 2), r)
    return Fraction(val), k >= 2 * r + 2 >= 8, ("exact only for n beyond an unspecified threshold",)


def _two_conn_berge_cycle(q):
    n, k, r = q.n, q.k, q.r
    val = comb((k - 1) // 2, r - 1) * (n - _cdiv(k + 1, 2)) + comb(_cdiv(k + 1, 2), r)
    return Fraction(val), k >= 2 * r + 2 >= 8, ("upper bound for n beyond an unspecified threshold",)


FORMULAS: dict[str, Callable] = {
    "eg-path": _eg_path,
    "eg-cycle": _eg_cycle,
    "conn-path-graph": _conn_path_graph,
    "kopylov": _kopylov,
    "berge-path-bound": _berge_path_bound,
    "berge-path": _berge_path,
    "berge-path-small": _berge_path_small,
    "berge-p3": _berge_p3,
    "conn-berge-path": _conn_berge_path,
    "2conn-berge-cycle": _two_conn_berge_cycle,
}

GRAPH_FAMILIES = frozenset({"eg-path", "eg-cycle", "conn-path-graph", "kopylov"})


def formula_detail(q: FormulaQuery) -> FormulaValue:
    try:
        fn = FORMULAS[q.family]
    except KeyError:
        raise ValueError(f"unknown formula family {q.family!r}") from None
    exact, ok, notes = fn(q)
    if not exact.denominator == 1:
        notes = notes + ("fractional; value is the floor",)
    if not ok:
        notes = notes + ("parameters outside the theorem's hypotheses",)
    return FormulaValue(q.family, q.n, q.k, q.r, exact, bool(ok), tuple(notes))


def formula(q: FormulaQuery) -> int:
    """Floored integer value; out-of-hypothesis queries still evaluate."""
    return formula_detail(q).value


def formula_equivalence_17(n: int, k: int, r: int) -> bool:
    """The two published forms of the connected Berge-path value agree."""
    if k < 4:
        raise ValueError("k must be at least 4")
    t = k // 2 - 1
    older = comb(t, r - 1) * (n - k // 2 + 1) + comb(t, r) + (k % 2) * comb(t, r - 2)
    newer = comb(t, r - 1) * (n - _cdiv(k, 2)) + comb(_cdiv(k, 2), r)
    return older == newer
