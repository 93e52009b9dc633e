"""Pure-Python reference implementations of the hot search kernels.

Every function here has a twin in ``_ckernels.pyx`` with identical
semantics (same arguments, same results, same tie-breaking).  Graphs are
passed as adjacency bitmask lists: ``adj[v]`` has bit ``w`` set iff ``vw``
is an edge.  Hypergraphs are passed as a list of vertex bitmasks, one per
hyperedge.
"""

from __future__ import annotations

import sys
from typing import Optional, Sequence

# Berge search modes, shared with the compiled core.
PATH_EXACT = 0
CYCLE_AT_LEAST = 1
CYCLE_THROUGH = 2
PATH_LONGEST = 3

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _reach(adj: Sequence[int], seed: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``seed`` inside ``allowed``."""
    seen = seed & allowed
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def longest_path_order(adj: Sequence[int]) -> int:
    n = len(adj)
    if n == 0:
        return 0
    full = (1 << n) - 1
    best = 1

    def dfs(last: int, visited: int, length: int) -> bool:
        nonlocal best
        if length > best:
            best = length
            if best == n:
                return True
        free = full & ~visited
        if length + _popcount(_reach(adj, adj[last], free)) <= best:
            return False
        cand = adj[last] & free
        while cand:
            b = cand & -cand
            cand ^= b
            if dfs(b.bit_length() - 1, visited | b, length + 1):
                return True
        return False

    for s in range(n):
        if dfs(s, 1 << s, 1):
            break
    return best


def longest_cycle_order(adj: Sequence[int]) -> int:
    n = len(adj)
    full = (1 << n) - 1
    best = 0

    def dfs(root: int, last: int, visited: int, length: int, allowed: int) -> None:
        nonlocal best
        if length >= 3 and (adj[last] >> root) & 1 and length > best:
            best = length
        free = allowed & ~visited
        reach = _reach(adj, adj[last], free)
        if not (reach and _reach(adj, adj[root], reach | (1 << last))):
            return
        if length + _popcount(reach) <= best:
            return
        cand = adj[last] & free
        while cand:
            b = cand & -cand
            cand ^= b
            dfs(root, b.bit_length() - 1, visited | b, length + 1, allowed)

    for s in range(n):
        allowed = full & ~((1 << (s + 1)) - 1)
        if _popcount(allowed) + 1 <= best:
            break
        dfs(s, s, 1 << s, 1, allowed)
    return best


def longest_path_from(adj: Sequence[int], v: int, target: int) -> list[int]:
    """Longest simple path starting at ``v``.

    Stops at the first path with at least ``target`` vertices when
    ``target > 0``.  Ties go to the lexicographically first path found.
    """
    n = len(adj)
    full = (1 << n) - 1
    best: list[int] = [v]
    path = [v]

    def dfs(last: int, visited: int) -> bool:
        nonlocal best
        if len(path) > len(best):
            best = list(path)
            if 0 < target <= len(best):
                return True
        free = full & ~visited
        if len(path) + _popcount(_reach(adj, adj[last], free)) <= len(best):
            return False
        cand = adj[last] & free
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            path.append(w)
            if dfs(w, visited | b):
                return True
            path.pop()
        return False

    dfs(v, 1 << v)
    return best


def longest_path_between(adj: Sequence[int], x: int, y: int) -> int:
    """Maximum number of vertices on an x-y path (0 if none)."""
    if x == y:
        return 1
    n = len(adj)
    full = (1 << n) - 1
    ybit = 1 << y
    best = 0

    def dfs(last: int, visited: int, length: int) -> None:
        nonlocal best
        if last == y:
            if length > best:
                best = length
            return
        free = full & ~visited
        reach = _reach(adj, adj[last], free)
        if not reach & ybit or length + _popcount(reach) <= best:
            return
        cand = adj[last] & free
        while cand:
            b = cand & -cand
            cand ^= b
            dfs(b.bit_length() - 1, visited | b, length + 1)

    dfs(x, 1 << x, 1)
    return best


def count_cliques(adj: Sequence[int], j: int) -> int:
    n = len(adj)
    if j <= 0:
        return 0
    if j == 1:
        return n

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return _popcount(cand)
        total = 0
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            total += rec(cand & adj[w], need - 1)
        return total

    total = 0
    for v in range(n):
        higher = adj[v] & ~((1 << (v + 1)) - 1)
        total += rec(higher, j - 1)
    return total


def pstar_bruteforce(m: int, clique_masks: Sequence[int]) -> int:
    """max over red edge sets R of (m - |R|) + #{cliques inside R}."""
    best = 0
    for red in range(1 << m):
        val = m - _popcount(red)
        for c in clique_masks:
            if c & red == c:
                val += 1
        if val > best:
            best = val
    return best


def berge_search(
    n: int,
    edge_masks: Sequence[int],
    mode: int,
    k: int,
    u: int,
    v: int,
    twin: Sequence[int],
) -> Optional[tuple[list[int], list[int]]]:
    """Depth-first search for a Berge path or cycle.

    Defining-vertex sequences are grown one vertex at a time; each new
    consecutive pair must be matched to a distinct hyperedge, which is
    kept as an incrementally augmented bipartite matching.  Unused
    vertices that are twins (their transposition is an automorphism of
    the hypergraph) are interchangeable, so only the smallest unused
    member of each twin class is branched on.

    Returns ``(vertices, hyperedge_ids)`` with hyperedges in pattern-edge
    order (for cycles the last hyperedge closes the cycle), or ``None``.
    """
    m = len(edge_masks)
    if n == 0 or m == 0:
        return None
    pair: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(n)]
    shadow = [0] * n
    for e, mask in enumerate(edge_masks):
        verts = [x for x in range(n) if (mask >> x) & 1]
        for a in verts:
            for b in verts:
                if a != b:
                    pair[a][b].append(e)
                    shadow[a] |= 1 << b
    full = (1 << n) - 1

    owner = [-1] * m
    slot_edge: list[int] = []
    slot_ends: list[tuple[int, int]] = []
    seq: list[int] = []

    def augment(slot: int, seen: list[bool]) -> bool:
        a, b = slot_ends[slot]
        for e in pair[a][b]:
            if seen[e]:
                continue
            seen[e] = True
            o = owner[e]
            if o < 0 or augment(o, seen):
                owner[e] = slot
                slot_edge[slot] = e
                return True
        return False

    def push_slot(a: int, b: int) -> bool:
        slot_ends.append((a, b))
        slot_edge.append(-1)
        if augment(len(slot_ends) - 1, [False] * m):
            return True
        slot_ends.pop()
        slot_edge.pop()
        return False

    def pop_slot() -> None:
        owner[slot_edge[-1]] = -1
        slot_ends.pop()
        slot_edge.pop()

    best: list = [None, 0]  # (result, length) for PATH_LONGEST

    def snapshot(closing: bool) -> tuple[list[int], list[int]]:
        return list(seq), list(slot_edge)

    def dfs(used: int, allowed: int) -> bool:
        last = seq[-1]
        length = len(seq)
        if mode == PATH_EXACT:
            if length == k:
                return True
        elif mode == PATH_LONGEST:
            if length > best[1]:
                best[0] = snapshot(False)
                best[1] = length
                if length >= k:
                    return True
        elif mode == CYCLE_AT_LEAST:
            if length >= k and length >= 3 and (shadow[last] >> seq[0]) & 1:
                if push_slot(last, seq[0]):
                    return True
        else:  # CYCLE_THROUGH
            if length >= 2 and (used >> v) & 1 and (shadow[last] >> u) & 1:
                if push_slot(last, u):
                    return True
        free = allowed & ~used
        bound = length + _popcount(free)
        if mode == PATH_EXACT or mode == CYCLE_AT_LEAST:
            if bound < k:
                return False
        elif mode == PATH_LONGEST:
            if bound <= best[1]:
                return False
        if length - 1 >= m:
            return False
        cand = shadow[last] & free
        tried = 0
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            cls = twin[w]
            if (tried >> cls) & 1:
                continue
            tried |= 1 << cls
            if not push_slot(last, w):
                continue
            seq.append(w)
            if dfs(used | b, allowed):
                return True
            seq.pop()
            pop_slot()
        return False

    if mode == CYCLE_THROUGH:
        seq.append(u)
        if dfs(1 << u, full):
            return snapshot(True)
        return None

    tried_root = 0
    for s in range(n):
        cls = twin[s]
        if (tried_root >> cls) & 1:
            continue
        tried_root |= 1 << cls
        if not shadow[s]:
            continue
        allowed = full & ~((1 << (s + 1)) - 1) | (1 << s) if mode == CYCLE_AT_LEAST else full
        seq.append(s)
        if dfs(1 << s, allowed):
            return best[0] if mode == PATH_LONGEST else snapshot(True)
        seq.pop()
    if mode == PATH_LONGEST:
        return best[0]
    return None
