# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled search kernels (graphs and hypergraphs on at most 64 vertices).

Mirrors ``_pykernels`` exactly; see that module for the contracts.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    PATH_EXACT = 0
    CYCLE_AT_LEAST = 1
    CYCLE_THROUGH = 2
    PATH_LONGEST = 3

MAX_VERTICES = 64


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t bit(int i) noexcept nogil:
    return (<uint64_t>1) << i


cdef inline uint64_t full_mask(int n) noexcept nogil:
    if n >= 64:
        return ~(<uint64_t>0)
    return (bit(n)) - 1


cdef inline uint64_t below_incl(int i) noexcept nogil:
    # bits 0..i
    if i >= 63:
        return ~(<uint64_t>0)
    return bit(i + 1) - 1


cdef uint64_t reach(const uint64_t* adj, uint64_t seed, uint64_t allowed) noexcept nogil:
    cdef uint64_t seen = seed & allowed
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[ctz(f)]
            f &= f - 1
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef uint64_t* to_masks(object adj, int* n_out) except NULL:
    cdef int n = len(adj)
    cdef uint64_t* arr = <uint64_t*> malloc((n + 1) * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        arr[i] = <uint64_t> adj[i]
    n_out[0] = n
    return arr


# ---------------------------------------------------------------- paths

cdef struct PathState:
    const uint64_t* adj
    int n
    int best
    uint64_t full


cdef bint lp_dfs(PathState* st, int last, uint64_t visited, int length) noexcept nogil:
    cdef uint64_t free_, cand
    cdef int w
    if length > st.best:
        st.best = length
        if st.best == st.n:
            return True
    free_ = st.full & ~visited
    if length + popc(reach(st.adj, st.adj[last], free_)) <= st.best:
        return False
    cand = st.adj[last] & free_
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        if lp_dfs(st, w, visited | bit(w), length + 1):
            return True
    return False


def longest_path_order(adj):
    cdef int n
    cdef uint64_t* a = to_masks(adj, &n)
    cdef PathState st
    cdef int s
    try:
        if n == 0:
            return 0
        st.adj = a
        st.n = n
        st.best = 1
        st.full = full_mask(n)
        with nogil:
            for s in range(n):
                if lp_dfs(&st, s, bit(s), 1):
                    break
        return st.best
    finally:
        free(a)


cdef void lc_dfs(PathState* st, int root, int last, uint64_t visited, int length,
                 uint64_t allowed) noexcept nogil:
    cdef uint64_t free_, r, cand
    cdef int w
    if length >= 3 and (st.adj[last] >> root) & 1 and length > st.best:
        st.best = length
    free_ = allowed & ~visited
    r = reach(st.adj, st.adj[last], free_)
    if not (r and reach(st.adj, st.adj[root], r | bit(last))):
        return
    if length + popc(r) <= st.best:
        return
    cand = st.adj[last] & free_
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        lc_dfs(st, root, w, visited | bit(w), length + 1, allowed)


def longest_cycle_order(adj):
    cdef int n
    cdef uint64_t* a = to_masks(adj, &n)
    cdef PathState st
    cdef int s
    cdef uint64_t allowed
    try:
        st.adj = a
        st.n = n
        st.best = 0
        st.full = full_mask(n)
        with nogil:
            for s in range(n):
                allowed = st.full & ~below_incl(s)
                if popc(allowed) + 1 <= st.best:
                    break
                lc_dfs(&st, s, s, bit(s), 1, allowed)
        return st.best
    finally:
        free(a)


cdef struct FromState:
    const uint64_t* adj
    int n
    int target
    uint64_t full
    int* path
    int plen
    int* best
    int blen


cdef bint pf_dfs(FromState* st, int last, uint64_t visited) noexcept nogil:
    cdef uint64_t free_, cand
    cdef int w, i
    if st.plen > st.blen:
        for i in range(st.plen):
            st.best[i] = st.path[i]
        st.blen = st.plen
        if st.target > 0 and st.blen >= st.target:
            return True
    free_ = st.full & ~visited
    if st.plen + popc(reach(st.adj, st.adj[last], free_)) <= st.blen:
        return False
    cand = st.adj[last] & free_
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        st.path[st.plen] = w
        st.plen += 1
        if pf_dfs(st, w, visited | bit(w)):
            return True
        st.plen -= 1
    return False


def longest_path_from(adj, int v, int target):
    cdef int n
    cdef uint64_t* a = to_masks(adj, &n)
    cdef FromState st
    cdef int* path = <int*> malloc((n + 1) * sizeof(int))
    cdef int* best = <int*> malloc((n + 1) * sizeof(int))
    try:
        st.adj = a
        st.n = n
        st.target = target
        st.full = full_mask(n)
        st.path = path
        st.best = best
        path[0] = v
        best[0] = v
        st.plen = 1
        st.blen = 1
        with nogil:
            pf_dfs(&st, v, bit(v))
        return [best[i] for i in range(st.blen)]
    finally:
        free(a)
        free(path)
        free(best)


cdef void pb_dfs(PathState* st, int y, int last, uint64_t visited, int length) noexcept nogil:
    cdef uint64_t free_, r, cand
    cdef int w
    if last == y:
        if length > st.best:
            st.best = length
        return
    free_ = st.full & ~visited
    r = reach(st.adj, st.adj[last], free_)
    if not (r & bit(y)) or length + popc(r) <= st.best:
        return
    cand = st.adj[last] & free_
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        pb_dfs(st, y, w, visited | bit(w), length + 1)


def longest_path_between(adj, int x, int y):
    if x == y:
        return 1
    cdef int n
    cdef uint64_t* a = to_masks(adj, &n)
    cdef PathState st
    try:
        st.adj = a
        st.n = n
        st.best = 0
        st.full = full_mask(n)
        with nogil:
            pb_dfs(&st, y, x, bit(x), 1)
        return st.best
    finally:
        free(a)


# -------------------------------------------------------------- cliques

cdef long long clique_rec(const uint64_t* adj, uint64_t cand, int need) noexcept nogil:
    cdef long long total = 0
    cdef int w
    if need == 1:
        return popc(cand)
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        total += clique_rec(adj, cand & adj[w], need - 1)
    return total


def count_cliques(adj, int j):
    cdef int n
    cdef uint64_t* a = to_masks(adj, &n)
    cdef long long total = 0
    cdef int v
    try:
        if j <= 0:
            return 0
        if j == 1:
            return n
        with nogil:
            for v in range(n):
                total += clique_rec(a, a[v] & ~below_incl(v), j - 1)
        return total
    finally:
        free(a)


def pstar_bruteforce(int m, clique_masks):
    cdef int c = len(clique_masks)
    cdef uint64_t* cm = <uint64_t*> malloc((c + 1) * sizeof(uint64_t))
    cdef int i, val, best = 0
    cdef uint64_t red, limit
    if m > 40:
        raise ValueError("edge count too large for brute force")
    try:
        for i in range(c):
            cm[i] = <uint64_t> clique_masks[i]
        limit = bit(m)
        with nogil:
            red = 0
            while red < limit:
                val = m - popc(red)
                for i in range(c):
                    if cm[i] & red == cm[i]:
                        val += 1
                if val > best:
                    best = val
                red += 1
        return best
    finally:
        free(cm)


# ---------------------------------------------------------- berge search

cdef struct Berge:
    int n
    int m
    int mode
    int k
    int u
    int v
    uint64_t full
    uint64_t* shadow
    int* pe_start      # n*n + 1
    int* pe_data
    int* twin
    int* owner         # m
    int* stamp         # m
    int cur_stamp
    int* slot_edge     # n + 1
    int* slot_a
    int* slot_b
    int nslots
    int* seq           # n + 1
    int seqlen
    int* best_seq
    int* best_edges
    int best_len


cdef bint b_augment(Berge* b, int slot) noexcept nogil:
    cdef int a = b.slot_a[slot]
    cdef int c = b.slot_b[slot]
    cdef int idx = a * b.n + c
    cdef int i, e, o
    for i in range(b.pe_start[idx], b.pe_start[idx + 1]):
        e = b.pe_data[i]
        if b.stamp[e] == b.cur_stamp:
            continue
        b.stamp[e] = b.cur_stamp
        o = b.owner[e]
        if o < 0 or b_augment(b, o):
            b.owner[e] = slot
            b.slot_edge[slot] = e
            return True
    return False


cdef bint b_push(Berge* b, int a, int c) noexcept nogil:
    cdef int s = b.nslots
    b.slot_a[s] = a
    b.slot_b[s] = c
    b.slot_edge[s] = -1
    b.nslots += 1
    b.cur_stamp += 1
    if b_augment(b, s):
        return True
    b.nslots -= 1
    return False


cdef inline void b_pop(Berge* b) noexcept nogil:
    b.nslots -= 1
    b.owner[b.slot_edge[b.nslots]] = -1


cdef void b_snapshot(Berge* b) noexcept nogil:
    cdef int i
    for i in range(b.seqlen):
        b.best_seq[i] = b.seq[i]
    for i in range(b.nslots):
        b.best_edges[i] = b.slot_edge[i]
    b.best_len = b.seqlen


cdef bint b_dfs(Berge* b, uint64_t used, uint64_t allowed) noexcept nogil:
    cdef int last = b.seq[b.seqlen - 1]
    cdef int length = b.seqlen
    cdef uint64_t free_, cand, tried = 0
    cdef int bound, w, cls
    if b.mode == PATH_EXACT:
        if length == b.k:
            b_snapshot(b)
            return True
    elif b.mode == PATH_LONGEST:
        if length > b.best_len:
            b_snapshot(b)
            if length >= b.k:
                return True
    elif b.mode == CYCLE_AT_LEAST:
        if length >= b.k and length >= 3 and (b.shadow[last] >> b.seq[0]) & 1:
            if b_push(b, last, b.seq[0]):
                b_snapshot(b)
                return True
    else:
        if length >= 2 and (used >> b.v) & 1 and (b.shadow[last] >> b.u) & 1:
            if b_push(b, last, b.u):
                b_snapshot(b)
                return True
    free_ = allowed & ~used
    bound = length + popc(free_)
    if b.mode == PATH_EXACT or b.mode == CYCLE_AT_LEAST:
        if bound < b.k:
            return False
    elif b.mode == PATH_LONGEST:
        if bound <= b.best_len:
            return False
    if length - 1 >= b.m:
        return False
    cand = b.shadow[last] & free_
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        cls = b.twin[w]
        if (tried >> cls) & 1:
            continue
        tried |= bit(cls)
        if not b_push(b, last, w):
            continue
        b.seq[b.seqlen] = w
        b.seqlen += 1
        if b_dfs(b, used | bit(w), allowed):
            return True
        b.seqlen -= 1
        b_pop(b)
    return False


def berge_search(int n, edge_masks, int mode, int k, int u, int v, twin):
    cdef int m = len(edge_masks)
    cdef Berge b
    cdef int i, a, c, e, s, cls, pos
    cdef uint64_t mask, tried_root = 0, allowed
    cdef uint64_t* emask
    cdef int* counts
    cdef bint found = False
    if n > 64:
        raise ValueError("compiled Berge search supports at most 64 vertices")
    if n == 0 or m == 0:
        return None
    emask = <uint64_t*> malloc(m * sizeof(uint64_t))
    b.shadow = <uint64_t*> calloc(n, sizeof(uint64_t))
    b.pe_start = <int*> calloc(n * n + 1, sizeof(int))
    counts = <int*> calloc(n * n + 1, sizeof(int))
    b.twin = <int*> malloc(n * sizeof(int))
    b.owner = <int*> malloc(m * sizeof(int))
    b.stamp = <int*> calloc(m, sizeof(int))
    b.slot_edge = <int*> malloc((n + 2) * sizeof(int))
    b.slot_a = <int*> malloc((n + 2) * sizeof(int))
    b.slot_b = <int*> malloc((n + 2) * sizeof(int))
    b.seq = <int*> malloc((n + 2) * sizeof(int))
    b.best_seq = <int*> malloc((n + 2) * sizeof(int))
    b.best_edges = <int*> malloc((n + 2) * sizeof(int))
    b.pe_data = NULL
    try:
        for e in range(m):
            emask[e] = <uint64_t> edge_masks[e]
            b.owner[e] = -1
        for i in range(n):
            b.twin[i] = <int> twin[i]
        # pair -> hyperedge lists, in hyperedge order
        for e in range(m):
            mask = emask[e]
            for a in range(n):
                if not (mask >> a) & 1:
                    continue
                for c in range(n):
                    if c != a and (mask >> c) & 1:
                        counts[a * n + c] += 1
                        b.shadow[a] |= bit(c)
        b.pe_start[0] = 0
        for i in range(n * n):
            b.pe_start[i + 1] = b.pe_start[i] + counts[i]
        b.pe_data = <int*> malloc((b.pe_start[n * n] + 1) * sizeof(int))
        for i in range(n * n):
            counts[i] = b.pe_start[i]
        for e in range(m):
            mask = emask[e]
            for a in range(n):
                if not (mask >> a) & 1:
                    continue
                for c in range(n):
                    if c != a and (mask >> c) & 1:
                        b.pe_data[counts[a * n + c]] = e
                        counts[a * n + c] += 1
        b.n = n
        b.m = m
        b.mode = mode
        b.k = k
        b.u = u
        b.v = v
        b.full = full_mask(n)
        b.cur_stamp = 0
        b.nslots = 0
        b.seqlen = 0
        b.best_len = 0
        with nogil:
            if mode == CYCLE_THROUGH:
                b.seq[0] = u
                b.seqlen = 1
                found = b_dfs(&b, bit(u), b.full)
            else:
                for s in range(n):
                    cls = b.twin[s]
                    if (tried_root >> cls) & 1:
                        continue
                    tried_root |= bit(cls)
                    if not b.shadow[s]:
                        continue
                    if mode == CYCLE_AT_LEAST:
                        allowed = (b.full & ~below_incl(s)) | bit(s)
                    else:
                        allowed = b.full
                    b.seq[0] = s
                    b.seqlen = 1
                    if b_dfs(&b, bit(s), allowed):
                        found = True
                        break
                    b.seqlen = 0
        if mode == PATH_LONGEST:
            if b.best_len == 0:
                return None
            return ([b.best_seq[i] for i in range(b.best_len)],
                    [b.best_edges[i] for i in range(b.best_len - 1)])
        if not found:
            return None
        pos = b.best_len - 1 if mode == PATH_EXACT else b.best_len
        return ([b.best_seq[i] for i in range(b.best_len)],
                [b.best_edges[i] for i in range(pos)])
    finally:
        free(emask)
        free(b.shadow)
        free(b.pe_start)
        free(counts)
        free(b.twin)
        free(b.owner)
        free(b.stamp)
        free(b.slot_edge)
        free(b.slot_a)
        free(b.slot_b)
        free(b.seq)
        free(b.best_seq)
        free(b.best_edges)
        if b.pe_data != NULL:
            free(b.pe_data)
