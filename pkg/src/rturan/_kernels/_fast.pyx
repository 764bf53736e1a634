# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot search loops (see pure.py for the reference).

Same signatures and bit-identical results as the pure backend; list inputs
are flattened into C arrays up front.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t

BACKEND = "cython"


cdef inline uint64_t _next_u64(uint64_t *state) nogil:
    cdef uint64_t x = state[0]
    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    state[0] = x
    return x * <uint64_t>0x2545F4914F6CDD1D


cdef inline int64_t _randbelow(uint64_t *state, int64_t n) nogil:
    return <int64_t>((_next_u64(state) >> 33) % <uint64_t>n)


cdef struct Flat:
    int m                 # number of edges
    int p                 # pattern edge count per embedding
    int n_emb
    int *conf_idx
    int *conf_off         # m + 1
    int *emb               # n_emb * p
    int *bl_idx            # embeddings grouped by their last (max) edge
    int *bl_off            # m + 1


cdef int _flat_init(Flat *f, int num_edges, conflicts, emb_edges) except -1:
    cdef int i, j, t, row
    f.m = num_edges
    f.n_emb = len(emb_edges)
    f.p = len(emb_edges[0]) if f.n_emb > 0 else 0
    if f.p > 64:
        raise ValueError("pattern edge count above compiled kernel cap (64)")
    f.conf_off = <int*>malloc((num_edges + 1) * sizeof(int))
    t = 0
    for i in range(num_edges):
        f.conf_off[i] = t
        t += len(conflicts[i])
    f.conf_off[num_edges] = t
    f.conf_idx = <int*>malloc(max(t, 1) * sizeof(int))
    t = 0
    for i in range(num_edges):
        for j in conflicts[i]:
            f.conf_idx[t] = j
            t += 1
    f.emb = <int*>malloc(max(f.n_emb * f.p, 1) * sizeof(int))
    by_last = [[] for _ in range(num_edges)]
    for row in range(f.n_emb):
        edges = emb_edges[row]
        for j in range(f.p):
            f.emb[row * f.p + j] = edges[j]
        by_last[max(edges)].append(row)
    f.bl_off = <int*>malloc((num_edges + 1) * sizeof(int))
    f.bl_idx = <int*>malloc(max(f.n_emb, 1) * sizeof(int))
    t = 0
    for i in range(num_edges):
        f.bl_off[i] = t
        for row in by_last[i]:
            f.bl_idx[t] = row
            t += 1
    f.bl_off[num_edges] = t
    return 0


cdef void _flat_free(Flat *f) nogil:
    free(f.conf_idx)
    free(f.conf_off)
    free(f.emb)
    free(f.bl_idx)
    free(f.bl_off)


cdef inline int _copy_satisfied(Flat *f, int *colors, int row,
                                int k, int exactly) nogil:
    cdef int cols[64]
    cdef int i, j, uniq, ct, c
    cdef int p = f.p
    for i in range(p):
        cols[i] = colors[f.emb[row * p + i]]
    uniq = 0
    for i in range(p):
        c = cols[i]
        ct = 0
        for j in range(p):
            if cols[j] == c:
                ct += 1
        if ct == 1:
            uniq += 1
    if exactly:
        return uniq == k
    return uniq >= k


cdef int _avoid_dfs(Flat *f, int *colors, int i, int k, int exactly,
                    int max_colors, int64_t limit, int64_t *nodes) nogil:
    # returns 1 found (colors filled), 0 none, -1 budget
    cdef int used, c, j, e, bad, r
    if i == f.m:
        return 1
    used = 0
    for j in range(i):
        if colors[j] >= used:
            used = colors[j] + 1
    cdef int top = used + 1
    if top > max_colors:
        top = max_colors
    for c in range(top):
        bad = 0
        for j in range(f.conf_off[i], f.conf_off[i + 1]):
            if colors[f.conf_idx[j]] == c:
                bad = 1
                break
        if bad:
            continue
        nodes[0] += 1
        if limit >= 0 and nodes[0] > limit:
            return -1
        colors[i] = c
        bad = 0
        for j in range(f.bl_off[i], f.bl_off[i + 1]):
            if _copy_satisfied(f, colors, f.bl_idx[j], k, exactly):
                bad = 1
                break
        if not bad:
            r = _avoid_dfs(f, colors, i + 1, k, exactly, max_colors, limit, nodes)
            if r != 0:
                return r
        colors[i] = -1
    return 0


def find_avoiding_coloring(int num_edges, conflicts, emb_edges,
                           int k, bint exactly, int max_colors, budget=None):
    cdef Flat f
    cdef int64_t nodes = 0
    cdef int64_t limit = -1 if budget is None else <int64_t>budget
    cdef int *colors
    cdef int i, r
    if num_edges == 0:
        return [], 0, True
    _flat_init(&f, num_edges, conflicts, emb_edges)
    colors = <int*>malloc(num_edges * sizeof(int))
    for i in range(num_edges):
        colors[i] = -1
    try:
        r = _avoid_dfs(&f, colors, 0, k, exactly, max_colors, limit, &nodes)
        if r == 1:
            return [colors[i] for i in range(num_edges)], <object>nodes, True
        if r == -1:
            return None, <object>nodes, False
        return None, <object>nodes, True
    finally:
        free(colors)
        _flat_free(&f)


def unique_counts(colors, emb_edges):
    cdef int n_emb = len(emb_edges)
    cdef int p = len(emb_edges[0]) if n_emb else 0
    cdef int m = len(colors)
    cdef int *cols = <int*>malloc(max(m, 1) * sizeof(int))
    cdef int copy[64]
    cdef int i, j, t, c, ct, uniq
    for i in range(m):
        cols[i] = colors[i]
    out = []
    try:
        for i in range(n_emb):
            edges = emb_edges[i]
            for j in range(p):
                copy[j] = cols[<int>edges[j]]
            uniq = 0
            for j in range(p):
                c = copy[j]
                ct = 0
                for t in range(p):
                    if copy[t] == c:
                        ct += 1
                if ct == 1:
                    uniq += 1
            out.append(uniq)
        return out
    finally:
        free(cols)


def sample_and_check(int num_edges, conflicts, emb_edges,
                     int k, bint exactly, long long num_samples,
                     unsigned long long seed, bint skip_rainbow=True):
    cdef Flat f
    cdef uint64_t state = seed if seed != 0 else <uint64_t>0x9E3779B97F4A7C15
    cdef int *colors = <int*>malloc(max(num_edges, 1) * sizeof(int))
    cdef int *options = <int*>malloc(max(num_edges + 1, 1) * sizeof(int))
    cdef long long s, checked = 0, rainbow_skipped = 0
    cdef int i, j, c, used, n_opt, bad, row
    _flat_init(&f, num_edges, conflicts, emb_edges)
    try:
        for s in range(num_samples):
            used = 0
            for i in range(num_edges):
                n_opt = 0
                for c in range(used):
                    bad = 0
                    for j in range(f.conf_off[i], f.conf_off[i + 1]):
                        if colors[f.conf_idx[j]] == c:
                            bad = 1
                            break
                    if not bad:
                        options[n_opt] = c
                        n_opt += 1
                options[n_opt] = used
                n_opt += 1
                c = options[_randbelow(&state, n_opt)]
                colors[i] = c
                if c == used:
                    used += 1
            if skip_rainbow and used == num_edges:
                rainbow_skipped += 1
                continue
            checked += 1
            bad = 0
            for row in range(f.n_emb):
                if _copy_satisfied(&f, colors, row, k, exactly):
                    bad = 1
                    break
            if not bad:
                return {"checked": checked, "rainbow_skipped": rainbow_skipped,
                        "counterexample": [colors[i] for i in range(num_edges)],
                        "sample_index": s}
        return {"checked": checked, "rainbow_skipped": rainbow_skipped,
                "counterexample": None, "sample_index": None}
    finally:
        free(colors)
        free(options)
        _flat_free(&f)
