# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract as ``_kernels_py``.

Index masks are 64-bit words, so every candidate list is limited to 64 sets.
"""
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil

cdef enum:
    MAXL = 64


cdef inline uint64_t low_mask(int L) nogil:
    if L >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << L) - 1


cdef struct ICtx:
    int L
    uint64_t sets[MAXL]
    uint64_t compat[MAXL]
    uint64_t avoid[MAXL]
    uint64_t preds[MAXL]
    bint use_preds
    bint require_empty
    bint use_bound
    int force_depth
    uint64_t force_bits
    int best
    uint64_t best_choice
    int64_t nodes


cdef inline int colour_bound(ICtx* c, uint64_t cand) nogil:
    cdef int count = 0
    cdef uint64_t q, v
    while cand:
        q = cand
        while q:
            v = q & (~q + 1)
            cand ^= v
            q &= ~c.compat[ctz64(q)]
        count += 1
    return count


cdef void idfs(ICtx* c, int t, uint64_t chosen, uint64_t cand, uint64_t common, int size) nogil:
    cdef uint64_t tb, cm, low
    cdef bint inc, exc
    c.nodes += 1
    if t == c.L:
        if (not c.require_empty or common == 0) and size > c.best:
            c.best = size
            c.best_choice = chosen
        return
    if c.use_bound:
        if size + popcount64(cand) <= c.best:
            return
        if c.require_empty and common:
            cm = common
            while cm:
                if not (cand & c.avoid[ctz64(cm)]):
                    return
                cm &= cm - 1
        if size + colour_bound(c, cand) <= c.best:
            return
    tb = (<uint64_t>1) << t
    if t < c.force_depth:
        inc = (c.force_bits >> t) & 1
        exc = not inc
    else:
        inc = True
        exc = True
    if inc and (cand & tb) and (not c.use_preds or not (c.preds[t] & ~chosen)):
        idfs(c, t + 1, chosen | tb, cand & c.compat[t] & ~tb, common & c.sets[t], size + 1)
    if exc:
        idfs(c, t + 1, chosen, cand & ~tb, common, size)


def search_intersecting(sets, int n, bint require_empty, bint use_bound, preds=None,
                        int force_depth=0, force_bits=0):
    cdef ICtx c
    cdef int L = len(sets)
    cdef int s, t, e
    if L > MAXL:
        raise ValueError(f"compiled kernel handles at most {MAXL} candidate sets, got {L}")
    c.L = L
    for t in range(L):
        c.sets[t] = sets[t]
    for t in range(L):
        c.compat[t] = 0
        for s in range(L):
            if c.sets[s] & c.sets[t]:
                c.compat[t] |= (<uint64_t>1) << s
    for e in range(n):
        c.avoid[e] = 0
        for t in range(L):
            if not ((c.sets[t] >> e) & 1):
                c.avoid[e] |= (<uint64_t>1) << t
    c.use_preds = preds is not None
    if c.use_preds:
        for t in range(L):
            c.preds[t] = preds[t]
    c.require_empty = require_empty
    c.use_bound = use_bound
    c.force_depth = force_depth
    c.force_bits = force_bits
    c.best = -1
    c.best_choice = 0
    c.nodes = 0
    with nogil:
        idfs(&c, 0, 0, low_mask(L), low_mask(n), 0)
    return c.best, int(c.best_choice), int(c.nodes)


cdef struct XCtx:
    int L
    uint64_t meet[MAXL]
    uint64_t shad[MAXL]
    uint64_t preds[MAXL]
    bint use_preds
    bint strict
    bint use_bound
    int force_depth
    uint64_t force_bits
    int best
    uint64_t best_choice
    int64_t nodes


cdef void xdfs(XCtx* c, int t, uint64_t chosen, uint64_t astar, uint64_t sh, int size) nogil:
    cdef uint64_t tb
    cdef bint inc, exc
    cdef int val
    c.nodes += 1
    if sh & ~astar:
        return
    if t == c.L:
        if size or not c.strict:
            val = popcount64(astar) + size
            if val > c.best:
                c.best = val
                c.best_choice = chosen
        return
    if c.use_bound and popcount64(astar) + size + (c.L - t) <= c.best:
        return
    tb = (<uint64_t>1) << t
    if t < c.force_depth:
        inc = (c.force_bits >> t) & 1
        exc = not inc
    else:
        inc = True
        exc = True
    if inc and (not c.use_preds or not (c.preds[t] & ~chosen)):
        xdfs(c, t + 1, chosen | tb, astar & c.meet[t], sh | c.shad[t], size + 1)
    if exc:
        xdfs(c, t + 1, chosen, astar, sh, size)


def search_cross(meet, shad, int a_size, bint strict, bint use_bound, preds=None,
                 int force_depth=0, force_bits=0):
    cdef XCtx c
    cdef int L = len(meet)
    cdef int t
    if L > MAXL or a_size > 64:
        raise ValueError(f"compiled kernel handles at most {MAXL} sets per level")
    c.L = L
    for t in range(L):
        c.meet[t] = meet[t]
        c.shad[t] = shad[t]
    c.use_preds = preds is not None
    if c.use_preds:
        for t in range(L):
            c.preds[t] = preds[t]
    c.strict = strict
    c.use_bound = use_bound
    c.force_depth = force_depth
    c.force_bits = force_bits
    c.best = -1
    c.best_choice = 0
    c.nodes = 0
    with nogil:
        xdfs(&c, 0, 0, low_mask(a_size), 0, 0)
    return c.best, int(c.best_choice), int(c.nodes)
