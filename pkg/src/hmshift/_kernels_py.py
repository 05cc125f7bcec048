"""Pure-Python search kernels.  Mirrors ``_kernels.pyx`` exactly.

Both kernels walk the binary include/exclude tree over a list of k-sets in
colex order, include branch first.  Candidate k-sets are addressed by their
index ``t`` in that list; index masks are plain ints.

``preds[t]``, when given, is the index mask of the k-sets that must already
be chosen before ``t`` may be (its immediate shift predecessors); this
restricts the walk to shifted families.

``force_depth``/``force_bits`` pin the decisions for the first indices, so a
search can be split into independent subtrees.
"""
from __future__ import annotations

import sys


def _compat(sets):
    L = len(sets)
    return [sum(1 << s for s in range(L) if sets[s] & sets[t]) for t in range(L)]


def _avoid(sets, n):
    L = len(sets)
    return [sum(1 << t for t in range(L) if not sets[t] >> e & 1) for e in range(n)]


def search_intersecting(sets, n, require_empty, use_bound, preds=None, force_depth=0, force_bits=0):
    """Largest intersecting subfamily of ``sets``; returns (best, choice, nodes).

    ``best`` is -1 when no subfamily qualifies.  With ``require_empty`` the
    chosen sets must have no common element (so the empty choice never counts).
    """
    L = len(sets)
    compat = _compat(sets)
    avoid = _avoid(sets, n)
    full_common = (1 << n) - 1
    state = [-1, 0, 0]  # best, choice, nodes

    def colour_bound(cand):
        # greedy partition into classes of pairwise disjoint sets
        count = 0
        while cand:
            q = cand
            while q:
                v = q & -q
                cand ^= v
                q &= ~compat[v.bit_length() - 1]
            count += 1
        return count

    def dfs(t, chosen, cand, common, size):
        state[2] += 1
        if t == L:
            if (not require_empty or common == 0) and size > state[0]:
                state[0] = size
                state[1] = chosen
            return
        if use_bound:
            best = state[0]
            if size + cand.bit_count() <= best:
                return
            if require_empty and common:
                c = common
                while c:
                    low = c & -c
                    if not cand & avoid[low.bit_length() - 1]:
                        return
                    c ^= low
            if size + colour_bound(cand) <= best:
                return
        tb = 1 << t
        if t < force_depth:
            inc = force_bits >> t & 1
            exc = not inc
        else:
            inc = exc = True
        if inc and cand & tb and (preds is None or not preds[t] & ~chosen):
            dfs(t + 1, chosen | tb, cand & compat[t] & ~tb, common & sets[t], size + 1)
        if exc:
            dfs(t + 1, chosen, cand & ~tb, common, size)

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * L + 200))
    try:
        dfs(0, 0, (1 << L) - 1, full_common, 0)
    finally:
        sys.setrecursionlimit(old)
    return state[0], state[1], state[2]


def search_cross(meet, shad, a_size, strict, use_bound, preds=None, force_depth=0, force_bits=0):
    """Maximise |A*(B)| + |B| over subfamilies B of the k-level.

    ``meet[t]`` is the mask of (k-1)-sets meeting k-set ``t``; ``shad[t]`` the
    mask of its shadow.  A*(B) is the intersection of ``meet`` over B, and B
    is feasible when its shadow lies inside A*(B).  Returns (best, choice, nodes).
    """
    L = len(meet)
    state = [-1, 0, 0]

    def dfs(t, chosen, astar, sh, size):
        state[2] += 1
        if sh & ~astar:
            return
        if t == L:
            if size or not strict:
                val = astar.bit_count() + size
                if val > state[0]:
                    state[0] = val
                    state[1] = chosen
            return
        if use_bound and astar.bit_count() + size + (L - t) <= state[0]:
            return
        tb = 1 << t
        if t < force_depth:
            inc = force_bits >> t & 1
            exc = not inc
        else:
            inc = exc = True
        if inc and (preds is None or not preds[t] & ~chosen):
            dfs(t + 1, chosen | tb, astar & meet[t], sh | shad[t], size + 1)
        if exc:
            dfs(t + 1, chosen, astar, sh, size)

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * L + 200))
    try:
        dfs(0, 0, (1 << a_size) - 1, 0, 0)
    finally:
        sys.setrecursionlimit(old)
    return state[0], state[1], state[2]
