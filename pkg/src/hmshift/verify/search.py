"""Exact maximisation of intersecting and cross-intersecting families.

Three routes per problem:

``naive``
    Tabulates every subfamily of the level with a vectorised subset DP
    (numpy); independent of the search kernels.
``bnb``
    Branch and bound over the colex-ordered level (``kernels`` module).
``shifted``
    The same walk restricted to shifted families, with no optimistic
    pruning.
"""
from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import kernels
from ..extremal import cross_bound, ekr_bound, hm_bound
from ..setfamily import (
    CrossInstance,
    SetFamily,
    common_intersection,
    is_intersecting,
    is_shifted,
    level_masks,
    shadow,
)

MODES = ("naive", "bnb", "shifted")
NAIVE_LIMIT = 20
KERNEL_LIMIT = 56
WORD = 64


class EnvelopeError(ValueError):
    """The requested size is outside what the chosen mode can handle."""


@dataclass
class SearchReport:
    problem: str
    n: int
    k: int
    mode: str
    maximum: int
    witness: SetFamily | CrossInstance
    nodes: int
    elapsed: float
    bound: int
    verdict: str
    workers: int = 1
    backend: str = ""
    witness_problems: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        if isinstance(self.witness, CrossInstance):
            witness = {"A": self.witness.a.sets(), "B": self.witness.b.sets()}
        else:
            witness = self.witness.sets()
        return {
            "problem": self.problem,
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "maximum": self.maximum,
            "bound": self.bound,
            "verdict": self.verdict,
            "witness": witness,
            "witness_valid": not self.witness_problems,
            "witness_problems": self.witness_problems,
            "nodes": self.nodes,
            "elapsed_s": round(self.elapsed, 6),
            "workers": self.workers,
            "backend": self.backend,
        }


# -- problem encodings ----------------------------------------------------------


def shift_predecessors(level: list[int]) -> list[int]:
    """For each set, the index mask of the sets one elementary shift below it."""
    index = {m: t for t, m in enumerate(level)}
    top = level[-1].bit_length() if level else 0
    preds = []
    for m in level:
        p = 0
        for j in range(top):
            if not m >> j & 1:
                continue
            for i in range(j):
                if not m >> i & 1:
                    p |= 1 << index[m ^ (1 << j) | (1 << i)]
        preds.append(p)
    return preds


def cross_tables(n: int, k: int) -> tuple[list[int], list[int], list[int], list[int]]:
    """Level masks for B and A, plus per-B-set masks over A-indices of
    the (k-1)-sets meeting it and of its shadow."""
    blevel = level_masks(n, k)
    alevel = level_masks(n, k - 1)
    aindex = {m: i for i, m in enumerate(alevel)}
    meet, shad = [], []
    for b in blevel:
        meet.append(sum(1 << i for i, a in enumerate(alevel) if a & b))
        s, r = 0, b
        while r:
            low = r & -r
            s |= 1 << aindex[b ^ low]
            r ^= low
        shad.append(s)
    return blevel, alevel, meet, shad


def _pick(level: list[int], choice: int) -> list[int]:
    return [m for t, m in enumerate(level) if choice >> t & 1]


# -- naive: subset DP -------------------------------------------------------------


def _popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.int64)


def naive_intersecting(sets: list[int], n: int, require_empty: bool) -> tuple[int, int, int]:
    L = len(sets)
    N = 1 << L
    idx = np.arange(N, dtype=np.uint64)
    ok = np.zeros(N, dtype=bool)
    ok[0] = True
    common = np.empty(N, dtype=np.uint64)
    common[0] = (1 << n) - 1
    for t in range(L):
        h = 1 << t
        meets = np.uint64(sum(1 << s for s in range(t) if sets[s] & sets[t]))
        ok[h:2 * h] = ok[:h] & ((idx[:h] & ~meets) == 0)
        common[h:2 * h] = common[:h] & np.uint64(sets[t])
    valid = ok & (common == 0) if require_empty else ok
    score = np.where(valid, _popcount(idx), -1)
    best = int(np.argmax(score))
    return int(score[best]), best, N


def naive_cross(meet: list[int], shad: list[int], a_size: int, strict: bool) -> tuple[int, int, int]:
    L = len(meet)
    N = 1 << L
    idx = np.arange(N, dtype=np.uint64)
    astar = np.empty(N, dtype=np.uint64)
    astar[0] = (1 << a_size) - 1
    sh = np.zeros(N, dtype=np.uint64)
    for t in range(L):
        h = 1 << t
        astar[h:2 * h] = astar[:h] & np.uint64(meet[t])
        sh[h:2 * h] = sh[:h] | np.uint64(shad[t])
    feasible = (sh & ~astar) == 0
    if strict:
        feasible[0] = False
    score = np.where(feasible, _popcount(astar) + _popcount(idx), -1)
    best = int(np.argmax(score))
    return int(score[best]), best, N


# -- kernel dispatch ----------------------------------------------------------------


def _call(backend: str, name: str, args: tuple, force_depth: int, force_bits: int):
    fn = getattr(kernels.load(backend), name)
    return fn(*args, force_depth=force_depth, force_bits=force_bits)


def run_kernel(name: str, args: tuple, L: int, workers: int = 1, backend: str | None = None):
    """Run a search kernel, optionally split over worker processes.

    The first decisions are pinned per task and tasks are listed in the
    order a single walk would visit them, so the maximum and the witness
    match the single-worker result.
    """
    backend = backend or kernels.BACKEND
    if workers <= 1 or L < 2:
        return _call(backend, name, args, 0, 0)
    depth = min(L, math.ceil(math.log2(workers)) + 2)
    prefixes = list(itertools.product((1, 0), repeat=depth))
    tasks = [sum(b << t for t, b in enumerate(p)) for p in prefixes]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_call, backend, name, args, depth, bits) for bits in tasks]
        results = [f.result() for f in futures]
    best = max(r[0] for r in results)
    choice = next(r[1] for r in results if r[0] == best)
    return best, choice, sum(r[2] for r in results)


def _check_mode(mode: str, L: int, extra: int = 0) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    if mode == "naive" and L > NAIVE_LIMIT:
        raise EnvelopeError(f"naive mode enumerates 2^{L} subfamilies (limit 2^{NAIVE_LIMIT}); use --mode bnb")
    if mode != "naive" and L > KERNEL_LIMIT:
        raise EnvelopeError(f"level has {L} sets, above the {KERNEL_LIMIT}-set envelope of {mode} mode")
    if extra > WORD:
        raise EnvelopeError(f"(k-1)-level has {extra} sets; kernels handle at most {WORD}")


# -- public searches -----------------------------------------------------------------


def _search_intersecting(problem: str, n: int, k: int, mode: str, workers: int, require_empty: bool, bound: int):
    level = level_masks(n, k)
    _check_mode(mode, len(level))
    start = time.perf_counter()
    if mode == "naive":
        best, choice, nodes = naive_intersecting(level, n, require_empty)
        backend = "numpy"
    else:
        preds = shift_predecessors(level) if mode == "shifted" else None
        args = (level, n, require_empty, mode == "bnb", preds)
        best, choice, nodes = run_kernel("search_intersecting", args, len(level), workers)
        backend = kernels.BACKEND
    elapsed = time.perf_counter() - start
    if best < 0:
        raise RuntimeError(f"no admissible family found for {problem} at n={n}, k={k}")
    witness = SetFamily(n, k, tuple(_pick(level, choice)))
    problems = []
    if not is_intersecting(witness):
        problems.append("witness is not intersecting")
    if require_empty and common_intersection(witness):
        problems.append("witness has a common element")
    if mode == "shifted" and not is_shifted(witness):
        problems.append("witness is not shifted")
    if len(witness) != best:
        problems.append("witness size differs from the reported maximum")
    return SearchReport(problem, n, k, mode, best, witness, nodes, elapsed, bound,
                        "equal" if best == bound else "violation", max(workers, 1), backend, problems)


def search_max_hm(n: int, k: int, mode: str = "bnb", workers: int = 1) -> SearchReport:
    """Largest intersecting k-uniform family on [n] with no common element."""
    bound = hm_bound(n, k)
    if k < 2:
        raise ValueError("k must be at least 2: intersecting 1-uniform families always share their element")
    return _search_intersecting("hm", n, k, mode, workers, True, bound)


def search_max_ekr(n: int, k: int, mode: str = "bnb", workers: int = 1) -> SearchReport:
    bound = ekr_bound(n, k)
    return _search_intersecting("ekr", n, k, mode, workers, False, bound)


def search_max_cross(n: int, k: int, mode: str = "bnb", workers: int = 1) -> SearchReport:
    """Largest |A| + |B| over cross-intersecting pairs with B nonempty and shadow(B) in A."""
    bound = cross_bound(n, k)
    if k < 2:
        raise ValueError("k must be at least 2: for k = 1 the empty set in A meets nothing")
    blevel, alevel, meet, shad = cross_tables(n, k)
    _check_mode(mode, len(blevel), len(alevel) if mode != "naive" else 0)
    start = time.perf_counter()
    if mode == "naive":
        best, choice, nodes = naive_cross(meet, shad, len(alevel), True)
        backend = "numpy"
    else:
        preds = shift_predecessors(blevel) if mode == "shifted" else None
        args = (meet, shad, len(alevel), True, mode == "bnb", preds)
        best, choice, nodes = run_kernel("search_cross", args, len(blevel), workers)
        backend = kernels.BACKEND
    elapsed = time.perf_counter() - start
    if best < 0:
        raise RuntimeError(f"no admissible cross instance for n={n}, k={k}")
    b = SetFamily(n, k, tuple(_pick(blevel, choice)))
    a = optimal_A_for_B(n, k, b)
    if a is None:
        raise RuntimeError("search returned an infeasible B")
    inst = CrossInstance(n, k, a, b)
    problems = inst.violations(strict=True)
    if mode == "shifted" and not (is_shifted(a) and is_shifted(b)):
        problems.append("witness is not shifted")
    if inst.size() != best:
        problems.append("witness size differs from the reported maximum")
    return SearchReport("cross", n, k, mode, best, inst, nodes, elapsed, bound,
                        "equal" if best == bound else "violation", max(workers, 1), backend, problems)


def optimal_A_for_B(n: int, k: int, b: SetFamily, relaxed: bool = False) -> SetFamily | None:
    """Every (k-1)-set meeting all of ``b``, or None when that misses part of shadow(b).

    For an empty ``b`` the relaxed reading returns the whole (k-1)-level;
    the strict reading requires ``b`` to be nonempty.
    """
    if b.ground_size != n or b.k != k:
        raise ValueError(f"b must be {k}-uniform over [{n}]")
    if not b.masks:
        if not relaxed:
            raise ValueError("B must be nonempty (use relaxed=True to allow it)")
        return SetFamily.level(n, k - 1)
    astar = SetFamily._trusted(n, k - 1, [a for a in level_masks(n, k - 1) if all(a & m for m in b.masks)])
    if k >= 1 and not shadow(b).issubset(astar):
        return None
    return astar
