"""Seeded random test instances."""
from __future__ import annotations

import random

from ..setfamily import CrossInstance, SetFamily, level_masks, shift_ij, sweep_pairs

MAX_RESTARTS = 200


class GenerationError(RuntimeError):
    pass


def _rng(kind: str, n: int, k: int, seed: int) -> random.Random:
    return random.Random(f"{kind}:{n}:{k}:{seed}")


def random_family(n: int, k: int, seed: int) -> SetFamily:
    """Any k-uniform family; each set kept with a per-family random density."""
    rng = _rng("any", n, k, seed)
    density = rng.random()
    return SetFamily._trusted(n, k, [m for m in level_masks(n, k) if rng.random() < density])


def _and_all(masks: list[int], n: int) -> int:
    c = (1 << n) - 1
    for m in masks:
        c &= m
    return c


def random_intersecting(n: int, k: int, seed: int) -> SetFamily:
    """An intersecting family, possibly with a common element."""
    rng = _rng("int", n, k, seed)
    order = level_masks(n, k)
    rng.shuffle(order)
    target = rng.randint(1, len(order))
    chosen: list[int] = []
    for m in order:
        if len(chosen) >= target:
            break
        if all(m & c for c in chosen):
            chosen.append(m)
    return SetFamily._trusted(n, k, chosen)


def _random_hm(n: int, k: int, seed: int) -> SetFamily:
    if k < 2 or n < k + 1:
        raise ValueError(f"need k >= 2 and n >= k+1, got n={n}, k={k}")
    rng = _rng("hm", n, k, seed)
    level = level_masks(n, k)
    for _ in range(MAX_RESTARTS):
        order = level[:]
        rng.shuffle(order)
        target = rng.randint(2, max(2, len(order) // 2))
        chosen: list[int] = []
        for m in order:
            if len(chosen) >= target:
                break
            if all(m & c for c in chosen):
                chosen.append(m)
        common = _and_all(chosen, n)
        while common:
            e = common & -common
            avoiders = [m for m in order if not m & e and m not in chosen and all(m & c for c in chosen)]
            if not avoiders:
                break
            chosen.append(rng.choice(avoiders))
            common = _and_all(chosen, n)
        if not common:
            return SetFamily._trusted(n, k, chosen)
    raise GenerationError(f"no intersecting family without common element found for n={n}, k={k}")


def shift_pair_to_fixpoint(a: SetFamily, b: SetFamily) -> tuple[SetFamily, SetFamily]:
    """Apply the same shift sequence to both families until both are shifted."""
    n = b.ground_size
    while True:
        changed = False
        for i, j in sweep_pairs(n):
            a2, b2 = shift_ij(a, (i, j)), shift_ij(b, (i, j))
            if a2.masks != a.masks or b2.masks != b.masks:
                a, b = a2, b2
                changed = True
        if not changed:
            return a, b


def _random_cross(n: int, k: int, seed: int, shift: bool) -> CrossInstance:
    if k < 2 or 2 * k - 1 > n:
        raise ValueError(f"need k >= 2 and 2k-1 <= n, got n={n}, k={k}")
    rng = _rng("cross", n, k, seed)
    order = level_masks(n, k)
    rng.shuffle(order)
    target = rng.randint(1, len(order))
    chosen: list[int] = []
    shade: set[int] = set()
    for m in order:
        if len(chosen) >= target:
            break
        sub = [m ^ (1 << e) for e in range(n) if m >> e & 1]
        # every shadow set of the enlarged B must meet every member of it
        if all(s & m for s in shade) and all(all(s & c for c in chosen) for s in sub):
            chosen.append(m)
            shade.update(sub)
    b = SetFamily._trusted(n, k, chosen)
    a = SetFamily._trusted(n, k - 1, [x for x in level_masks(n, k - 1) if all(x & m for m in chosen)])
    if shift:
        a, b = shift_pair_to_fixpoint(a, b)
    return CrossInstance(n, k, a, b)


def gen_random_instance(kind: str, n: int, k: int, seed: int, shift: bool = False):
    """Deterministic in (kind, n, k, seed).

    ``hm`` gives an intersecting k-uniform family with no common element;
    ``cross`` a CrossInstance meeting the cross-intersection hypotheses,
    shifted when ``shift`` is set.
    """
    if kind == "hm":
        return _random_hm(n, k, seed)
    if kind == "cross":
        return _random_cross(n, k, seed, shift)
    raise ValueError(f"unknown instance kind {kind!r}")
