"""Compress an intersecting family with no common element into a shifted one.

The sweep is the usual i-ascending, j-ascending pass over all shifts.  If a
single shift would give every member a common element ``i0``, that shift is
dropped, the two elements involved are relabelled to 1 and 2, the family is
shifted over pairs ``3 <= i < j``, every k-set through both 1 and 2 is added,
and a final full sweep finishes the job.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from .setfamily import (
    SetFamily,
    ShiftTrace,
    common_intersection,
    full_mask,
    is_intersecting,
    is_shifted,
    members_of,
    relabel,
    saturate12,
    shift_ij,
    shift_to_fixpoint,
    sweep_pairs,
)

log = logging.getLogger(__name__)


class ProcedureInvariantError(RuntimeError):
    def __init__(self, detail: str):
        super().__init__(f"procedure invariant violated: {detail}")
        self.detail = detail


@dataclass(frozen=True)
class CompressionResult:
    output: SetFamily
    trace: ShiftTrace
    relabel_triggered: bool
    permutation_used: tuple[int, ...]
    detected_pair: tuple[int, int] | None = None


def _require(cond: bool, detail: str) -> None:
    if not cond:
        raise ProcedureInvariantError(detail)


def relabel_permutation(n: int, i0: int, j0: int) -> tuple[int, ...]:
    """Transposition (1 i0), then the transposition taking j0's image to 2."""
    perm = list(range(1, n + 1))

    def swap(a: int, b: int) -> None:
        # compose a transposition of values after the current map
        for idx, v in enumerate(perm):
            if v == a:
                perm[idx] = b
            elif v == b:
                perm[idx] = a

    swap(1, i0)
    swap(perm[j0 - 1], 2)
    return tuple(perm)


def ff_compress(fam: SetFamily) -> CompressionResult:
    n, k = fam.ground_size, fam.k
    if k < 2:
        raise ValueError(f"compression needs k >= 2, got k={k}")
    if n < k + 1:
        raise ValueError(f"compression needs n >= k+1, got n={n}, k={k}")
    if not fam.masks:
        raise ValueError("compression needs a nonempty family")
    if not is_intersecting(fam):
        raise ValueError("family is not intersecting")
    if common_intersection(fam):
        raise ValueError(f"family has common elements {common_intersection(fam).members}")

    trace = ShiftTrace()
    cur = fam
    detected = None
    # (1) sweep, watching every effective shift for a newly created common element
    while detected is None:
        changed = False
        for i, j in sweep_pairs(n):
            nxt = shift_ij(cur, (i, j))
            if nxt.masks == cur.masks:
                continue
            common = common_intersection(nxt).mask
            if common:
                _require(common == 1 << (i - 1), f"S_{i}<-{j} created common set {members_of(common)}, expected {{{i}}}")
                detected = (i, j)
                break
            cur = nxt
            trace.shift(i, j)
            changed = True
        if detected is None:
            trace.steps.append(("sweep",))
            if not changed:
                _finish_checks(fam, cur)
                return CompressionResult(cur, trace, False, tuple(range(1, n + 1)))

    # (2) relabel i0 -> 1, j0 -> 2; the offending shift is discarded
    i0, j0 = detected
    before = cur
    _require(all(m & (1 << (i0 - 1) | 1 << (j0 - 1)) for m in before.masks),
             f"some member avoids both {i0} and {j0}")
    perm = relabel_permutation(n, i0, j0)
    cur = relabel(cur, perm)
    trace.steps.append(("relabel", perm))

    # (3) shift over 3 <= i < j; elements 1 and 2 stay put
    def note_transient(i: int, j: int, old: SetFamily, new: SetFamily) -> None:
        c = common_intersection(new).mask
        if c:
            log.debug("transient common element(s) %s after S_%d<-%d", members_of(c), i, j)

    cur = shift_to_fixpoint(cur, trace, lo=3, on_shift=note_transient)
    tail = full_mask(k + 1) ^ 0b11
    _require((tail | 1) in cur, "{1,3,...,k+1} missing after shifting over i >= 3")
    _require((tail | 2) in cur, "{2,3,...,k+1} missing after shifting over i >= 3")

    # (4) saturate: every k-set through 1 and 2
    cur = saturate12(cur)
    trace.steps.append(("saturate12",))
    top = full_mask(k + 1)
    boundary = [top ^ (1 << e) for e in range(k + 1)]
    _require(all(m in cur for m in boundary), "shadow of {1,...,k+1} not contained after saturation")

    # (5) full sweep; a second common element here would break the argument
    def no_second_detection(i: int, j: int, old: SetFamily, new: SetFamily) -> None:
        c = common_intersection(new).mask
        _require(not c, f"common element {members_of(c)} appeared after saturation at S_{i}<-{j}")

    cur = shift_to_fixpoint(cur, trace, on_shift=no_second_detection)
    _finish_checks(fam, cur)
    return CompressionResult(cur, trace, True, perm, detected)


def _finish_checks(src: SetFamily, out: SetFamily) -> None:
    _require(is_shifted(out), "output is not shifted")
    _require(is_intersecting(out), "output is not intersecting")
    _require(not common_intersection(out), "output has a common element")
    _require(len(out) >= len(src), "output smaller than input")

