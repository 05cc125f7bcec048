"""Ground sets, uniform set families, shadows and combinatorial shifting.

Sets are stored as integer bitmasks: element ``e`` of the ground set
``{1, ..., n}`` corresponds to bit ``e - 1``.  Sorting masks numerically gives
colexicographic order, which is the canonical order of every family.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

MAX_GROUND = 62


def bit(e: int) -> int:
    return 1 << (e - 1)


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for e in members:
        m |= 1 << (e - 1)
    return m


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def _check_ground(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_GROUND:
        raise ValueError(f"ground size must be in 1..{MAX_GROUND}, got {n!r}")


def level_masks(n: int, k: int) -> list[int]:
    """All k-subsets of [n] as masks, in colex (ascending numeric) order."""
    if k < 0 or k > n:
        return []
    if k == 0:
        return [0]
    out = []
    m = (1 << k) - 1
    limit = 1 << n
    while m < limit:
        out.append(m)
        # Gosper's hack: next integer with the same popcount
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r
    return out


@dataclass(frozen=True, order=True)
class ElementSet:
    """A subset of {1, ..., ground_size}."""

    ground_size: int
    mask: int

    def __post_init__(self) -> None:
        _check_ground(self.ground_size)
        if self.mask < 0 or self.mask >> self.ground_size:
            raise ValueError(f"members outside 1..{self.ground_size}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> ElementSet:
        members = list(members)
        for e in members:
            if not 1 <= e <= n:
                raise ValueError(f"element {e} outside 1..{n}")
        return cls(n, mask_of(members))

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, e: object) -> bool:
        return isinstance(e, int) and e >= 1 and bool(self.mask >> (e - 1) & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class SetFamily:
    """A k-uniform family of distinct subsets of [ground_size], colex-sorted.

    ``masks`` may be given in any order; duplicates and sets of the wrong
    size are rejected.
    """

    ground_size: int
    k: int
    masks: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_ground(self.ground_size)
        if self.k < 0 or self.k > self.ground_size:
            raise ValueError(f"uniformity {self.k} invalid for ground size {self.ground_size}")
        masks = tuple(sorted(self.masks))
        for a, b in zip(masks, masks[1:]):
            if a == b:
                raise ValueError(f"duplicate set {members_of(a)}")
        for m in masks:
            if m < 0 or m >> self.ground_size:
                raise ValueError(f"set {members_of(m)} leaves ground set 1..{self.ground_size}")
            if m.bit_count() != self.k:
                raise ValueError(f"set {members_of(m)} does not have {self.k} elements")
        object.__setattr__(self, "masks", masks)

    @classmethod
    def _trusted(cls, n: int, k: int, masks: Iterable[int]) -> SetFamily:
        # Skips validation; callers guarantee distinct k-sets inside [n].
        fam = object.__new__(cls)
        object.__setattr__(fam, "ground_size", n)
        object.__setattr__(fam, "k", k)
        object.__setattr__(fam, "masks", tuple(sorted(masks)))
        return fam

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> SetFamily:
        masks = []
        for s in sets:
            s = list(s)
            for e in s:
                if not 1 <= e <= n:
                    raise ValueError(f"element {e} outside 1..{n}")
            if len(set(s)) != len(s):
                raise ValueError(f"repeated element in {s}")
            masks.append(mask_of(s))
        return cls(n, k, tuple(masks))

    @classmethod
    def empty(cls, n: int, k: int) -> SetFamily:
        return cls(n, k, ())

    @classmethod
    def level(cls, n: int, k: int) -> SetFamily:
        return cls._trusted(n, k, level_masks(n, k))

    @cached_property
    def maskset(self) -> frozenset[int]:
        return frozenset(self.masks)

    def sets(self) -> list[tuple[int, ...]]:
        return [members_of(m) for m in self.masks]

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[ElementSet]:
        n = self.ground_size
        return (ElementSet(n, m) for m in self.masks)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, ElementSet):
            return item.mask in self.maskset
        if isinstance(item, int):
            return item in self.maskset
        try:
            return mask_of(item) in self.maskset  # type: ignore[arg-type]
        except TypeError:
            return False

    def issubset(self, other: SetFamily) -> bool:
        return self.maskset <= other.maskset

    def regrounded(self, n: int) -> SetFamily:
        """The same sets viewed inside a different ground set."""
        return SetFamily(n, self.k, self.masks)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.sets())
        return f"SetFamily(n={self.ground_size}, k={self.k}, [{body}])"


@dataclass(frozen=True)
class ShiftPair:
    i: int
    j: int

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise ValueError(f"shift pair needs 1 <= i < j, got ({self.i}, {self.j})")

    def check(self, n: int) -> None:
        if self.j > n:
            raise ValueError(f"shift pair ({self.i}, {self.j}) outside ground size {n}")


@dataclass(frozen=True)
class CrossInstance:
    """A (k-1)-uniform family ``a`` and a k-uniform family ``b`` on one ground set."""

    ground_size: int
    k: int
    a: SetFamily
    b: SetFamily

    def __post_init__(self) -> None:
        n = self.ground_size
        if self.a.ground_size != n or self.b.ground_size != n:
            raise ValueError("families of a cross instance must share the ground size")
        if self.b.k != self.k or self.a.k != self.k - 1:
            raise ValueError(f"expected a {self.k - 1}-uniform A and {self.k}-uniform B")

    def violations(self, strict: bool = True) -> list[str]:
        out = []
        if not is_cross_intersecting(self.a, self.b):
            out.append("A and B are not cross-intersecting")
        if self.k >= 1 and not shadow(self.b).issubset(self.a):
            out.append("shadow of B is not contained in A")
        if strict and not self.b.masks:
            out.append("B is empty")
        return out

    def size(self) -> int:
        return len(self.a) + len(self.b)


# -- operations ---------------------------------------------------------------


def shadow(fam: SetFamily) -> SetFamily:
    if fam.k == 0:
        raise ValueError("no shadow of 0-uniform family")
    out = set()
    for m in fam.masks:
        r = m
        while r:
            low = r & -r
            out.add(m ^ low)
            r ^= low
    return SetFamily._trusted(fam.ground_size, fam.k - 1, out)


def is_intersecting(fam: SetFamily) -> bool:
    ms = fam.masks
    for idx, a in enumerate(ms):
        for b in ms[idx + 1:]:
            if not a & b:
                return False
    return True


def is_cross_intersecting(a: SetFamily, b: SetFamily) -> bool:
    if a.ground_size != b.ground_size:
        raise ValueError(f"ground size mismatch: {a.ground_size} vs {b.ground_size}")
    return all(x & y for x in a.masks for y in b.masks)


def common_intersection(fam: SetFamily) -> ElementSet:
    m = full_mask(fam.ground_size)
    for s in fam.masks:
        m &= s
    return ElementSet(fam.ground_size, m)


def is_shifted(fam: SetFamily) -> bool:
    present = fam.maskset
    n = fam.ground_size
    for m in fam.masks:
        for j in range(2, n + 1):
            bj = 1 << (j - 1)
            if not m & bj:
                continue
            for i in range(1, j):
                bi = 1 << (i - 1)
                if not m & bi and (m ^ bj | bi) not in present:
                    return False
    return True


def _pair(p: ShiftPair | tuple[int, int], n: int) -> ShiftPair:
    if not isinstance(p, ShiftPair):
        p = ShiftPair(*p)
    p.check(n)
    return p


def shift_ij(fam: SetFamily, p: ShiftPair | tuple[int, int]) -> SetFamily:
    """Apply the shift S_{i<-j}: replace j by i wherever that creates no duplicate."""
    p = _pair(p, fam.ground_size)
    bi, bj = bit(p.i), bit(p.j)
    present = fam.maskset
    out = []
    for m in fam.masks:
        if m & bj and not m & bi:
            moved = m ^ bj | bi
            out.append(m if moved in present else moved)
        else:
            out.append(m)
    return SetFamily._trusted(fam.ground_size, fam.k, out)


def potential(fam: SetFamily) -> int:
    """Sum of all elements over all members; strictly drops under an effective shift."""
    return sum(sum(members_of(m)) for m in fam.masks)


def relabel(fam: SetFamily, perm: tuple[int, ...]) -> SetFamily:
    """Apply a permutation given as ``perm[e - 1] = image of e``."""
    out = []
    for m in fam.masks:
        out.append(mask_of(perm[e - 1] for e in members_of(m)))
    return SetFamily._trusted(fam.ground_size, fam.k, out)


def saturate12(fam: SetFamily) -> SetFamily:
    """Add every k-set containing both 1 and 2."""
    n, k = fam.ground_size, fam.k
    extra = [m << 2 | 0b11 for m in level_masks(n - 2, k - 2)] if k >= 2 else []
    return SetFamily._trusted(n, k, fam.maskset.union(extra))


def split_on_element(fam: SetFamily, x: int) -> tuple[SetFamily, SetFamily]:
    """Return (members avoiding x, members containing x with x removed)."""
    n = fam.ground_size
    if not 1 <= x <= n:
        raise ValueError(f"element {x} outside 1..{n}")
    bx = bit(x)
    without = [m for m in fam.masks if not m & bx]
    link = [m ^ bx for m in fam.masks if m & bx]
    if fam.k == 0:
        return SetFamily._trusted(n, 0, without), SetFamily._trusted(n, 0, ())
    return SetFamily._trusted(n, fam.k, without), SetFamily._trusted(n, fam.k - 1, link)


# -- shift traces -------------------------------------------------------------


@dataclass
class ShiftTrace:
    """Ordered log of the steps that transformed a family.

    Steps are tuples: ``("shift", i, j)``, ``("relabel", perm)``,
    ``("saturate12",)`` and ``("sweep",)``; the last marks the end of a full
    sweep over all pairs and does not change the family.
    """

    steps: list[tuple] = field(default_factory=list)

    def shift(self, i: int, j: int) -> None:
        self.steps.append(("shift", i, j))

    def apply(self, fam: SetFamily) -> SetFamily:
        for step in self.steps:
            kind = step[0]
            if kind == "shift":
                fam = shift_ij(fam, (step[1], step[2]))
            elif kind == "relabel":
                fam = relabel(fam, step[1])
            elif kind == "saturate12":
                fam = saturate12(fam)
            elif kind != "sweep":
                raise ValueError(f"unknown trace step {step!r}")
        return fam

    def to_text(self) -> str:
        lines = []
        for step in self.steps:
            kind = step[0]
            if kind == "shift":
                lines.append(f"SHIFT {step[1]} {step[2]}")
            elif kind == "relabel":
                lines.append(f"RELABEL {cycle_notation(step[1])} n={len(step[1])}")
            elif kind == "saturate12":
                lines.append("SATURATE12")
            else:
                lines.append("SWEEP")
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str) -> ShiftTrace:
        steps: list[tuple] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            word, _, rest = line.partition(" ")
            if word == "SHIFT":
                i, j = (int(t) for t in rest.split())
                steps.append(("shift", i, j))
            elif word == "RELABEL":
                cycles, _, size = rest.rpartition(" n=")
                steps.append(("relabel", parse_cycles(cycles, int(size))))
            elif word == "SATURATE12":
                steps.append(("saturate12",))
            elif word == "SWEEP":
                steps.append(("sweep",))
            else:
                raise ValueError(f"line {lineno}: unknown trace step {word!r}")
        return cls(steps)


def cycle_notation(perm: tuple[int, ...]) -> str:
    seen = set()
    parts = []
    for start in range(1, len(perm) + 1):
        if start in seen or perm[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        e = perm[start - 1]
        while e != start:
            cyc.append(e)
            seen.add(e)
            e = perm[e - 1]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    perm = list(range(1, n + 1))
    for body in text.strip().split(")"):
        body = body.strip().lstrip("(")
        if not body:
            continue
        cyc = [int(t) for t in body.split()]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a - 1] = b
    return tuple(perm)


# -- shifting to a fixpoint ---------------------------------------------------


def sweep_pairs(n: int, lo: int = 1) -> Iterator[tuple[int, int]]:
    """Pairs i < j with i >= lo, i ascending then j ascending."""
    for i in range(lo, n + 1):
        for j in range(i + 1, n + 1):
            yield i, j


def shift_to_fixpoint(
    fam: SetFamily,
    trace: ShiftTrace | None = None,
    lo: int = 1,
    on_shift: Callable[[int, int, SetFamily, SetFamily], None] | None = None,
) -> SetFamily:
    """Sweep the pairs with ``i >= lo`` until one full sweep changes nothing."""
    n = fam.ground_size
    while True:
        changed = False
        for i, j in sweep_pairs(n, lo):
            nxt = shift_ij(fam, (i, j))
            if nxt.masks != fam.masks:
                if on_shift is not None:
                    on_shift(i, j, fam, nxt)
                fam = nxt
                changed = True
                if trace is not None:
                    trace.shift(i, j)
        if trace is not None:
            trace.steps.append(("sweep",))
        if not changed:
            return fam


def shift_to_shifted(fam: SetFamily) -> tuple[SetFamily, ShiftTrace]:
    trace = ShiftTrace()
    return shift_to_fixpoint(fam, trace), trace
