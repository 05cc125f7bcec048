"""Line-oriented text format for families and cross instances.

A family file::

    # optional comments
    n=5 k=2
    1 2
    1 3

A cross-instance file has the same header (``k`` is the uniformity of B)
followed by an ``[A]`` section of (k-1)-sets and a ``[B]`` section of k-sets.
The empty set is written as ``-``.
"""
from __future__ import annotations

import re

from .setfamily import CrossInstance, SetFamily, mask_of, members_of

_HEADER = re.compile(r"^n\s*=\s*(-?\d+)\s+k\s*=\s*(-?\d+)$")


class ParseError(ValueError):
    def __init__(self, line: int, col: int, msg: str):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.line = line
        self.col = col
        self.msg = msg


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw, stripped


def _header(lineno: int, raw: str, stripped: str) -> tuple[int, int]:
    m = _HEADER.match(stripped)
    if not m:
        raise ParseError(lineno, 1, f"malformed header {stripped!r}; expected 'n=<int> k=<int>'")
    n, k = int(m.group(1)), int(m.group(2))
    if not 1 <= n <= 62:
        raise ParseError(lineno, raw.index("n") + 1, f"ground size {n} outside 1..62")
    if not 0 <= k <= n:
        raise ParseError(lineno, raw.index("k") + 1, f"uniformity {k} outside 0..{n}")
    return n, k


def _set_line(lineno: int, raw: str, n: int, k: int) -> int:
    stripped = raw.strip()
    if stripped == "-":
        elems: list[int] = []
    else:
        elems = []
        for tok in re.finditer(r"\S+", raw):
            col = tok.start() + 1
            try:
                e = int(tok.group())
            except ValueError:
                raise ParseError(lineno, col, f"not an integer: {tok.group()!r}") from None
            if not 1 <= e <= n:
                raise ParseError(lineno, col, f"element {e} out of range 1..{n}")
            if e in elems:
                raise ParseError(lineno, col, f"element {e} repeated")
            elems.append(e)
    if len(elems) != k:
        raise ParseError(lineno, 1, f"wrong cardinality: set has {len(elems)} elements, expected {k}")
    return mask_of(elems)


def _add(seen: dict[int, int], m: int, lineno: int) -> None:
    if m in seen:
        raise ParseError(lineno, 1, f"duplicate set (first seen on line {seen[m]})")
    seen[m] = lineno


def parse_family(text: str) -> SetFamily:
    it = _lines(text)
    try:
        n, k = _header(*next(it))
    except StopIteration:
        raise ParseError(1, 1, "missing header 'n=<int> k=<int>'") from None
    seen: dict[int, int] = {}
    for lineno, raw, _ in it:
        _add(seen, _set_line(lineno, raw, n, k), lineno)
    return SetFamily._trusted(n, k, seen)


def write_family(fam: SetFamily) -> str:
    lines = [f"n={fam.ground_size} k={fam.k}"]
    lines += [_fmt(m) for m in fam.masks]
    return "\n".join(lines) + "\n"


def _fmt(m: int) -> str:
    return " ".join(map(str, members_of(m))) or "-"


def parse_cross(text: str) -> CrossInstance:
    it = _lines(text)
    try:
        n, k = _header(*next(it))
    except StopIteration:
        raise ParseError(1, 1, "missing header 'n=<int> k=<int>'") from None
    if k < 1:
        raise ParseError(1, 1, "cross instance needs k >= 1")
    sections: dict[str, dict[int, int]] = {}
    current = None
    for lineno, raw, stripped in it:
        if stripped in ("[A]", "[B]"):
            current = stripped[1]
            if current in sections:
                raise ParseError(lineno, 1, f"section {stripped} repeated")
            sections[current] = {}
            continue
        if current is None:
            raise ParseError(lineno, 1, "set listed before an [A] or [B] section")
        size = k - 1 if current == "A" else k
        _add(sections[current], _set_line(lineno, raw, n, size), lineno)
    a = SetFamily._trusted(n, k - 1, sections.get("A", {}))
    b = SetFamily._trusted(n, k, sections.get("B", {}))
    return CrossInstance(n, k, a, b)


def write_cross(inst: CrossInstance) -> str:
    lines = [f"n={inst.ground_size} k={inst.k}", "[A]"]
    lines += [_fmt(m) for m in inst.a.masks]
    lines.append("[B]")
    lines += [_fmt(m) for m in inst.b.masks]
    return "\n".join(lines) + "\n"


def is_cross_text(text: str) -> bool:
    return any(stripped in ("[A]", "[B]") for _, _, stripped in _lines(text))
