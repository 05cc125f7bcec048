"""Re-run the induction behind the cross-intersection bound on a concrete instance.

Every claim the induction makes about the instance in hand is evaluated and
recorded: the split at the largest element, the properties the two halves
inherit, the case analysis on the half through n, and the final Pascal
recombination.  A true theorem means every check passes; a failing check
points at a bug or a misreading, with its location in the recursion tree.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..extremal import binomial, cross_bound, hm_bound, pascal_split
from ..setfamily import (
    CrossInstance,
    SetFamily,
    common_intersection,
    full_mask,
    is_cross_intersecting,
    is_intersecting,
    is_shifted,
    level_masks,
    shadow,
    split_on_element,
)


class ReplayInputError(ValueError):
    pass


@dataclass
class Check:
    name: str
    ok: bool
    lhs: int | None = None
    rhs: int | None = None
    relation: str = ""

    def to_dict(self) -> dict:
        d: dict = {"name": self.name, "ok": self.ok}
        if self.relation:
            d.update(lhs=self.lhs, relation=self.relation, rhs=self.rhs)
        return d


@dataclass
class ReplayNode:
    path: str
    n: int
    k: int
    size_a: int
    size_b: int
    case: str = ""
    checks: list[Check] = field(default_factory=list)
    children: list[ReplayNode] = field(default_factory=list)

    def check(self, name: str, ok: bool) -> bool:
        self.checks.append(Check(name, bool(ok)))
        return bool(ok)

    def compare(self, name: str, lhs: int, relation: str, rhs: int) -> bool:
        ok = {"<=": lhs <= rhs, "==": lhs == rhs, ">=": lhs >= rhs}[relation]
        self.checks.append(Check(name, ok, lhs, rhs, relation))
        return ok

    def failures(self) -> list[tuple[str, str]]:
        out = [(self.path, c.name) for c in self.checks if not c.ok]
        for child in self.children:
            out += child.failures()
        return out

    def to_dict(self) -> dict:
        return {
            "path": self.path,
            "n": self.n,
            "k": self.k,
            "size_a": self.size_a,
            "size_b": self.size_b,
            "case": self.case,
            "checks": [c.to_dict() for c in self.checks],
            "children": [c.to_dict() for c in self.children],
        }


@dataclass
class ReplayReport:
    root: ReplayNode
    verdict: str
    failures: list[tuple[str, str]]

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def nodes(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "failures": [{"path": p, "check": c} for p, c in self.failures],
            "tree": self.root.to_dict(),
        }


def _report(root: ReplayNode) -> ReplayReport:
    fails = root.failures()
    return ReplayReport(root, "refuted-step" if fails else "holds", fails)


def replay_theorem2(inst: CrossInstance) -> ReplayReport:
    n, k = inst.ground_size, inst.k
    if k < 1 or 2 * k - 1 > n:
        raise ReplayInputError(f"need k >= 1 and 2k-1 <= n, got n={n}, k={k}")
    problems = inst.violations(strict=True)
    if problems:
        raise ReplayInputError("instance violates the hypotheses: " + "; ".join(problems))
    if not (is_shifted(inst.a) and is_shifted(inst.b)):
        raise ReplayInputError("instance not shifted; shift both families first")
    return _report(_replay(inst.a, inst.b, n, k, "root"))


def _replay(a: SetFamily, b: SetFamily, n: int, k: int, path: str) -> ReplayNode:
    node = ReplayNode(path, n, k, len(a), len(b))
    total = len(a) + len(b)
    if n == 2 * k - 1:
        node.case = "base"
        full = full_mask(n)
        # complementation pairs the (k-1)-level with the k-level
        node.check("no A-member has its complement in B", not any((full ^ m) in b.maskset for m in a.masks))
        node.compare("base bound equals C(n,k-1)", cross_bound(n, k), "==", binomial(n, k - 1))
        node.compare("|A|+|B| <= C(n,k-1)", total, "<=", binomial(n, k - 1))
        return node

    a_avoid, a_thru = split_on_element(a, n)
    b_avoid, b_thru = split_on_element(b, n)
    m = n - 1
    a_avoid, a_thru = a_avoid.regrounded(m), a_thru.regrounded(m)
    b_avoid, b_thru = b_avoid.regrounded(m), b_thru.regrounded(m)

    avoid_ok = node.check("A(not n) and B(not n) shifted", is_shifted(a_avoid) and is_shifted(b_avoid))
    avoid_ok &= node.check("A(not n), B(not n) cross-intersecting", is_cross_intersecting(a_avoid, b_avoid))
    avoid_ok &= node.check("shadow B(not n) within A(not n)", shadow(b_avoid).issubset(a_avoid))
    avoid_ok &= node.check("A(not n) nonempty", bool(a_avoid.masks))
    avoid_ok &= node.check("B(not n) nonempty", bool(b_avoid.masks))
    inherited = node.check("A(n) and B(n) shifted", is_shifted(a_thru) and is_shifted(b_thru))
    inherited &= node.check("A(n), B(n) cross-intersecting", is_cross_intersecting(a_thru, b_thru))
    inherited &= node.check("shadow B(n) within A(n)", shadow(b_thru).issubset(a_thru))

    avoid_cap, thru_cap = pascal_split(n, k)
    thru_size = len(a_thru) + len(b_thru)

    if not a_thru.masks:
        node.case = "A(n)-empty"
        node.check("A(n) empty implies B(n) empty", not b_thru.masks)
        node.compare("|A(n)|+|B(n)| <= C(n-1,k-2)-C(n-1-k,k-2)", thru_size, "<=", thru_cap)
    elif not b_thru.masks:
        node.case = "B(n)-empty"
        first = full_mask(k)
        node.check("{1..k} in B", first in b.maskset)
        node.check("every A(n) member meets {1..k}", all(x & first for x in a_thru.masks))
        meeting = sum(1 for x in level_masks(n - 1, k - 2) if x & first)
        node.compare("(k-2)-sets of [n-1] meeting {1..k}", meeting, "==", thru_cap)
        node.compare("|A(n)| <= C(n-1,k-2)-C(n-1-k,k-2)", len(a_thru), "<=", thru_cap)
    else:
        node.case = "B(n)-nonempty"
        if inherited:
            node.children.append(_replay(a_thru, b_thru, m, k - 1, path + "/through"))
        node.compare("|A(n)|+|B(n)| <= cross bound at (n-1,k-1)", thru_size, "<=", cross_bound(m, k - 1))
        node.compare("cross bound at (n-1,k-1) <= C(n-1,k-2)-C(n-1-k,k-2)", cross_bound(m, k - 1), "<=", thru_cap)

    if avoid_ok:
        node.children.insert(0, _replay(a_avoid, b_avoid, m, k, path + "/avoid"))
    node.compare("|A(not n)|+|B(not n)| <= cross bound at (n-1,k)", len(a_avoid) + len(b_avoid), "<=", avoid_cap)
    node.compare("avoid cap equals cross bound at (n-1,k)", avoid_cap, "==", cross_bound(m, k))
    node.compare("Pascal recombination", avoid_cap + thru_cap, "==", cross_bound(n, k))
    node.compare("|A|+|B| <= cross bound", total, "<=", cross_bound(n, k))
    return node


def replay_theorem1(fam: SetFamily) -> ReplayReport:
    """Reduce a shifted intersecting family with no common element to a
    cross instance on {2..n} and replay the cross-intersection induction on it."""
    n, k = fam.ground_size, fam.k
    if not (k >= 2 and 2 * k <= n):
        raise ReplayInputError(f"need 2 <= k <= n/2, got n={n}, k={k}")
    if not is_shifted(fam):
        raise ReplayInputError("family not shifted; compress it first")
    if not is_intersecting(fam) or common_intersection(fam):
        raise ReplayInputError("family must be intersecting with no common element")
    root = ReplayNode("reduction", n, k, len(fam), 0, case="split at 1")
    b_fam, a_fam = split_on_element(fam, 1)
    # drop element 1 and renumber 2..n as 1..n-1
    a = SetFamily._trusted(n - 1, k - 1, [x >> 1 for x in a_fam.masks])
    b = SetFamily._trusted(n - 1, k, [x >> 1 for x in b_fam.masks])
    root.size_a, root.size_b = len(a), len(b)
    ok = root.check("shadow B within A", shadow(b).issubset(a))
    ok &= root.check("A, B cross-intersecting", is_cross_intersecting(a, b))
    ok &= root.check("A nonempty", bool(a.masks))
    ok &= root.check("B nonempty", bool(b.masks))
    ok &= root.check("A and B shifted", is_shifted(a) and is_shifted(b))
    root.compare("cross bound at (n-1,k) equals HM bound", cross_bound(n - 1, k), "==", hm_bound(n, k))
    if ok:
        root.children.append(_replay(a, b, n - 1, k, "reduction/cross"))
    root.compare("|F| <= HM bound", len(fam), "<=", hm_bound(n, k))
    return _report(root)
