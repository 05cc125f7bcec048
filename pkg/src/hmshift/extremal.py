"""Closed-form bounds and the families that attain them."""
from __future__ import annotations

import math

from .setfamily import CrossInstance, SetFamily, full_mask, level_masks

INT64_MAX = 2**63 - 1


class HypothesisError(ValueError):
    """Raised when (n, k) lies outside the hypotheses of a bound."""


def binomial(a: int, b: int) -> int:
    """C(a, b), zero when b < 0, b > a or a < 0; overflow of int64 is an error."""
    if a < 0 or b < 0 or b > a:
        return 0
    value = math.comb(a, b)
    if value > INT64_MAX:
        raise OverflowError(f"C({a},{b}) exceeds the 64-bit range")
    return value


def _checked(value: int) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError("bound exceeds the 64-bit range")
    return value


def hm_bound(n: int, k: int) -> int:
    """Largest intersecting k-uniform family on [n] with no common element."""
    if not (k >= 1 and 2 * k <= n):
        raise HypothesisError(f"outside theorem hypothesis: need 1 <= k <= n/2, got n={n}, k={k}")
    return _checked(binomial(n - 1, k - 1) - binomial(n - 1 - k, k - 1) + 1)


def cross_bound(n: int, k: int) -> int:
    """Largest |A| + |B| for cross-intersecting A, B with B nonempty and shadow(B) in A."""
    if not (k >= 1 and 2 * k - 1 <= n):
        raise HypothesisError(f"outside theorem hypothesis: need k >= 1 and 2k-1 <= n, got n={n}, k={k}")
    return _checked(binomial(n, k - 1) - binomial(n - k, k - 1) + 1)


def ekr_bound(n: int, k: int) -> int:
    if not (k >= 1 and 2 * k <= n):
        raise HypothesisError(f"outside theorem hypothesis: need 1 <= k <= n/2, got n={n}, k={k}")
    return binomial(n - 1, k - 1)


def pascal_split(n: int, k: int) -> tuple[int, int]:
    """The two halves the induction recombines: sets avoiding n, sets through n."""
    avoid = binomial(n - 1, k - 1) - binomial(n - 1 - k, k - 1) + 1
    through = binomial(n - 1, k - 2) - binomial(n - 1 - k, k - 2)
    return avoid, through


def construct_star(n: int, k: int) -> SetFamily:
    if not 1 <= k <= n:
        raise ValueError(f"star needs 1 <= k <= n, got n={n}, k={k}")
    return SetFamily._trusted(n, k, [m << 1 | 1 for m in level_masks(n - 1, k - 1)])


def construct_hm(n: int, k: int) -> SetFamily:
    """{2..k+1} together with every k-set through 1 that meets it."""
    if not (k >= 2 and 2 * k <= n):
        raise HypothesisError(f"need 2 <= k <= n/2, got n={n}, k={k}")
    b0 = full_mask(k + 1) ^ 1
    masks = [b0] + [m for m in construct_star(n, k).masks if m & b0]
    return SetFamily._trusted(n, k, masks)


def construct_cross_extremal(n: int, k: int) -> CrossInstance:
    """B = {{1..k}} and A = every (k-1)-set meeting {1..k}."""
    # k = 1 would need the empty set in A, which meets nothing
    if not (k >= 2 and 2 * k - 1 <= n):
        raise HypothesisError(f"need k >= 2 and 2k-1 <= n, got n={n}, k={k}")
    top = full_mask(k)
    a = SetFamily._trusted(n, k - 1, [m for m in level_masks(n, k - 1) if m & top])
    b = SetFamily._trusted(n, k, [top])
    return CrossInstance(n, k, a, b)

