import itertools
import math

import pytest

from conftest import fam
from hmshift.extremal import (
    HypothesisError,
    binomial,
    construct_cross_extremal,
    construct_hm,
    construct_star,
    cross_bound,
    ekr_bound,
    hm_bound,
    pascal_split,
)
from hmshift.setfamily import (
    common_intersection,
    is_cross_intersecting,
    is_intersecting,
    is_shifted,
    shadow,
)


def test_binomial_conventions():
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(0, 0) == 1
    assert binomial(-1, 0) == 0
    assert binomial(4, -1) == 0
    with pytest.raises(OverflowError):
        binomial(100, 50)
    assert binomial(62, 31) == math.comb(62, 31)


@pytest.mark.parametrize("n,k,value", [(7, 3, 13), (6, 3, 10), (4, 2, 3)])
def test_hm_bound(n, k, value):
    assert hm_bound(n, k) == value


@pytest.mark.parametrize("n,k,value", [(5, 3, 10), (7, 3, 16), (3, 2, 3)])
def test_cross_bound(n, k, value):
    assert cross_bound(n, k) == value


@pytest.mark.parametrize("n,k,value", [(7, 3, 15), (4, 2, 3), (6, 3, 10)])
def test_ekr_bound(n, k, value):
    assert ekr_bound(n, k) == value


def test_hypothesis_errors():
    with pytest.raises(HypothesisError, match="outside theorem hypothesis"):
        hm_bound(5, 3)
    with pytest.raises(HypothesisError):
        ekr_bound(5, 3)
    with pytest.raises(HypothesisError):
        cross_bound(4, 3)
    with pytest.raises(HypothesisError):
        construct_hm(5, 3)
    with pytest.raises(HypothesisError):
        construct_cross_extremal(4, 3)


def test_bound_identities():
    for k in range(1, 15):
        assert hm_bound(2 * k, k) == ekr_bound(2 * k, k)
        assert cross_bound(2 * k - 1, k) == binomial(2 * k - 1, k - 1)
    for n in range(4, 31):
        for k in range(2, n // 2 + 1):
            assert sum(pascal_split(n, k)) == cross_bound(n, k)


def test_construct_star():
    assert construct_star(3, 2) == fam(3, 2, [1, 2], [1, 3])
    assert construct_star(4, 2) == fam(4, 2, [1, 2], [1, 3], [1, 4])
    assert len(construct_star(7, 3)) == 15 == ekr_bound(7, 3)


def _count_hm(n, k):
    """Independent count of {2..k+1} plus the k-sets through 1 meeting it."""
    b0 = set(range(2, k + 2))
    return 1 + sum(1 for rest in itertools.combinations(range(2, n + 1), k - 1) if b0 & set(rest))


def test_construct_hm_examples():
    assert construct_hm(4, 2) == fam(4, 2, [2, 3], [1, 2], [1, 3])
    assert len(construct_hm(6, 3)) == _count_hm(6, 3) == 10
    assert len(construct_hm(7, 3)) == _count_hm(7, 3) == 13


@pytest.mark.parametrize("n", range(4, 13))
def test_construct_hm_properties(n):
    for k in range(2, n // 2 + 1):
        f = construct_hm(n, k)
        assert is_intersecting(f)
        assert not common_intersection(f)
        assert is_shifted(f)
        assert len(f) == hm_bound(n, k) == _count_hm(n, k)


def test_construct_cross_examples():
    inst = construct_cross_extremal(5, 3)
    assert (len(inst.a), len(inst.b)) == (9, 1)
    inst = construct_cross_extremal(3, 2)
    assert inst.a == fam(3, 1, [1], [2])
    assert inst.b == fam(3, 2, [1, 2])
    assert construct_cross_extremal(7, 3).size() == 16


@pytest.mark.parametrize("n", range(3, 13))
def test_construct_cross_properties(n):
    for k in range(2, (n + 1) // 2 + 1):
        inst = construct_cross_extremal(n, k)
        assert is_cross_intersecting(inst.a, inst.b)
        assert shadow(inst.b).issubset(inst.a)
        assert inst.violations() == []
        assert inst.size() == cross_bound(n, k)
