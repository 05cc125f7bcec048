import pytest
from hypothesis import given, settings, strategies as st

from conftest import fam
from hmshift.compression import ProcedureInvariantError, ff_compress, relabel_permutation
from hmshift.setfamily import common_intersection, is_intersecting, is_shifted, ShiftTrace
from hmshift.verify import gen_random_instance


def test_already_shifted_is_fixpoint():
    f = fam(3, 2, [1, 2], [1, 3], [2, 3])
    res = ff_compress(f)
    assert res.output == f
    assert not res.relabel_triggered
    assert res.permutation_used == (1, 2, 3)


def test_four_two_example():
    # by hand: S12 -> {13,14,34}; S23 -> {12,14,24}; S34 -> {12,13,23}
    res = ff_compress(fam(4, 2, [2, 3], [2, 4], [3, 4]))
    assert res.output == fam(4, 2, [1, 2], [1, 3], [2, 3])
    assert not res.relabel_triggered
    shifts = [s[1:] for s in res.trace.steps if s[0] == "shift"]
    assert shifts == [(1, 2), (2, 3), (3, 4)]


def test_relabel_regression_six_three():
    f = fam(6, 3, [1, 2, 3], [1, 4, 5], [2, 4, 6])
    res = ff_compress(f)
    assert res.relabel_triggered
    assert res.detected_pair == (1, 2)
    out = res.output
    assert is_shifted(out) and is_intersecting(out)
    assert not common_intersection(out)
    assert len(out) >= 3
    assert res.trace.apply(f) == out
    assert ShiftTrace.from_text(res.trace.to_text()).apply(f) == out


@pytest.mark.parametrize("i0,j0", [(1, 2), (1, 5), (2, 3), (3, 6), (4, 5)])
def test_relabel_permutation(i0, j0):
    perm = relabel_permutation(6, i0, j0)
    assert perm[i0 - 1] == 1 and perm[j0 - 1] == 2
    assert sorted(perm) == list(range(1, 7))


@pytest.mark.parametrize(
    "f, fragment",
    [
        (fam(4, 1, [1]), "k >= 2"),
        (fam(2, 2, [1, 2]), "n >= k\\+1"),
        (fam(4, 2), "nonempty"),
        (fam(4, 2, [1, 2], [3, 4]), "not intersecting"),
        (fam(4, 2, [1, 2], [1, 3]), "common"),
    ],
)
def test_preconditions(f, fragment):
    with pytest.raises(ValueError, match=fragment):
        ff_compress(f)


def test_invariant_error_message():
    assert "procedure invariant violated" in str(ProcedureInvariantError("x"))


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 9), st.integers(2, 4), st.integers(0, 10**6))
def test_lemma_guarantees(n, k, seed):
    if n < k + 1:
        return
    f = gen_random_instance("hm", n, k, seed)
    res = ff_compress(f)
    out = res.output
    assert is_shifted(out) and is_intersecting(out)
    assert not common_intersection(out)
    assert len(out) >= len(f)
    assert res.trace.apply(f) == out
    again = ff_compress(out)
    assert again.output == out
