import pytest

from conftest import fam
from hmshift.compression import ff_compress
from hmshift.extremal import construct_cross_extremal, construct_hm
from hmshift.setfamily import CrossInstance, SetFamily
from hmshift.verify import ReplayInputError, gen_random_instance, optimal_A_for_B, replay_theorem1, replay_theorem2


def test_base_case_tight():
    r = replay_theorem2(construct_cross_extremal(5, 3))
    assert r.holds
    assert r.root.case == "base"
    tight = [c for c in r.root.checks if c.name == "|A|+|B| <= C(n,k-1)"][0]
    assert (tight.lhs, tight.rhs) == (10, 10)


def test_one_level_then_base():
    r = replay_theorem2(construct_cross_extremal(6, 3))
    assert r.holds
    assert r.root.case == "B(n)-empty"
    assert [c.case for c in r.root.children] == ["base"]
    assert r.root.children[0].n == 5


def test_non_shifted_rejected():
    b = fam(6, 3, [2, 3, 4])
    inst = CrossInstance(6, 3, optimal_A_for_B(6, 3, b), b)
    with pytest.raises(ReplayInputError, match="instance not shifted"):
        replay_theorem2(inst)


def test_hypothesis_violation_rejected():
    inst = CrossInstance(5, 3, SetFamily.empty(5, 2), fam(5, 3, [1, 2, 3]))
    with pytest.raises(ReplayInputError, match="shadow"):
        replay_theorem2(inst)


def test_all_cases_reached():
    cases = set()
    for seed in range(150):
        inst = gen_random_instance("cross", 9, 4, seed, shift=True)
        report = replay_theorem2(inst)
        assert report.holds, report.failures
        cases.update(node.case for node in report.nodes())
    assert cases == {"base", "A(n)-empty", "B(n)-empty", "B(n)-nonempty"}


def test_refuted_step_is_reported():
    # feed the recursion an instance the proof never sees: B(n) has a member
    # at k=2, which cannot satisfy the hypotheses one level down
    from hmshift.verify.replay import _replay, _report

    a = fam(4, 1, [1], [2], [4])
    b = fam(4, 2, [1, 2], [1, 4])
    report = _report(_replay(a, b, 4, 2, "root"))
    assert report.verdict == "refuted-step"
    assert report.failures
    assert report.to_dict()["failures"][0]["path"].startswith("root")


def test_theorem1_reduction():
    for n, k in [(4, 2), (6, 3), (7, 3), (8, 4)]:
        r = replay_theorem1(construct_hm(n, k))
        assert r.holds, r.failures
    out = ff_compress(fam(6, 3, [1, 2, 3], [1, 4, 5], [2, 4, 6])).output
    assert replay_theorem1(out).holds


def test_theorem1_input_checks():
    with pytest.raises(ReplayInputError, match="not shifted"):
        replay_theorem1(fam(6, 3, [1, 2, 3], [1, 4, 5], [2, 4, 6]))
    with pytest.raises(ReplayInputError, match="common"):
        replay_theorem1(fam(4, 2, [1, 2], [1, 3]))
