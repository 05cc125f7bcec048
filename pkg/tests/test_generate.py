import pytest

from hmshift.setfamily import common_intersection, is_intersecting, is_shifted
from hmshift.verify import gen_random_instance, random_family, random_intersecting


def test_deterministic():
    assert gen_random_instance("hm", 6, 3, 1) == gen_random_instance("hm", 6, 3, 1)
    assert gen_random_instance("cross", 6, 3, 7, shift=True) == gen_random_instance("cross", 6, 3, 7, shift=True)
    assert random_family(8, 3, 2) == random_family(8, 3, 2)
    assert random_intersecting(8, 3, 2) == random_intersecting(8, 3, 2)


@pytest.mark.parametrize("seed", range(40))
def test_hm_instances_valid(seed):
    f = gen_random_instance("hm", 6, 3, seed)
    assert is_intersecting(f)
    assert not common_intersection(f)


@pytest.mark.parametrize("seed", range(40))
def test_cross_instances_valid(seed):
    inst = gen_random_instance("cross", 6, 3, seed)
    assert inst.violations() == []
    shifted = gen_random_instance("cross", 6, 3, seed, shift=True)
    assert shifted.violations() == []
    assert is_shifted(shifted.a) and is_shifted(shifted.b)


def test_seeds_give_variety():
    outs = {gen_random_instance("hm", 7, 3, s) for s in range(30)}
    assert len(outs) > 20


def test_bad_parameters():
    with pytest.raises(ValueError):
        gen_random_instance("hm", 3, 3, 0)
    with pytest.raises(ValueError):
        gen_random_instance("cross", 4, 3, 0)
    with pytest.raises(ValueError):
        gen_random_instance("other", 6, 3, 0)
