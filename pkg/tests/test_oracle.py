from collections import Counter

import pytest

from involab.errors import DomainError, LimitExceeded, UnknownName
from involab.oracle import (
    CountQuery,
    count,
    distribution,
    enumerate_objects,
    motzkin,
    parity_split,
    telephone,
)
from involab.perm import is_involution


def test_small_classes():
    assert len(enumerate_objects(CountQuery("involutions", 4, ("1-3-2",)))) == 6
    assert enumerate_objects(CountQuery("involutions", 3)) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
    assert enumerate_objects(CountQuery("involutions", 0)) == [()]
    assert enumerate_objects(CountQuery("permutations", 0)) == [()]


def test_telephone():
    assert [telephone(n) for n in range(8)] == [1, 1, 2, 4, 10, 26, 76, 232]
    for n in range(10):
        objs = enumerate_objects(CountQuery("involutions", n))
        assert len(objs) == telephone(n) == len(set(objs))
        assert all(is_involution(p) for p in objs)


def test_permutations_are_all():
    assert count(CountQuery("permutations", 6)) == 720


def test_contain_exact_count():
    once = enumerate_objects(CountQuery("involutions", 3, (), (("1-3-2", 1),)))
    assert once == [(1, 3, 2)]
    d = distribution(CountQuery("involutions", 6, (), (), ("occ:1-3-2",)))
    for c, v in d.items():
        assert count(CountQuery("involutions", 6, (), (("1-3-2", c[0]),))) == v


def test_marginals_consistent():
    fine = distribution(CountQuery("involutions", 8, ("1-3-2",), (), ("fixed_points", "rises")))
    coarse = distribution(CountQuery("involutions", 8, ("1-3-2",), (), ("rises",)))
    projected = Counter()
    for (p, r), c in fine.items():
        projected[(r,)] += c
    assert projected == coarse


def test_distribution_example():
    d = distribution(CountQuery("involutions", 4, ("1-3-2",), (), ("fixed_points",)))
    assert d == {(0,): 2, (2,): 3, (4,): 1}
    assert parity_split(CountQuery("involutions", 5, ("1-3-2",))) == (6, 4)


def test_limits_and_errors():
    with pytest.raises(LimitExceeded):
        count(CountQuery("involutions", 13, ("1-3-2",)))
    with pytest.raises(LimitExceeded):
        count(CountQuery("permutations", 10))
    assert count(CountQuery("involutions", 13, ("1-3-2",)), limit=13) == 1716
    with pytest.raises(UnknownName):
        CountQuery("words", 3)
    with pytest.raises(UnknownName):
        CountQuery("involutions", 3, stats=("height",))
    with pytest.raises(DomainError):
        CountQuery("involutions", -1)
    with pytest.raises(DomainError):
        CountQuery("involutions", 3, contain=(("1-2", -1),))


def test_motzkin():
    assert [motzkin(n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]
