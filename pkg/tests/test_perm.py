from itertools import combinations, permutations

import pytest

from involab.errors import DomainError
from involab.perm import (
    P132,
    PatternSpec,
    avoids,
    block_decompose,
    count_occurrences,
    format_perm,
    identity,
    increasing,
    inversions,
    is_involution,
    parity,
    parse_perm,
    pattern_23k1,
    pattern_2134,
    pattern_rot,
    standardize,
    statistics,
)
from involab.oracle import CountQuery, enumerate_objects


def test_parse_and_format():
    assert parse_perm("4 3 5 1 2") == (4, 3, 5, 1, 2)
    assert parse_perm("43512") == (4, 3, 5, 1, 2)
    assert parse_perm("1,3,2") == (1, 3, 2)
    assert parse_perm("ε") == ()
    assert format_perm(()) == "ε"
    assert format_perm((2, 1)) == "2 1"
    with pytest.raises(DomainError):
        parse_perm("1 1 2")
    with pytest.raises(DomainError):
        parse_perm("a b")


@pytest.mark.parametrize("p, expected", [((1, 3, 2), True), ((4, 3, 5, 1, 2), False), ((), True)])
def test_is_involution(p, expected):
    assert is_involution(p) is expected


def test_inversions_and_parity():
    assert inversions((4, 3, 5, 1, 2)) == 7
    assert inversions(identity(6)) == 0
    assert inversions((1, 3, 2)) == 1
    assert parity(identity(5)) == "even"
    assert parity((1, 3, 2)) == "odd"
    assert parity((2, 1)) == "odd"


def test_statistics_examples():
    st = statistics((4, 3, 5, 1, 2))
    assert st.rtl_maxima == 2
    assert (st.rises, st.descents) == (2, 2)
    st = statistics(identity(5))
    assert (st.rises, st.fixed_points, st.rtl_maxima) == (4, 5, 1)
    assert statistics(()).rises == 0


def test_pattern_parse():
    t = PatternSpec.parse("12-43")
    assert t.letters == (1, 2, 4, 3) and t.adjacency == (True, False, True)
    assert str(t) == "12-43"
    assert PatternSpec.parse("1-3-2") == P132
    assert PatternSpec.parse("1").adjacency == ()
    for bad in ("", "1--2", "-12", "1-2-", "1-1", "1a"):
        with pytest.raises(DomainError):
            PatternSpec.parse(bad)


def test_constructors():
    assert str(increasing(4)) == "1-2-3-4"
    assert str(pattern_2134(5)) == "2-1-3-4-5"
    assert str(pattern_23k1(4)) == "2-3-4-1"
    assert str(pattern_rot(5, 2)) == "3-4-5-1-2"
    with pytest.raises(DomainError):
        pattern_rot(3, 3)


def test_occurrence_examples():
    assert count_occurrences((3, 1, 5, 4, 2), P132) == 4
    assert count_occurrences((3, 5, 4, 2, 1, 7, 6), PatternSpec.parse("12-43")) == 1
    assert count_occurrences((3, 5, 4, 2, 1, 7, 6), PatternSpec.parse("1-2-4-3")) == 2
    assert count_occurrences((3, 4, 5, 2, 1), P132) == 0
    assert avoids((3, 4, 5, 2, 1), [P132])
    assert not avoids((3, 1, 5, 4, 2), [P132])
    assert avoids((), [P132, increasing(2)])


def _brute(p, letters):
    k = len(letters)
    return sum(1 for idx in combinations(range(len(p)), k)
               if standardize([p[i] for i in idx]) == tuple(letters))


def test_classical_count_matches_subset_brute_force():
    pats = [(1, 3, 2), (2, 1), (1, 2, 3), (2, 1, 4, 3), (3, 1, 4, 2)]
    for n in range(7):
        for p in permutations(range(1, n + 1)):
            for letters in pats:
                assert count_occurrences(p, PatternSpec.classical(letters)) == _brute(p, letters)


def test_inversions_plus_noninversions():
    for p in permutations(range(1, 7)):
        n = len(p)
        assert inversions(p) + count_occurrences(p, increasing(2)) == n * (n - 1) // 2
        assert statistics(p).rises == count_occurrences(p, PatternSpec.parse("12"))


def test_block_decompose_examples():
    d = block_decompose((2, 1))
    assert d.kind == "cycle" and d.beta == () and d.gamma == () and d.j == 1
    d = block_decompose((1, 2, 3))
    assert d.kind == "last_is_max" and d.inner == (1, 2)
    d = block_decompose((4, 5, 3, 1, 2))
    assert d.kind == "cycle" and d.j == 2 and d.gamma == (3,)
    assert d.reassemble() == (4, 5, 3, 1, 2)
    with pytest.raises(DomainError):
        block_decompose((1, 3, 2))


@pytest.mark.parametrize("mode, contain", [("avoid", ()), ("once", (("1-3-2", 1),))])
def test_block_decompose_round_trip(mode, contain):
    avoid = ("1-3-2",) if mode == "avoid" else ()
    for n in range(1, 10):
        for p in enumerate_objects(CountQuery("involutions", n, avoid, contain)):
            assert block_decompose(p, mode).reassemble() == p
