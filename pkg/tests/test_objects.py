"""Enumerator tests: counts against independent oracles, validity, order."""
import math

import pytest

from stirlab.objects import (
    PerfectMatching,
    Permutation,
    SignedPermutation,
    StirlingPermutation,
    enumerate_matchings,
    enumerate_signed,
    enumerate_stirling,
    is_stirling,
    matching_blocks,
    permutation_words,
    signed_words,
    stirling_words,
)


def odd_double_factorial(n: int) -> int:
    # independent oracle for |Q_n| and the matching count
    return math.prod(range(1, 2 * n, 2))


def brute_is_stirling(word) -> bool:
    # direct transcription of the defining property, as the oracle
    word = tuple(word)
    n = len(word) // 2
    if sorted(word) != [v for v in range(1, n + 1) for _ in range(2)]:
        return False
    for v in range(1, n + 1):
        first = word.index(v)
        second = word.index(v, first + 1)
        if any(word[i] <= v for i in range(first + 1, second)):
            return False
    return True


@pytest.mark.parametrize(
    "word,expected",
    [
        ((1, 2, 2, 1), True),
        ((1, 2, 1, 2), False),
        ((1, 2, 2, 1, 3, 3), True),
        ((1, 1), True),
        ((), True),
        ((2, 2), False),  # malformed multiset
        ((1, 1, 1, 1), False),
        ((0, 0), False),
        ((1, 3, 3, 2, 2, 1), True),
    ],
)
def test_is_stirling_cases(word, expected):
    assert is_stirling(word) is expected
    assert brute_is_stirling(word) is expected


def test_is_stirling_matches_oracle_on_all_multiset_words():
    import itertools

    for n in range(4):
        multiset = [v for v in range(1, n + 1) for _ in range(2)]
        for word in set(itertools.permutations(multiset)):
            assert is_stirling(word) == brute_is_stirling(word)


def test_stirling_counts_match_double_factorial():
    for n in range(7):
        assert sum(1 for _ in stirling_words(n)) == odd_double_factorial(n)
    assert sum(1 for _ in stirling_words(7)) == 135135
    assert sum(1 for _ in stirling_words(8)) == odd_double_factorial(8) == 2027025


def test_stirling_words_are_valid_and_distinct():
    for n in range(7):
        words = list(stirling_words(n))
        assert len(set(words)) == len(words)
        assert all(brute_is_stirling(w) for w in words)


def test_stirling_enumeration_order():
    assert list(stirling_words(1)) == [(1, 1)]
    assert list(stirling_words(2)) == [(1, 1, 2, 2), (1, 2, 2, 1), (2, 2, 1, 1)]
    # the first child of each parent inserts the new pair at the end
    q3 = list(stirling_words(3))
    assert q3[0] == (1, 1, 2, 2, 3, 3)
    assert q3[5] == (1, 2, 2, 1, 3, 3)


def test_signed_counts_and_order():
    assert list(signed_words(1)) == [(1,), (-1,)]
    assert sum(1 for _ in signed_words(2)) == 8
    assert sum(1 for _ in signed_words(3)) == 48
    words = list(signed_words(3))
    assert len(set(words)) == len(words)
    assert all(sorted(map(abs, w)) == [1, 2, 3] for w in words)


def test_matching_counts_and_order():
    assert list(matching_blocks(1)) == [((1, 2),)]
    assert list(matching_blocks(2)) == [
        ((1, 2), (3, 4)),
        ((1, 3), (2, 4)),
        ((1, 4), (2, 3)),
    ]
    assert sum(1 for _ in matching_blocks(4)) == 105  # 7!! oracle
    for blocks in matching_blocks(3):
        flat = sorted(e for b in blocks for e in b)
        assert flat == list(range(1, 7))


def test_permutation_counts():
    assert list(permutation_words(0)) == [()]
    assert sum(1 for _ in permutation_words(3)) == 6
    assert sum(1 for _ in permutation_words(4)) == 24


def test_typed_enumerators_wrap_the_streams():
    assert [str(s) for s in enumerate_stirling(2)] == ["1122", "1221", "2211"]
    assert [str(s) for s in enumerate_signed(1)] == ["1", "-1"]
    assert [str(m) for m in enumerate_matchings(2)] == [
        "{1,2},{3,4}",
        "{1,3},{2,4}",
        "{1,4},{2,3}",
    ]


def test_validating_constructors():
    assert StirlingPermutation.from_word((1, 2, 2, 3, 3, 1)).order == 3
    with pytest.raises(ValueError):
        StirlingPermutation.from_word((1, 2, 1, 2))
    assert SignedPermutation.from_values((4, -3, 1, 5, 2)).order == 5
    with pytest.raises(ValueError):
        SignedPermutation.from_values((1, 1))
    with pytest.raises(ValueError):
        SignedPermutation.from_values((0, 1))
    assert PerfectMatching.from_blocks([(3, 1), (2, 4)]).blocks == ((1, 3), (2, 4))
    with pytest.raises(ValueError):
        PerfectMatching.from_blocks([(1, 2), (2, 3)])
    assert Permutation.from_values((2, 1, 3)).order == 3
    with pytest.raises(ValueError):
        Permutation.from_values((1, 3))


def test_streams_are_restartable():
    gen = stirling_words(3)
    first = list(gen)
    assert list(stirling_words(3)) == first
