"""Combinatorial carrier types and their exhaustive enumerators.

Four families:

- Stirling permutations of order n: words on the multiset {1,1,...,n,n} in
  which every entry lying strictly between the two copies of a value exceeds
  that value.  There are (2n-1)!! of them.
- signed permutations (the hyperoctahedral group B_n), 2^n n! of them;
- perfect matchings of [2n], again (2n-1)!! of them;
- plain permutations of [n].

Enumerators are deterministic, pure and restartable.  The Stirling stream is
generated by pair insertion: each word of order n-1 receives the pair (n, n)
in each of its 2n-1 gaps, scanned from the rightmost gap to the leftmost, so
``stirling_words(2)`` yields 1122, 1221, 2211 in that order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Word = tuple[int, ...]
Block = tuple[int, int]

# largest n whose full object list is memoized (Q_7 is ~135k words)
_CACHE_MAX = {"stirling": 7, "signed": 6, "matching": 7, "permutation": 8}


def is_stirling(word: Sequence[int]) -> bool:
    """True iff ``word`` is a Stirling permutation of some order n >= 0.

    A malformed multiset (values not covering [n] exactly twice) returns
    False rather than raising.

    >>> is_stirling([1, 2, 2, 1]), is_stirling([1, 2, 1, 2])
    (True, False)
    """
    if len(word) % 2:
        return False
    n = len(word) // 2
    seen: dict[int, int] = {}
    stack: list[int] = []
    for v in word:
        if not isinstance(v, int) or v < 1 or v > n:
            return False
        c = seen.get(v, 0)
        if c == 0:
            # first occurrence must open inside a larger context only
            if stack and v < stack[-1]:
                return False
            stack.append(v)
            seen[v] = 1
        elif c == 1:
            # second occurrence must close the innermost open value
            if not stack or stack[-1] != v:
                return False
            stack.pop()
            seen[v] = 2
        else:
            return False
    return len(seen) == n


@dataclass(frozen=True)
class StirlingPermutation:
    """A Stirling permutation; ``word`` holds the 2n letters, 1-based values.

    The constructor trusts its input; use :meth:`from_word` for untrusted
    data.
    """

    word: Word

    @classmethod
    def from_word(cls, word: Sequence[int]) -> StirlingPermutation:
        w = tuple(word)
        if not is_stirling(w):
            raise ValueError(f"not a Stirling permutation: {w}")
        return cls(w)

    @property
    def order(self) -> int:
        return len(self.word) // 2

    def __str__(self) -> str:
        if self.order <= 9:
            return "".join(str(v) for v in self.word)
        return " ".join(str(v) for v in self.word)


@dataclass(frozen=True)
class SignedPermutation:
    """An element of B_n: values pi(1..n), nonzero, |values| a permutation."""

    values: Word

    @classmethod
    def from_values(cls, values: Sequence[int]) -> SignedPermutation:
        v = tuple(values)
        if not _is_signed(v):
            raise ValueError(f"not a signed permutation: {v}")
        return cls(v)

    @property
    def order(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        if self.order <= 9:
            return "".join(str(v) for v in self.values)
        return " ".join(str(v) for v in self.values)


def _is_signed(values: Sequence[int]) -> bool:
    if any(not isinstance(v, int) or v == 0 for v in values):
        return False
    return sorted(abs(v) for v in values) == list(range(1, len(values) + 1))


@dataclass(frozen=True)
class PerfectMatching:
    """A partition of [2n] into n pairs, stored sorted by smaller entry."""

    blocks: tuple[Block, ...]

    @classmethod
    def from_blocks(cls, blocks) -> PerfectMatching:
        bs = tuple(sorted(tuple(sorted(b)) for b in blocks))
        flat = [e for b in bs for e in b]
        if any(len(b) != 2 for b in bs) or sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"not a perfect matching of [2n]: {blocks}")
        return cls(bs)

    @property
    def order(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return ",".join("{%d,%d}" % b for b in self.blocks)


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation."""

    values: Word

    @classmethod
    def from_values(cls, values: Sequence[int]) -> Permutation:
        v = tuple(values)
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError(f"not a permutation of [n]: {v}")
        return cls(v)

    @property
    def order(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        if self.order <= 9:
            return "".join(str(v) for v in self.values)
        return " ".join(str(v) for v in self.values)


# ---------------------------------------------------------------------------
# raw word streams (the fast layer; enumerate_* wraps these in carrier types)


def stirling_words(n: int) -> Iterator[Word]:
    """All Stirling permutations of order n, in pair-insertion order."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n == 0:
        yield ()
        return
    for parent in stirling_words(n - 1):
        for p in range(len(parent), -1, -1):
            yield parent[:p] + (n, n) + parent[p:]


def signed_words(n: int) -> Iterator[Word]:
    """All of B_n: permutations in lexicographic order, signs +1 before -1."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, perm))


def matching_blocks(n: int) -> Iterator[tuple[Block, ...]]:
    """All perfect matchings of [2n]: the smallest unmatched element is paired
    with each remaining element in increasing order, then recurse."""
    if n < 0:
        raise ValueError("order must be nonnegative")

    def rec(elems: Word) -> Iterator[tuple[Block, ...]]:
        if not elems:
            yield ()
            return
        a = elems[0]
        for idx in range(1, len(elems)):
            b = elems[idx]
            rest = elems[1:idx] + elems[idx + 1:]
            for tail in rec(rest):
                yield ((a, b),) + tail

    yield from rec(tuple(range(1, 2 * n + 1)))


def permutation_words(n: int) -> Iterator[Word]:
    """All permutations of [n] in lexicographic order."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    yield from itertools.permutations(range(1, n + 1))


_STREAMS = {
    "stirling": stirling_words,
    "signed": signed_words,
    "matching": matching_blocks,
    "permutation": permutation_words,
}


@lru_cache(maxsize=None)
def _cached_objects(klass: str, n: int) -> tuple:
    return tuple(_STREAMS[klass](n))


def iter_objects(klass: str, n: int):
    """Stream the raw objects of a class, memoizing small orders."""
    if klass not in _STREAMS:
        raise ValueError(f"unknown object class: {klass!r}")
    if n <= _CACHE_MAX[klass]:
        return iter(_cached_objects(klass, n))
    return _STREAMS[klass](n)


# ---------------------------------------------------------------------------
# typed enumerators


def enumerate_stirling(n: int) -> Iterator[StirlingPermutation]:
    """Each element of Q_n exactly once ((2n-1)!! in total)."""
    return (StirlingPermutation(w) for w in stirling_words(n))


def enumerate_signed(n: int) -> Iterator[SignedPermutation]:
    """Each element of B_n exactly once (2^n n! in total)."""
    return (SignedPermutation(w) for w in signed_words(n))


def enumerate_matchings(n: int) -> Iterator[PerfectMatching]:
    """Each perfect matching of [2n] exactly once ((2n-1)!! in total)."""
    return (PerfectMatching(b) for b in matching_blocks(n))


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """Each permutation of [n] exactly once (n! in total)."""
    return (Permutation(w) for w in permutation_words(n))
