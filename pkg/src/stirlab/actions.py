"""Letter-moving involutions on Stirling permutations and the bijection with
permutations.

The local move at a position i of a word sigma (with the usual virtual 0 at
both ends):

- i a double ascent (sigma_{i-1} < sigma_i < sigma_{i+1}): the letter at i
  slides right, landing just after the other copy of its value, where it
  forms a new plateau;
- i a descent-plateau (sigma_{i-1} > sigma_i = sigma_{i+1}): the letter at i
  slides left, landing just after the rightmost smaller entry to its left
  (possibly at the very front).

The two moves are mutually inverse, and for each value v at most one index
is movable (a value sits either on a double ascent, on a descent-plateau, on
a left ascent-plateau, or nowhere movable).  The toggle is therefore carried
by values: :func:`fs_toggle_value` is a total involution for each v, any two
toggles commute, and :func:`fs_action` applies the toggles selected by a set
of positions of the input word.  Orbits of the induced action partition Q_n;
each orbit has a unique descent-plateau-free representative.

The beta moves slide the first copy of a chosen value left in the same way
regardless of its surroundings; together with alpha (delete every first
copy) they realize the bijection between the normalized words (no
descent-plateau and lap + dasc = n, one per permutation) and permutations.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .objects import StirlingPermutation, is_stirling

Word = tuple[int, ...]


def _coerce(sigma) -> Word:
    if isinstance(sigma, StirlingPermutation):
        return sigma.word
    return tuple(sigma)


@dataclass(frozen=True)
class IndexSets:
    """The double-ascent, descent-plateau and left ascent-plateau positions
    of one word (1-based indices in [2n])."""

    dasc: frozenset[int]
    dp: frozenset[int]
    lap: frozenset[int]


def classify_index(word: Sequence[int], i: int) -> str | None:
    """"dasc", "dp", "lap" or None for 1-based position i under 0-padding."""
    m = len(word)
    if not 1 <= i <= m:
        raise ValueError(f"index {i} out of range for a word of length {m}")
    v = word[i - 1]
    left = word[i - 2] if i >= 2 else 0
    right = word[i] if i < m else 0
    if left < v < right:
        return "dasc"
    if v == right:
        return "lap" if left < v else "dp"
    return None


def index_sets(sigma) -> IndexSets:
    """All three index sets of a word.

    >>> index_sets((1, 2, 2, 1))
    IndexSets(dasc=frozenset({1}), dp=frozenset(), lap=frozenset({2}))
    """
    word = _coerce(sigma)
    kinds = {"dasc": set(), "dp": set(), "lap": set()}
    for i in range(1, len(word) + 1):
        kind = classify_index(word, i)
        if kind:
            kinds[kind].add(i)
    return IndexSets(*(frozenset(kinds[k]) for k in ("dasc", "dp", "lap")))


def fs_move(sigma, i: int) -> Word:
    """The local move at position i; i must be a double ascent or a
    descent-plateau, otherwise ValueError (the total variant is
    :func:`fs_action`).

    >>> "".join(map(str, fs_move((2,4,4,7,8,8,7,3,3,2,1,1,5,6,6,5), 1)))
    '4478873322115665'
    """
    word = _coerce(sigma)
    kind = classify_index(word, i)
    v = word[i - 1]
    if kind == "dasc":
        other = word.index(v, i)  # 0-based position of the second copy
        rest = word[: i - 1] + word[i:]
        moved = rest[:other] + (v,) + rest[other:]
    elif kind == "dp":
        k = 0
        for j in range(i - 1, 0, -1):
            if word[j - 1] < v:
                k = j
                break
        rest = word[: i - 1] + word[i:]
        moved = rest[:k] + (v,) + rest[k:]
    else:
        raise ValueError(
            f"position {i} of {word} is neither a double ascent nor a descent-plateau"
        )
    assert is_stirling(moved)
    return moved


def movable_index(word: Sequence[int], v: int) -> int | None:
    """The unique movable position carrying value v, or None.

    A value is movable when its first copy sits on a double ascent or its
    adjacent pair sits on a descent-plateau; at most one of these can occur.
    """
    first = word.index(v)
    second = word.index(v, first + 1)
    left = word[first - 1] if first else 0
    if second == first + 1:
        return first + 1 if left > v else None
    # non-adjacent pair: the letter right after the first copy lies between
    # the two copies, hence exceeds v, so only the left neighbor decides
    return first + 1 if left < v else None


def fs_toggle_value(sigma, v: int) -> Word:
    """Toggle value v between double ascent and descent-plateau (a total
    involution; immovable values are fixed)."""
    word = _coerce(sigma)
    i = movable_index(word, v)
    return word if i is None else fs_move(word, i)


def fs_action(sigma, positions: Iterable[int]) -> Word:
    """Apply the commuting toggles selected by a set of positions.

    Positions are read against the input word: each position that is a
    double ascent or descent-plateau selects its value for one toggle, any
    other position acts as the identity.
    """
    word = _coerce(sigma)
    values = sorted(
        {word[i - 1] for i in positions if classify_index(word, i) in ("dasc", "dp")}
    )
    for v in values:
        word = fs_toggle_value(word, v)
    return word


@dataclass(frozen=True)
class OrbitDescriptor:
    """An orbit of the toggle action: its descent-plateau-free representative
    and the representative's double-ascent positions (the free toggles)."""

    representative: Word
    free_indices: frozenset[int]

    @property
    def size(self) -> int:
        return 2 ** len(self.free_indices)


def orbit(sigma) -> OrbitDescriptor:
    """The orbit of a word: toggling its descent-plateau values yields the
    unique representative with dp = 0."""
    word = _coerce(sigma)
    rep = fs_action(word, index_sets(word).dp)
    sets = index_sets(rep)
    assert not sets.dp
    return OrbitDescriptor(rep, sets.dasc)


def orbit_members(rep) -> Iterator[Word]:
    """All members of an orbit, given a representative word or an
    OrbitDescriptor: one member per subset of the free toggles, in subset
    order of the sorted toggle values."""
    descriptor = rep if isinstance(rep, OrbitDescriptor) else orbit(rep)
    values = sorted(descriptor.representative[i - 1] for i in descriptor.free_indices)
    for r in range(len(values) + 1):
        for subset in itertools.combinations(values, r):
            word = descriptor.representative
            for v in subset:
                word = fs_toggle_value(word, v)
            yield word


# ---------------------------------------------------------------------------
# beta moves and the bijection with permutations


def beta_move(sigma, x: int) -> Word:
    """Slide the first copy of value x left, landing just after the
    rightmost smaller entry to its left (the front when there is none).

    >>> "".join(map(str, beta_move((3,4,4,3,5,7,8,8,7,6,6,5,2,2,1,1), 6)))
    '3443567887652211'
    """
    word = _coerce(sigma)
    first = word.index(x)
    k = 0
    for j in range(first, 0, -1):
        if word[j - 1] < x:
            k = j
            break
    rest = word[:first] + word[first + 1:]
    moved = rest[:k] + (x,) + rest[k:]
    assert is_stirling(moved)
    return moved


def beta_set(sigma, values: Iterable[int]) -> Word:
    """Apply beta moves for a set of values, in increasing value order.

    The order is part of the definition: moving a small value left can
    unlock the move of a larger one (on 331221, the first 2 only becomes
    movable after the 1 leaves), so raw moves need not commute.  Increasing
    order is the one under which moving every value lands in the normalized
    set (no descent-plateau, lap + dasc = n).
    """
    word = _coerce(sigma)
    for x in sorted(set(values)):
        word = beta_move(word, x)
    return word


def alpha(sigma) -> Word:
    """Delete the first copy of every value; the second copies, in order,
    form a permutation of [n].

    >>> alpha((3, 4, 4, 3, 5, 5, 6, 6, 1, 2, 2, 1))
    (4, 3, 5, 6, 2, 1)
    """
    word = _coerce(sigma)
    seen: set[int] = set()
    out = []
    for v in word:
        if v in seen:
            out.append(v)
        else:
            seen.add(v)
    return tuple(out)


def descent_bottom_set(pi: Sequence[int]) -> frozenset[int]:
    """The values sitting at descent bottoms of a permutation."""
    return frozenset(pi[i] for i in range(1, len(pi)) if pi[i - 1] > pi[i])


def alpha_inverse(pi) -> Word:
    """The normalized Stirling permutation (dp = 0, lap + dasc = n) that
    alpha maps to pi.

    Doubling each letter of pi gives a word whose alpha-image is pi; beta
    moves at the descent-bottom values of pi then remove every
    descent-plateau without changing the alpha-image.
    """
    _, _, word = alpha_inverse_trace(pi)
    return word


def alpha_inverse_trace(pi) -> tuple[Word, frozenset[int], Word]:
    """(doubled word, beta value set, final word) of the inverse map."""
    values = pi.values if hasattr(pi, "values") else tuple(pi)
    doubled = tuple(v for v in values for _ in range(2))
    s = descent_bottom_set(values)
    return doubled, s, beta_set(doubled, s)
