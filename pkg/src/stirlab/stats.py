"""Statistics on Stirling permutations, signed permutations, matchings and
permutations, plus exact joint distribution tables.

Boundary convention for a Stirling word sigma_1..sigma_2n: a virtual 0 sits
at both ends.  Ascents read the pairs (sigma_i, sigma_{i+1}) for
0 <= i <= 2n-1, descents for 1 <= i <= 2n, plateaus for 1 <= i <= 2n-1, so
the first padded pair is always an ascent, the last always a descent, and
asc + des + plat = 2n + 1.  Under the same padding,

    asc = lap + dasc      and      plat = lap + dp

hold index by index: every ascent pair ends at a left ascent-plateau or a
double ascent, every plateau is a left ascent-plateau or a descent-plateau.

Stable statistic names: asc, des, plat, ap, lap, fap, dasc, dp (Stirling);
desA, desB, fdes, fasc (signed); el, ol (matching); des (permutation).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import ResourceLimitError
from .objects import (
    PerfectMatching,
    Permutation,
    SignedPermutation,
    StirlingPermutation,
    is_stirling,
    iter_objects,
)
from .polynomials import QPoly, TriPoly

STIRLING_STATS = ("asc", "des", "plat", "ap", "lap", "fap", "dasc", "dp")
SIGNED_STATS = ("desA", "desB", "fdes", "fasc")
MATCHING_STATS = ("el", "ol")
PERMUTATION_STATS = ("des",)

STATS_BY_CLASS = {
    "stirling": STIRLING_STATS,
    "signed": SIGNED_STATS,
    "matching": MATCHING_STATS,
    "permutation": PERMUTATION_STATS,
}

# default enumeration bounds for distribution(); beyond these the caller must
# raise the limit explicitly
DEFAULT_BOUNDS = {"stirling": 8, "signed": 7, "matching": 8, "permutation": 9}


@dataclass(frozen=True)
class StirlingStatRecord:
    asc: int
    des: int
    plat: int
    ap: int
    lap: int
    fap: int
    dasc: int
    dp: int


@dataclass(frozen=True)
class SignedStatRecord:
    desA: int
    desB: int
    fdes: int
    fasc: int


@dataclass(frozen=True)
class MatchingStatRecord:
    el: int
    ol: int


def _coerce_word(sigma) -> tuple[int, ...]:
    if isinstance(sigma, StirlingPermutation):
        return sigma.word
    return tuple(sigma)


def stirling_stat_record(word: Sequence[int]) -> StirlingStatRecord:
    """All eight Stirling statistics of a word assumed valid (one pass)."""
    m = len(word)
    asc = des = plat = ap = lap = dasc = dp = 0
    prev = 0  # sentinel sigma_0
    for i in range(1, m + 1):
        cur = word[i - 1]
        nxt = word[i] if i < m else 0  # sentinel sigma_{2n+1}
        if prev < cur:
            asc += 1  # counts the pair (i-1, i); the pair (0, 1) is always one
        if cur > nxt:
            des += 1  # includes the final padded pair, always a descent
        elif cur == nxt and i < m:
            plat += 1
        if prev < cur == nxt:
            lap += 1
            if i >= 2:
                ap += 1
        if prev < cur < nxt:
            dasc += 1
        if prev > cur == nxt:
            dp += 1
        prev = cur
    fap = 2 * ap + (1 if m >= 2 and word[0] == word[1] else 0)
    return StirlingStatRecord(asc, des, plat, ap, lap, fap, dasc, dp)


def stirling_stats(sigma) -> StirlingStatRecord:
    """Statistics of a Stirling permutation; invalid input raises ValueError."""
    word = _coerce_word(sigma)
    if not is_stirling(word):
        raise ValueError(f"not a Stirling permutation: {word}")
    return stirling_stat_record(word)


def signed_stat_record(values: Sequence[int]) -> SignedStatRecord:
    """desA/desB/fdes/fasc of a signed permutation assumed valid, n >= 1."""
    n = len(values)
    des_a = sum(values[i] > values[i + 1] for i in range(n - 1))
    neg_first = 1 if values[0] < 0 else 0
    des_b = des_a + neg_first
    fdes = 2 * des_a + neg_first
    return SignedStatRecord(des_a, des_b, fdes, 2 * n - 1 - fdes)


def signed_stats(pi) -> SignedStatRecord:
    """Statistics of a signed permutation; invalid or empty input raises."""
    values = pi.values if isinstance(pi, SignedPermutation) else tuple(pi)
    if len(values) == 0:
        raise ValueError("signed statistics need n >= 1")
    if sorted(abs(v) for v in values) != list(range(1, len(values) + 1)) or 0 in values:
        raise ValueError(f"not a signed permutation: {values}")
    return signed_stat_record(values)


def perm_des(pi) -> int:
    """Number of descents of a permutation of [n].

    >>> perm_des((4, 3, 5, 6, 2, 1))
    3
    """
    values = pi.values if isinstance(pi, Permutation) else tuple(pi)
    return sum(values[i] > values[i + 1] for i in range(len(values) - 1))


def matching_stat_record(blocks) -> MatchingStatRecord:
    el = sum(1 for b in blocks if max(b) % 2 == 0)
    return MatchingStatRecord(el, len(blocks) - el)


def matching_stats(m) -> MatchingStatRecord:
    """Block counts by parity of the larger entry; invalid input raises."""
    blocks = m.blocks if isinstance(m, PerfectMatching) else m
    return matching_stat_record(PerfectMatching.from_blocks(blocks).blocks)


_RECORDERS = {
    "stirling": lambda obj: stirling_stat_record(obj),
    "signed": lambda obj: signed_stat_record(obj),
    "matching": lambda obj: matching_stat_record(obj),
    "permutation": lambda obj: (perm_des(obj),),
}


@lru_cache(maxsize=None)
def _full_counts(klass: str, n: int) -> Mapping[tuple[int, ...], int]:
    """Joint counts of the full statistic record over a whole class."""
    record = _RECORDERS[klass]
    if klass == "permutation":
        return Counter(record(obj) for obj in iter_objects(klass, n))
    fields = STATS_BY_CLASS[klass]
    counts: Counter = Counter()
    for obj in iter_objects(klass, n):
        r = record(obj)
        counts[tuple(getattr(r, f) for f in fields)] += 1
    return counts


@dataclass(frozen=True)
class DistributionTable:
    """Exact joint distribution of named statistics over one object class."""

    klass: str
    n: int
    stat_names: tuple[str, ...]
    counts: Mapping[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.counts.values())

    def items_sorted(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())

    def marginal(self, stats: Sequence[str]) -> DistributionTable:
        """Project onto a subset (or reordering) of the tabulated statistics."""
        idx = [self.stat_names.index(s) for s in stats]
        out: Counter = Counter()
        for values, c in self.counts.items():
            out[tuple(values[i] for i in idx)] += c
        return DistributionTable(self.klass, self.n, tuple(stats), dict(out))

    def poly(self) -> QPoly:
        """The generating polynomial of a single-statistic table."""
        if len(self.stat_names) != 1:
            raise ValueError("poly() needs exactly one statistic")
        return QPoly.from_counts({v[0]: c for v, c in self.counts.items()})

    def tripoly(self) -> TriPoly:
        """The generating polynomial of a three-statistic table."""
        if len(self.stat_names) != 3:
            raise ValueError("tripoly() needs exactly three statistics")
        return TriPoly({v: c for v, c in self.counts.items()})

    def to_json(self) -> dict:
        return {
            "class": self.klass,
            "n": self.n,
            "stats": list(self.stat_names),
            "entries": [
                {"value": list(v), "count": c} for v, c in self.items_sorted()
            ],
        }


def distribution(
    klass: str,
    n: int,
    stats: Sequence[str],
    *,
    max_n: int | None = None,
) -> DistributionTable:
    """Exact joint distribution of ``stats`` over all objects of order n.

    Enumeration is bounded (see DEFAULT_BOUNDS); pass ``max_n`` to move the
    limit.  Exceeding it raises ResourceLimitError.
    """
    if klass not in STATS_BY_CLASS:
        raise ValueError(f"unknown object class: {klass!r}")
    names = STATS_BY_CLASS[klass]
    bad = [s for s in stats if s not in names]
    if bad:
        raise ValueError(f"unknown statistics for class {klass!r}: {bad}")
    if klass == "signed" and n < 1:
        raise ValueError("signed distributions need n >= 1")
    bound = DEFAULT_BOUNDS[klass] if max_n is None else max_n
    if n > bound:
        raise ResourceLimitError(
            f"n={n} exceeds the enumeration bound {bound} for class {klass!r}"
        )
    full = _full_counts(klass, n)
    idx = [names.index(s) for s in stats]
    out: Counter = Counter()
    for values, c in full.items():
        out[tuple(values[i] for i in idx)] += c
    return DistributionTable(klass, n, tuple(stats), dict(out))
