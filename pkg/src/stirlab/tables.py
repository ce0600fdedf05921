"""Coefficient families via recurrences and closed forms.

Families and their one-letter polynomial names as used by the CLI:

- ``A``: Eulerian polynomials A_n(x) (descents over S_n);
- ``B``: type-B Eulerian polynomials B_n(x) (descents over B_n with pi(0)=0);
- ``F``: flag descent polynomials F_n(x) = (1+x)^n A_n(x);
- ``M``: ascent-plateau polynomials M_n(x) over Stirling permutations;
- ``N``: left ascent-plateau polynomials N_n(x);
- ``C``: ascent polynomials C_n(x);
- ``T``: flag ascent-plateau numbers T(n, k) and T_n(x);
- ``P``: trivariate refinement P_n(x, y, z) counting (lap, dasc, dp);
- ``G``: its gamma vector, G_n(x, y) = sum gamma_{n,i,j} x^i y^j.

Tables are exact integers; polynomial assembly returns QPoly / TriPoly
values.  A small JSON disk cache (:class:`TableCache`) can memoize the
CoefficientTable-producing builders, keyed by family and bound and
invalidated when the package version changes.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Mapping

from ._version import __version__
from .errors import IdentityViolationError
from .grammar import coefficient_profile, derive_n, parse_grammar, parse_poly
from .polynomials import QPoly, TriPoly

# the grammar whose derivative drives the flag statistics; D^n(y) encodes the
# ascent-plateau distribution, which is how m_poly avoids brute force
FLAG_GRAMMAR = parse_grammar("x -> x*y*z; y -> y*z^2; z -> y^2*z")

# the five-letter grammar refining (lap, dasc, dp); D^n(z) encodes P_n
REFINED_GRAMMAR = parse_grammar(
    "x -> x*z*q; y -> y*z*p; z -> x*y*z; p -> x*y*z; q -> x*y*z"
)

# the collapsed three-letter grammar; D^n(w) encodes the gamma vector
GAMMA_GRAMMAR = parse_grammar("u -> u*v*w; v -> 2*u*w; w -> u*w")


@dataclass(frozen=True)
class CoefficientTable:
    """An integer coefficient family, indexed by tuples, generated to a bound."""

    family: str
    arity: int
    bound: int
    entries: Mapping[tuple[int, ...], int]

    def value(self, *idx: int) -> int:
        """Entry at an index tuple; anything outside the support is 0."""
        return self.entries.get(idx, 0)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "bound": self.bound,
            "version": __version__,
            "entries": [
                {"idx": list(k), "val": str(v)}
                for k, v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping, arity: int) -> CoefficientTable:
        entries = {tuple(e["idx"]): int(e["val"]) for e in obj["entries"]}
        return cls(obj["family"], arity, obj["bound"], entries)


class TableCache:
    """Disk cache of coefficient tables, one JSON file per (family, bound)."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def _path(self, family: str, bound: int) -> Path:
        return self.directory / f"{family}-{bound}.json"

    def load(self, family: str, bound: int, arity: int) -> CoefficientTable | None:
        path = self._path(family, bound)
        if not path.exists():
            return None
        try:
            obj = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            return None
        if obj.get("version") != __version__ or obj.get("bound") != bound:
            return None
        return CoefficientTable.from_json(obj, arity)

    def store(self, table: CoefficientTable) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(table.family, table.bound)
        path.write_text(json.dumps(table.to_json()))


def _cached_build(family, arity, bound, cache, rows_fn):
    if cache is not None:
        found = cache.load(family, bound, arity)
        if found is not None:
            return found
    entries: dict[tuple[int, ...], int] = {}
    for n in range(bound + 1):
        for key, val in rows_fn(n).items():
            idx = (n,) + (key if isinstance(key, tuple) else (key,))
            entries[idx] = val
    table = CoefficientTable(family, arity, bound, entries)
    if cache is not None:
        cache.store(table)
    return table


# ---------------------------------------------------------------------------
# Eulerian numbers, type-B Eulerian numbers, Stirling numbers


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> dict[int, int]:
    if n == 0:
        return {0: 1}
    prev = _eulerian_row(n - 1)
    row: dict[int, int] = {}
    for k in range(n):
        v = (k + 1) * prev.get(k, 0) + (n - k) * prev.get(k - 1, 0)
        if v:
            row[k] = v
    return row


def eulerian(n: int, k: int) -> int:
    """Eulerian number: permutations of [n] with k descents (0 off-range)."""
    if n < 0 or k < 0:
        return 0
    return _eulerian_row(n).get(k, 0)


def a_poly(n: int) -> QPoly:
    """Eulerian polynomial A_n(x)."""
    return QPoly.from_counts(_eulerian_row(n))


@lru_cache(maxsize=None)
def _b_eulerian_row(n: int) -> dict[int, int]:
    # standard type-B recurrence: each descent slot doubles with the sign of
    # the inserted maximal letter
    if n == 0:
        return {0: 1}
    prev = _b_eulerian_row(n - 1)
    row: dict[int, int] = {}
    for k in range(n + 1):
        v = (2 * k + 1) * prev.get(k, 0) + (2 * (n - k) + 1) * prev.get(k - 1, 0)
        if v:
            row[k] = v
    return row


def b_eulerian(n: int, k: int) -> int:
    """Type-B Eulerian number: signed permutations with k descents (pi(0)=0)."""
    if n < 0 or k < 0:
        return 0
    return _b_eulerian_row(n).get(k, 0)


def b_poly(n: int) -> QPoly:
    """Type-B Eulerian polynomial B_n(x)."""
    return QPoly.from_counts(_b_eulerian_row(n))


def f_poly(n: int) -> QPoly:
    """Flag descent polynomial F_n(x) = (1+x)^n A_n(x)."""
    return QPoly((1, 1)) ** n * a_poly(n)


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> dict[int, int]:
    if n == 0:
        return {0: 1}
    prev = _stirling2_row(n - 1)
    row: dict[int, int] = {}
    for k in range(1, n + 1):
        v = k * prev.get(k, 0) + prev.get(k - 1, 0)
        if v:
            row[k] = v
    return row


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k) (0 off-range)."""
    if n < 0 or k < 0:
        return 0
    return _stirling2_row(n).get(k, 0)


def eulerian_table(n_max: int, cache: TableCache | None = None) -> CoefficientTable:
    return _cached_build("eulerian", 2, n_max, cache, _eulerian_row)


# ---------------------------------------------------------------------------
# flag ascent-plateau numbers T(n, k)


@lru_cache(maxsize=None)
def _t_row(n: int) -> dict[int, int]:
    # T(n+1, k) = k T(n, k) + T(n, k-1) + (2n - k + 2) T(n, k-2); T(0, 0) = 1.
    # The three terms are insertion of a new doubled letter at an existing
    # flag ascent-plateau, at the front of an ascent start, and at any of the
    # remaining positions.
    if n == 0:
        return {0: 1}
    prev = _t_row(n - 1)
    row: dict[int, int] = {}
    for k in range(2 * n + 1):
        v = (
            k * prev.get(k, 0)
            + prev.get(k - 1, 0)
            + (2 * (n - 1) - k + 2) * prev.get(k - 2, 0)
        )
        if v:
            row[k] = v
    return row


def t_number(n: int, k: int) -> int:
    """Flag ascent-plateau number T(n, k) (0 off-range)."""
    if n < 0 or k < 0:
        return 0
    return _t_row(n).get(k, 0)


def t_poly(n: int) -> QPoly:
    """T_n(x): the flag ascent-plateau distribution over Q_n."""
    return QPoly.from_counts(_t_row(n))


def t_table(n_max: int, cache: TableCache | None = None) -> CoefficientTable:
    return _cached_build("t", 2, n_max, cache, _t_row)


# ---------------------------------------------------------------------------
# the trivariate refinement P_n(i, j, k)


@lru_cache(maxsize=None)
def _p_row(n: int) -> dict[tuple[int, int, int], int]:
    # P_{n+1}(i,j,k) = i P_n(i,j-1,k) + i P_n(i,j,k-1) + (j+1) P_n(i-1,j+1,k)
    #                + (k+1) P_n(i-1,j,k+1) + (2n+3-2i-j-k) P_n(i-1,j,k),
    # the five insertion cases for a new doubled letter (after the first of a
    # doubled pair, before it, at a double ascent, at a descent-plateau, and
    # at a neutral position).
    if n == 0:
        return {(0, 0, 0): 1}
    prev = _p_row(n - 1)
    m = n - 1
    row: dict[tuple[int, int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(n):
            for k in range(n):
                v = (
                    i * prev.get((i, j - 1, k), 0)
                    + i * prev.get((i, j, k - 1), 0)
                    + (j + 1) * prev.get((i - 1, j + 1, k), 0)
                    + (k + 1) * prev.get((i - 1, j, k + 1), 0)
                    + (2 * m + 3 - 2 * i - j - k) * prev.get((i - 1, j, k), 0)
                )
                if v:
                    row[(i, j, k)] = v
    return row


def p_number(n: int, i: int, j: int, k: int) -> int:
    """Count of Q_n words with lap = i, dasc = j, dp = k (0 off-range)."""
    return _p_row(n).get((i, j, k), 0)


def p_poly(n: int) -> TriPoly:
    """P_n(x, y, z) = sum x^lap y^dasc z^dp over Q_n."""
    return TriPoly({e: c for e, c in _p_row(n).items()})


def p_polys_differential(n_max: int) -> list[TriPoly]:
    """P_0..P_{n_max} through the differential recurrence, an independent
    path from the index recurrence behind :func:`p_poly`."""
    x = TriPoly.monomial(1, 0, 0)
    xy = TriPoly.monomial(1, 1, 0)
    xz = TriPoly.monomial(1, 0, 1)
    x2 = TriPoly.monomial(2, 0, 0)
    out = [TriPoly.one()]
    for n in range(n_max):
        p = out[-1]
        nxt = (
            p * x * (2 * n + 1)
            + (xy + xz - 2 * x2) * p.partial(0)
            + (x - xy) * p.partial(1)
            + (x - xz) * p.partial(2)
        )
        out.append(nxt)
    return out


def p_table(n_max: int, cache: TableCache | None = None) -> CoefficientTable:
    return _cached_build("p", 4, n_max, cache, _p_row)


# ---------------------------------------------------------------------------
# the gamma vector gamma_{n,i,j}


@lru_cache(maxsize=None)
def _gamma_row(n: int) -> dict[tuple[int, int], int]:
    # gamma_{n+1,i,j} = i gamma_{n,i,j-1} + 2(j+1) gamma_{n,i-1,j+1}
    #                 + (2n+3-2i-j) gamma_{n,i-1,j}
    if n == 0:
        return {(0, 0): 1}
    prev = _gamma_row(n - 1)
    m = n - 1
    row: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(n):
            v = (
                i * prev.get((i, j - 1), 0)
                + 2 * (j + 1) * prev.get((i - 1, j + 1), 0)
                + (2 * m + 3 - 2 * i - j) * prev.get((i - 1, j), 0)
            )
            if v:
                row[(i, j)] = v
    return row


def gamma_number(n: int, i: int, j: int) -> int:
    """gamma_{n,i,j}: descent-plateau-free words with lap = i, dasc = j."""
    return _gamma_row(n).get((i, j), 0)


def g_poly(n: int) -> TriPoly:
    """G_n(x, y) = sum gamma_{n,i,j} x^i y^j (stored with z-exponent 0)."""
    return TriPoly({(i, j, 0): c for (i, j), c in _gamma_row(n).items()})


def g_polys_differential(n_max: int) -> list[TriPoly]:
    """G_0..G_{n_max} through the differential recurrence, an independent
    path from the index recurrence behind :func:`g_poly`."""
    x = TriPoly.monomial(1, 0, 0)
    xy = TriPoly.monomial(1, 1, 0)
    x2 = TriPoly.monomial(2, 0, 0)
    out = [TriPoly.one()]
    for n in range(n_max):
        g = out[-1]
        nxt = (
            g * x * (2 * n + 1)
            + (xy - 2 * x2) * g.partial(0)
            + (2 * x - xy) * g.partial(1)
        )
        out.append(nxt)
    return out


def gamma_table(n_max: int, cache: TableCache | None = None) -> CoefficientTable:
    return _cached_build("gamma", 3, n_max, cache, _gamma_row)


# ---------------------------------------------------------------------------
# ascent and left ascent-plateau polynomial sequences


def cn_nn_tables(n_max: int) -> tuple[list[QPoly], list[QPoly]]:
    """(C_0..C_n, N_0..N_n) through their differential recurrences.

    C_{n+1} = (2n+1) x C_n + x(1-x) C_n' turns into coefficients as
    C_{n+1}[k] = k C_n[k] + (2n+2-k) C_n[k-1], since x C_n' contributes
    k C_n[k] and -x^2 C_n' contributes -(k-1) C_n[k-1]; similarly
    N_{n+1}[k] = 2k N_n[k] + (2n+3-2k) N_n[k-1] with the doubled x(1-x) N_n'.
    """
    cs = [QPoly.one()]
    ns = [QPoly.one()]
    for n in range(n_max):
        c, nn = cs[-1], ns[-1]
        cs.append(
            QPoly(
                k * c[k] + (2 * n + 2 - k) * c[k - 1]
                for k in range(c.degree + 2)
            )
        )
        ns.append(
            QPoly(
                2 * k * nn[k] + (2 * n + 3 - 2 * k) * nn[k - 1]
                for k in range(nn.degree + 2)
            )
        )
    return cs, ns


def c_poly(n: int) -> QPoly:
    """C_n(x): the ascent distribution over Q_n."""
    return cn_nn_tables(n)[0][n]


def n_poly(n: int) -> QPoly:
    """N_n(x): the left ascent-plateau distribution over Q_n."""
    return cn_nn_tables(n)[1][n]


def m_poly(n: int) -> QPoly:
    """M_n(x): the ascent-plateau distribution over Q_n.

    Computed through the grammar derivative: the n-th derivative of y under
    the flag grammar is y * sum y^(2 ap) z^(2n - 2 ap).
    """
    profile = coefficient_profile(derive_n(parse_poly("y"), FLAG_GRAMMAR, n), ["y"])
    counts: dict[int, int] = {}
    for (e,), c in profile.items():
        if (e - 1) % 2:
            raise IdentityViolationError(f"odd ascent-plateau weight exponent {e}")
        counts[(e - 1) // 2] = c
    return QPoly.from_counts(counts)


def n_closed(n: int, k: int) -> int:
    """Coefficient of x^k in the closed form of N_n(x)."""
    c = n_poly_closed(n)[k]
    return int(c)


def n_poly_closed(n: int) -> QPoly:
    """N_n(x) = sum_k 2^(n-2k) C(2k,k) k! S(n,k) x^k (1-x)^(n-k).

    The powers of two go negative for k > n/2, so the expansion runs over
    rationals; the assembled polynomial is integral.
    """
    one_minus_x = QPoly((1, -1))
    acc = QPoly.one() if n == 0 else QPoly.zero()
    for k in range(1, n + 1):
        w = (
            Fraction(2) ** (n - 2 * k)
            * math.comb(2 * k, k)
            * math.factorial(k)
            * stirling2(n, k)
        )
        acc = acc + QPoly.monomial(k, w) * one_minus_x ** (n - k)
    if not acc.is_integral():
        raise IdentityViolationError(f"closed form of N_{n} is not integral: {acc}")
    return acc


def gamma_weighted_sum(n: int, i: int) -> int:
    """sum_j 2^j gamma_{n,i,j}, evaluated two ways and cross-checked.

    The second way is the alternating closed form
    sum_{j=1}^{i} (-1)^(i-j) 2^(n-2j) C(2j,j) C(n-j,i-j) j! S(n,j);
    a mismatch raises IdentityViolationError.
    """
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    direct = sum(2**j * gamma_number(n, i, j) for j in range(n))
    alt = Fraction(0)
    for j in range(1, i + 1):
        alt += (
            Fraction(-1) ** (i - j)
            * Fraction(2) ** (n - 2 * j)
            * math.comb(2 * j, j)
            * math.comb(n - j, i - j)
            * math.factorial(j)
            * stirling2(n, j)
        )
    if alt != direct:
        raise IdentityViolationError(
            f"weighted gamma sum mismatch at (n={n}, i={i}): {direct} vs {alt}"
        )
    return direct
