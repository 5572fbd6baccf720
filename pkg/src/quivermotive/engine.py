"""The generating-function engine for quiver variety classes.

For a quiver with framing vector w, the class of the variety attached to a
dimension vector v is read off a quotient of two partition-indexed series:
the numerator sums, over tuples of partitions (one per vertex), a term

    L^kappa / [Z]

where kappa collects the partition pairings over the arrows and the framing,
and [Z] is the class of the centralizer of a nilpotent tuple of the given
Jordan types.  The denominator is the same sum with zero framing.  The
T^v coefficient of the quotient, shifted by L to the power -(group dim minus
representation dim), is an integer polynomial in L; anything else signals a
bug and raises.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .lrat import LRat, ONE, Poly, _padd, _pmul, _pshift, _reduced
from .partitions import Partition, pairing, tuples_with_sizes
from .quiver import Quiver, check_dim_vector, d_shift
from .series import MSeries, exponents_upto


class PolynomialityError(ArithmeticError):
    """The extracted class failed to reduce to an integer polynomial in L."""


@dataclass(frozen=True)
class MotiveResult:
    """The class of one quiver variety, as raw coefficient and polynomial."""

    quiver: Quiver
    v: tuple[int, ...]
    w: tuple[int, ...]
    d_shift: int
    coefficient_raw: LRat
    class_polynomial: tuple[int, ...]


@lru_cache(maxsize=None)
def _centralizer_factored(lam: Partition) -> tuple[int, tuple[int, ...]]:
    """Centralizer class of a nilpotent of Jordan type lam, factored.

    Returns (a, js) meaning L^a times the product of (L^j - 1) over js.
    """
    inner = pairing(lam, lam)
    js: list[int] = []
    for _, mult in sorted(lam.multiplicities().items()):
        js.extend(range(1, mult + 1))
    return inner - sum(js), tuple(js)


@lru_cache(maxsize=None)
def _cyclo_factor(j: int) -> Poly:
    # L^j - 1
    return _padd(_pshift((1,), j), (-1,))


def _factors_poly(js: Iterable[int]) -> Poly:
    out: Poly = (1,)
    for j in js:
        out = _pmul(out, _cyclo_factor(j))
    return out


def centralizer_class(lam_tuple: Sequence[Partition]) -> LRat:
    """Class of the centralizer of a tuple of nilpotent Jordan types.

    Always a polynomial in L; the empty tuple gives 1.
    """
    power = 0
    js: list[int] = []
    for lam in lam_tuple:
        a, f = _centralizer_factored(lam)
        power += a
        js.extend(f)
    return LRat._raw(_pshift(_factors_poly(js), power), (1,))


def kappa(quiver: Quiver, w: Sequence[int], lam_tuple: Sequence[Partition]) -> int:
    """Pairing sum over arrows plus framing pairings against (1,...,1)."""
    w = check_dim_vector(quiver, w, "w")
    if len(lam_tuple) != quiver.vertex_count:
        raise ValueError(
            f"partition tuple has {len(lam_tuple)} entries, "
            f"quiver has {quiver.vertex_count} vertices"
        )
    total = sum(pairing(lam_tuple[s], lam_tuple[t]) for s, t in quiver.arrows)
    total += sum(pairing(Partition.ones(wi), lam) for wi, lam in zip(w, lam_tuple))
    return total


def _term_factored(
    quiver: Quiver, w: Sequence[int], lam_tuple: Sequence[Partition]
) -> tuple[int, tuple[int, ...]]:
    """One series term as (power, js): L^power over product of (L^j - 1)."""
    power = kappa(quiver, w, lam_tuple)
    js: list[int] = []
    for lam in lam_tuple:
        a, f = _centralizer_factored(lam)
        power -= a
        js.extend(f)
    js.sort()
    return power, tuple(js)


def hua_term(quiver: Quiver, w: Sequence[int], lam_tuple: Sequence[Partition]) -> LRat:
    """The series term attached to one partition tuple: L^kappa / centralizer."""
    power, js = _term_factored(quiver, w, lam_tuple)
    den = _factors_poly(js)
    if power >= 0:
        return LRat._raw(_pshift((1,), power), den)
    return LRat._raw((1,), _pshift(den, -power))


def hua_term_direct(
    quiver: Quiver, w: Sequence[int], lam_tuple: Sequence[Partition]
) -> LRat:
    """The same term assembled literally from its printed form.

    Numerator: product over arrows of L^<lam_s, lam_t> times the framing
    powers; denominator: per vertex, L^<lam, lam> times the product of
    (1 - L^-j).  Slow; used to cross-check hua_term.
    """
    w = check_dim_vector(quiver, w, "w")
    num = ONE
    for s, t in quiver.arrows:
        num = num * LRat.l_power(pairing(lam_tuple[s], lam_tuple[t]))
    for wi, lam in zip(w, lam_tuple):
        num = num * LRat.l_power(pairing(Partition.ones(wi), lam))
    den = ONE
    for lam in lam_tuple:
        den = den * LRat.l_power(pairing(lam, lam))
        for _, mult in sorted(lam.multiplicities().items()):
            for j in range(1, mult + 1):
                den = den * (ONE - LRat.l_power(-j))
    return num / den


def _sum_factored(terms: list[tuple[int, tuple[int, ...]]]) -> LRat:
    """Sum of L^power / prod(L^j - 1) terms, normalized once at the end."""
    common: dict[int, int] = {}
    for _, js in terms:
        counts: dict[int, int] = {}
        for j in js:
            counts[j] = counts.get(j, 0) + 1
        for j, m in counts.items():
            if m > common.get(j, 0):
                common[j] = m
    shift = max(0, -min(p for p, _ in terms))
    num: Poly = ()
    for power, js in terms:
        counts = dict(common)
        for j in js:
            counts[j] -= 1
        missing = [j for j, m in counts.items() for _ in range(m)]
        num = _padd(num, _pshift(_factors_poly(missing), power + shift))
    den = _pshift(_factors_poly(j for j, m in sorted(common.items()) for _ in range(m)), shift)
    return LRat._raw(*_reduced(num, den))


def nilpotent_series(
    quiver: Quiver, w: Sequence[int], bound: int, threads: int = 1
) -> MSeries:
    """Sum of hua_term over all partition tuples, graded by per-vertex sizes.

    The T-exponent of a tuple is its vector of partition sizes; the constant
    term is always 1.
    """
    w = check_dim_vector(quiver, w, "w")
    if bound < 0:
        raise ValueError("truncation bound must be nonnegative")
    n = quiver.vertex_count
    exps = exponents_upto(n, bound)

    def coefficient_for(exp: tuple[int, ...]) -> LRat:
        terms = [_term_factored(quiver, w, tup) for tup in tuples_with_sizes(exp)]
        return _sum_factored(terms)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(coefficient_for, exps))
    else:
        values = [coefficient_for(exp) for exp in exps]
    coeffs = {exp: c for exp, c in zip(exps, values) if c}
    return MSeries._raw(n, bound, coeffs)


_SERIES_CACHE: dict[tuple, MSeries] = {}


def _nilpotent_cached(quiver: Quiver, w: tuple[int, ...], bound: int, threads: int) -> MSeries:
    key = ("nilpotent", quiver, w, bound)
    got = _SERIES_CACHE.get(key)
    if got is None:
        got = _SERIES_CACHE[key] = nilpotent_series(quiver, w, bound, threads)
    return got


def _denominator_inverse(quiver: Quiver, bound: int, threads: int) -> MSeries:
    key = ("inverse", quiver, bound)
    got = _SERIES_CACHE.get(key)
    if got is None:
        zero_w = (0,) * quiver.vertex_count
        got = _SERIES_CACHE[key] = _nilpotent_cached(quiver, zero_w, bound, threads).invert()
    return got


def motive_series(quiver: Quiver, w: Sequence[int], bound: int, threads: int = 1) -> MSeries:
    """The quotient series whose T^v coefficient carries the class of (v, w).

    Equals the framed nilpotent series divided by its zero-framing sibling;
    the constant term is 1 by construction.
    """
    w = check_dim_vector(quiver, w, "w")
    numerator = _nilpotent_cached(quiver, w, bound, threads)
    return numerator * _denominator_inverse(quiver, bound, threads)


def motive_class(
    quiver: Quiver, v: Sequence[int], w: Sequence[int], threads: int = 1
) -> MotiveResult:
    """The class of the quiver variety for (v, w) as a polynomial in L.

    Truncates the series at total degree sum(v), extracts the T^v
    coefficient and clears the dimension shift.  A non-polynomial result
    raises PolynomialityError (it would mean an engine bug, not a feature of
    the input).
    """
    v = check_dim_vector(quiver, v, "v")
    w = check_dim_vector(quiver, w, "w")
    series = motive_series(quiver, w, sum(v), threads)
    return _result_from_coefficient(quiver, v, w, series.coefficient(v))


def _result_from_coefficient(
    quiver: Quiver, v: tuple[int, ...], w: tuple[int, ...], raw: LRat
) -> MotiveResult:
    d = d_shift(quiver, v, w)
    shifted = raw * LRat.l_power(-d)
    poly = shifted.as_polynomial()
    if poly is None:
        raise PolynomialityError(
            f"polynomiality violated for v={v}, w={w}: got {shifted}"
        )
    if any(c < 0 for c in poly):
        warnings.warn(
            f"negative coefficient in class polynomial for v={v}, w={w}: {poly}",
            RuntimeWarning,
            stacklevel=2,
        )
    return MotiveResult(quiver, v, w, d, raw, poly)


def motive_table(
    quiver: Quiver, w: Sequence[int], bound: int, threads: int = 1
) -> list[MotiveResult]:
    """Classes for every v with total size <= bound, from one shared series.

    Rows come out in graded lexicographic order of v.  Each row agrees with
    a direct motive_class call by truncation independence.
    """
    w = check_dim_vector(quiver, w, "w")
    series = motive_series(quiver, w, bound, threads)
    return [
        _result_from_coefficient(quiver, exp, w, series.coefficient(exp))
        for exp in exponents_upto(quiver.vertex_count, bound)
    ]


def betti_report(result: MotiveResult) -> list[tuple[int, int]]:
    """Nonzero coefficients of the class polynomial, ascending in the L power."""
    return [(k, c) for k, c in enumerate(result.class_polynomial) if c]
