"""Exact scalars: arbitrary-precision rationals and quadratic surds.

A :class:`Surd` is a finite rational combination of square roots of
distinct square-free positive integers (radicand 1 carries the rational
part).  The representation is canonical, so equality is structural, the
zero test is exact, and the sign of any value is decidable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction]
SurdLike = Union[int, Fraction, "Surd"]

DEFAULT_FACTOR_BOUND = 10**6


class FactorLimitError(ValueError):
    """A radicand could not be certified square-free by trial division."""


def square_free_decompose(m: int, bound: int = DEFAULT_FACTOR_BOUND) -> tuple[int, int]:
    """Split ``m >= 1`` as ``k**2 * f`` with ``f`` square-free.

    Uses trial division.  Raises :class:`FactorLimitError` when a divisor
    beyond ``bound`` would be required to certify the result.
    """
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    square = 1
    free = 1
    d = 2
    while d * d <= m:
        if d > bound:
            raise FactorLimitError(
                f"radicand {m} exceeds the trial-division bound {bound}"
            )
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            square *= d ** (e // 2)
            if e % 2:
                free *= d
        d += 1 if d == 2 else 2
    # the leftover cofactor is 1 or prime
    return square, free * m


def _sqrt_bounds(r: int, prec: int) -> tuple[Fraction, Fraction]:
    # m/2^prec <= sqrt(r) < (m+1)/2^prec
    m = math.isqrt(r << (2 * prec))
    return Fraction(m, 1 << prec), Fraction(m + 1, 1 << prec)


def _coerce_rational(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("refusing float input; use Fraction or int for exactness")
    return Fraction(value)


class Surd:
    """Exact value of the form ``sum_i c_i * sqrt(r_i)``.

    Terms are stored sorted by radicand with no zero coefficients, all
    radicands square-free, so two equal values always have identical term
    tuples.
    """

    __slots__ = ("_terms", "_hash")

    _terms: tuple[tuple[int, Fraction], ...]

    def __init__(self, value: RationalLike = 0):
        q = _coerce_rational(value)
        self._terms = ((1, q),) if q else ()
        self._hash = None

    @classmethod
    def _from_map(cls, terms: dict[int, Fraction]) -> "Surd":
        out = cls.__new__(cls)
        out._terms = tuple(sorted((r, c) for r, c in terms.items() if c))
        out._hash = None
        return out

    @classmethod
    def sqrt(cls, value: RationalLike, *, factor_bound: int = DEFAULT_FACTOR_BOUND) -> "Surd":
        """Exact square root of a non-negative rational."""
        q = _coerce_rational(value)
        if q < 0:
            raise ValueError(f"square root of a negative rational: {q}")
        if q == 0:
            return cls(0)
        # sqrt(a/b) = sqrt(a*b)/b = (k/b) * sqrt(f)  with  a*b = k^2 * f
        k, f = square_free_decompose(q.numerator * q.denominator, bound=factor_bound)
        return cls._from_map({f: Fraction(k, q.denominator)})

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_rational(self) -> bool:
        return len(self._terms) == 0 or (len(self._terms) == 1 and self._terms[0][0] == 1)

    def rational_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if self.is_rational():
            return self._terms[0][1]
        raise ValueError(f"{self} is irrational")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: SurdLike) -> "Surd":
        other = as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for r, c in other._terms:
            acc[r] = acc.get(r, Fraction(0)) + c
        return Surd._from_map(acc)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd._from_map({r: -c for r, c in self._terms})

    def __sub__(self, other: SurdLike) -> "Surd":
        other = as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: SurdLike) -> "Surd":
        return (-self) + other

    def __mul__(self, other: SurdLike) -> "Surd":
        other = as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for r1, c1 in self._terms:
            for r2, c2 in other._terms:
                # sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)*(r2/g)) with g = gcd;
                # the product of coprime square-free numbers is square-free
                g = math.gcd(r1, r2)
                rad = (r1 // g) * (r2 // g)
                acc[rad] = acc.get(rad, Fraction(0)) + c1 * c2 * g
        return Surd._from_map(acc)

    __rmul__ = __mul__

    def __abs__(self) -> "Surd":
        return -self if self.sign() < 0 else self

    # -- decisions ---------------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}.

        Zero is structural.  A nonzero value is separated from zero by
        interval enclosures of doubling precision; termination follows from
        the linear independence over Q of square roots of distinct
        square-free integers.
        """
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            return -1 if self._terms[0][1] < 0 else 1
        prec = 16
        while True:
            lo = Fraction(0)
            hi = Fraction(0)
            for r, c in self._terms:
                if r == 1:
                    lo += c
                    hi += c
                    continue
                slo, shi = _sqrt_bounds(r, prec)
                if c > 0:
                    lo += c * slo
                    hi += c * shi
                else:
                    lo += c * shi
                    hi += c * slo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Surd(other)
        if not isinstance(other, Surd):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __lt__(self, other: SurdLike) -> bool:
        diff = self - as_surd(other)
        return diff.sign() < 0

    def __le__(self, other: SurdLike) -> bool:
        diff = self - as_surd(other)
        return diff.sign() <= 0

    def __gt__(self, other: SurdLike) -> bool:
        return as_surd(other) < self

    def __ge__(self, other: SurdLike) -> bool:
        return as_surd(other) <= self

    # -- conversions -------------------------------------------------------

    def __float__(self) -> float:
        return sum(float(c) * math.sqrt(r) for r, c in self._terms)

    def to_json(self) -> list:
        """``[["p/q", radicand], ...]`` sorted by radicand."""
        return [[str(c), r] for r, c in self._terms]

    @classmethod
    def from_json(cls, data) -> "Surd":
        acc: dict[int, Fraction] = {}
        for coeff, radicand in data:
            r = int(radicand)
            if r < 1:
                raise ValueError(f"radicand must be >= 1, got {r}")
            _, free = square_free_decompose(r)
            if free != r:
                raise ValueError(f"radicand {r} is not square-free")
            acc[r] = acc.get(r, Fraction(0)) + Fraction(coeff)
        return cls._from_map(acc)

    def __repr__(self) -> str:
        return f"Surd({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for r, c in self._terms:
            if r == 1:
                text = str(c)
            elif c == 1:
                text = f"sqrt({r})"
            elif c == -1:
                text = f"-sqrt({r})"
            else:
                text = f"{c}*sqrt({r})"
            if parts and not text.startswith("-"):
                parts.append("+" + text)
            else:
                parts.append(text)
        return "".join(parts)


def as_surd(value: SurdLike) -> "Surd":
    if isinstance(value, Surd):
        return value
    if isinstance(value, (int, Fraction)):
        return Surd(value)
    return NotImplemented


ZERO = Surd(0)
ONE = Surd(1)
HALF = Fraction(1, 2)
