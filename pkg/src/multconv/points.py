"""Rational points of R^n and primitive integer rays.

A ray is the exact stand-in for a unit direction: two rational points on
the same open half-line map to the same primitive integer vector, and the
irrational normalisation lives in the measure weights instead.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .scalars import Surd
from .subsets import SubsetMask

Point = tuple[Fraction, ...]
Ray = tuple[int, ...]


def make_point(coords: Iterable) -> Point:
    values = tuple(coords)
    if not values:
        raise ValueError("points must have dimension >= 1")
    if any(isinstance(c, float) for c in values):
        raise TypeError("refusing float coordinates; use Fraction, int, or 'p/q' strings")
    return tuple(Fraction(c) for c in values)


def hadamard(x: Point, y: Point) -> Point:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return tuple(a * b for a, b in zip(x, y))


def reflect_point(x: Point, f: SubsetMask) -> Point:
    if len(x) != f.dim:
        raise ValueError(f"dimension mismatch: {len(x)} vs {f.dim}")
    return tuple(-c if f.bits >> i & 1 else c for i, c in enumerate(x))


def project_point(x: Point, e: SubsetMask) -> Point:
    if len(x) != e.dim:
        raise ValueError(f"dimension mismatch: {len(x)} vs {e.dim}")
    zero = Fraction(0)
    return tuple(c if e.bits >> i & 1 else zero for i, c in enumerate(x))


def zero_pattern(x: Point) -> SubsetMask:
    """The coordinate set where ``x`` is nonzero."""
    bits = 0
    for i, c in enumerate(x):
        if c:
            bits |= 1 << i
    return SubsetMask(bits, len(x))


def inner(x: Point, y: Point) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def norm_surd(x: Point) -> Surd:
    """Exact Euclidean norm as a surd."""
    return Surd.sqrt(inner(x, x))


def canonical_ray(x: Point) -> Ray:
    """Primitive integer representative of the open ray through ``x``.

    Clears denominators and divides by the gcd; only positive scaling is
    applied, so the sign pattern is preserved.
    """
    if not any(x):
        raise ValueError("the zero point spans no ray")
    scale = math.lcm(*(c.denominator for c in x))
    ints = [int(c * scale) for c in x]
    g = math.gcd(*ints)
    return tuple(v // g for v in ints)


# -- integer-ray counterparts ------------------------------------------------


def primitive_ray(v: Iterable[int]) -> Ray:
    values = tuple(v)
    if any(isinstance(c, float) for c in values):
        raise TypeError("refusing float ray entries; use integers")
    ints = tuple(int(c) for c in values)
    if not any(ints):
        raise ValueError("the zero vector spans no ray")
    g = math.gcd(*ints)
    return tuple(c // g for c in ints)


def ray_point(d: Ray) -> Point:
    return tuple(Fraction(c) for c in d)


def hadamard_ray(d: Ray, e: Ray) -> tuple[int, ...]:
    if len(d) != len(e):
        raise ValueError(f"dimension mismatch: {len(d)} vs {len(e)}")
    return tuple(a * b for a, b in zip(d, e))


def reflect_ray(d: Ray, f: SubsetMask) -> Ray:
    if len(d) != f.dim:
        raise ValueError(f"dimension mismatch: {len(d)} vs {f.dim}")
    return tuple(-c if f.bits >> i & 1 else c for i, c in enumerate(d))


def project_ray(d: Ray, e: SubsetMask) -> tuple[int, ...]:
    if len(d) != e.dim:
        raise ValueError(f"dimension mismatch: {len(d)} vs {e.dim}")
    return tuple(c if e.bits >> i & 1 else 0 for i, c in enumerate(d))


def ray_zero_pattern(d: Ray) -> SubsetMask:
    bits = 0
    for i, c in enumerate(d):
        if c:
            bits |= 1 << i
    return SubsetMask(bits, len(d))


def ray_norm_sq(d: Ray) -> int:
    return sum(c * c for c in d)


def negate_ray(d: Ray) -> Ray:
    return tuple(-c for c in d)
