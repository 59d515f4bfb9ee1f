from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multconv.points import (
    canonical_ray,
    hadamard,
    inner,
    make_point,
    norm_surd,
    primitive_ray,
    project_point,
    reflect_point,
    zero_pattern,
)
from multconv.scalars import Surd
from multconv.subsets import SubsetMask

coords = st.fractions(min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6)


@st.composite
def points(draw, dim=None):
    d = dim if dim is not None else draw(st.integers(1, 4))
    return tuple(draw(coords) for _ in range(d))


def F(*values):
    return make_point(values)


def test_hadamard_examples():
    assert hadamard(F(1, -1), F(2, 3)) == F(2, -3)
    assert hadamard(F(5, -7), F(1, 1)) == F(5, -7)
    assert hadamard(F(1, 0), F(0, 1)) == F(0, 0)


def test_hadamard_dim_mismatch():
    with pytest.raises(ValueError):
        hadamard(F(1), F(1, 2))


def test_reflect_examples():
    x = F(2, 3)
    assert reflect_point(x, SubsetMask.empty(2)) == x
    assert reflect_point(x, SubsetMask.from_indices(2, [1])) == F(-2, 3)
    ones = F(1, 1, 1)
    f = SubsetMask.from_indices(3, [1, 3])
    assert reflect_point(ones, f) == F(-1, 1, -1)


def test_project_examples():
    x = F(1, 2, 3)
    assert project_point(x, SubsetMask.full(3)) == x
    assert project_point(x, SubsetMask.empty(3)) == F(0, 0, 0)
    assert project_point(x, SubsetMask.from_indices(3, [2])) == F(0, 2, 0)


@given(points(dim=3))
@settings(max_examples=100, deadline=None)
def test_projection_composes_by_intersection(x):
    for ebits in range(8):
        for fbits in range(8):
            e = SubsetMask(ebits, 3)
            f = SubsetMask(fbits, 3)
            assert project_point(project_point(x, e), f) == project_point(x, e & f)


def test_zero_pattern_examples():
    assert zero_pattern(F(0, 0)) == SubsetMask.empty(2)
    assert zero_pattern(F(1, 0, -2)) == SubsetMask.from_indices(3, [1, 3])
    assert zero_pattern(F(1, 1, 1)) == SubsetMask.full(3)


@given(points(dim=3), points(dim=3))
@settings(max_examples=100, deadline=None)
def test_zero_pattern_of_product_intersects(x, y):
    assert zero_pattern(hadamard(x, y)) == zero_pattern(x) & zero_pattern(y)


@given(points(dim=3), points(dim=3))
@settings(max_examples=100, deadline=None)
def test_projection_slides_through_product(x, y):
    for bits in range(8):
        e = SubsetMask(bits, 3)
        lhs = project_point(hadamard(x, y), e)
        assert lhs == hadamard(project_point(x, e), y)
        assert lhs == hadamard(project_point(x, e), project_point(y, e))


def test_canonical_ray_examples():
    assert canonical_ray(F(Fraction(1, 2), Fraction(1, 2))) == (1, 1)
    assert canonical_ray(F(2, -4)) == (1, -2)
    assert canonical_ray(F(3, 4)) == canonical_ray(F(Fraction(3, 5), Fraction(4, 5)))


def test_canonical_ray_rejects_zero():
    with pytest.raises(ValueError):
        canonical_ray(F(0, 0))


@given(points(dim=3), st.fractions(min_value=Fraction(1, 5), max_value=Fraction(9), max_denominator=5))
@settings(max_examples=100, deadline=None)
def test_canonical_ray_scale_invariant(x, a):
    if not any(x):
        return
    scaled = tuple(a * c for c in x)
    assert canonical_ray(scaled) == canonical_ray(x)


def test_norm_examples():
    assert norm_surd(F(3, 4)) == Surd(5)
    assert norm_surd(F(1, 1)) == Surd.sqrt(2)
    assert norm_surd(F(0, 0)) == Surd(0)


@given(points(dim=2), points(dim=2))
@settings(max_examples=80, deadline=None)
def test_norm_submultiplicative(x, y):
    prod = norm_surd(hadamard(x, y))
    bound = norm_surd(x) * norm_surd(y)
    assert (bound - prod).sign() >= 0


def test_primitive_ray():
    assert primitive_ray((2, -4, 6)) == (1, -2, 3)
    with pytest.raises(ValueError):
        primitive_ray((0, 0))


def test_inner():
    assert inner(F(1, 2), F(3, 4)) == Fraction(11)
