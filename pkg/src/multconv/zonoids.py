"""Zonotopes, generating measures, exact support functions, and D-universality.

A zonotope is a finite sum of segments through the origin.  Its support
function is the integral of ``|<v, u>|`` against a symmetric measure on
the sphere, the generating measure; diagonal transforms of the body act
on that measure by the sphere product, so injectivity questions about the
body reduce to spherical universality of its generating measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .measures import msym
from .points import (
    Point,
    canonical_ray,
    inner,
    make_point,
    negate_ray,
    norm_surd,
    ray_norm_sq,
)
from .scalars import HALF, Surd
from .subsets import GeneratingPair, SubsetMask, all_subsets
from .sphere import SphereMeasure, sconv
from .universality import UniversalityReport, decide_universal_sphere


@dataclass(frozen=True, slots=True)
class Zonotope:
    """Sum of segments [-v, v] over the generator list; origin-symmetric."""

    dim: int
    generators: tuple[Point, ...]

    def __post_init__(self):
        gens = tuple(make_point(g) for g in self.generators)
        for g in gens:
            if len(g) != self.dim:
                raise ValueError(f"generator {g} has dimension {len(g)}, expected {self.dim}")
            if not any(g):
                raise ValueError("zero generator")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def make(cls, dim: int, generators: Iterable[Iterable]) -> "Zonotope":
        return cls(dim, tuple(tuple(Fraction(c) for c in g) for g in generators))

    @classmethod
    def cube(cls, dim: int) -> "Zonotope":
        gens = []
        for i in range(dim):
            coords = [Fraction(0)] * dim
            coords[i] = Fraction(1)
            gens.append(tuple(coords))
        return cls(dim, tuple(gens))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "generators": [[str(c) for c in g] for g in self.generators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Zonotope":
        return cls.make(int(data["dim"]), data.get("generators", []))


def generating_measure(z: Zonotope) -> SphereMeasure:
    """Symmetric non-negative sphere measure reproducing the support function.

    Each generator v contributes half its length at the two opposite rays
    through v, so integrating ``|<., u>|`` gives exactly ``|<v, u>|``.
    """
    acc: dict[tuple[int, ...], Surd] = {}
    for g in z.generators:
        ray = canonical_ray(g)
        w = norm_surd(g) * HALF
        for r in (ray, negate_ray(ray)):
            prev = acc.get(r)
            acc[r] = w if prev is None else prev + w
    return SphereMeasure(z.dim, acc)


def support_function(nu: SphereMeasure, u: Iterable) -> Surd:
    """Evaluate the support-function integral of ``nu`` at ``u`` exactly."""
    u = make_point(u)
    if len(u) != nu.dim:
        raise ValueError(f"dimension mismatch: {len(u)} vs {nu.dim}")
    total = Surd(0)
    for ray, w in nu.atoms.items():
        ip = inner(tuple(Fraction(c) for c in ray), u)
        total = total + w * abs(ip) * Surd.sqrt(Fraction(1, ray_norm_sq(ray)))
    return total


def k_transform(nu_k: SphereMeasure, mu: SphereMeasure, u: Iterable) -> Surd:
    """Support function of the body transform at ``u`` via the sphere product.

    Collapsing the double integral through the sphere product keeps the
    evaluation exact; requires an origin-symmetric argument measure.
    """
    if not mu.is_even_under(SubsetMask.full(mu.dim)):
        raise ValueError("the transformed measure must be origin-symmetric")
    return support_function(sconv(nu_k, mu), u)


def k_transform_direct(nu_k: SphereMeasure, mu: SphereMeasure, u: Iterable) -> Surd:
    """Same value as :func:`k_transform` by the raw double sum (oracle route)."""
    if not mu.is_even_under(SubsetMask.full(mu.dim)):
        raise ValueError("the transformed measure must be origin-symmetric")
    u = make_point(u)
    if len(u) != mu.dim or nu_k.dim != mu.dim:
        raise ValueError("dimension mismatch")
    total = Surd(0)
    for d, wd in mu.atoms.items():
        scaled = tuple(Fraction(c) * x for c, x in zip(d, u))
        nd = ray_norm_sq(d)
        for e, we in nu_k.atoms.items():
            ip = inner(tuple(Fraction(c) for c in e), scaled)
            total = total + wd * we * abs(ip) * Surd.sqrt(Fraction(1, nd * ray_norm_sq(e)))
    return total


def decide_d_universal(nu: SphereMeasure, unconditional: bool = False) -> UniversalityReport:
    """Decide D-universality of the body generated by ``nu``.

    Equivalent to spherical universality of the generating measure on the
    symmetric (or unconditional) measures over all nonempty patterns.
    """
    n = nu.dim
    if not nu.is_even_under(SubsetMask.full(n)):
        raise ValueError("generating measures are origin-symmetric")
    if unconditional:
        pair = GeneratingPair.make(n, evens=list(all_subsets(n)))
    else:
        pair = GeneratingPair.make(n, evens=[SubsetMask.full(n)])
    support = [e for e in all_subsets(n) if e.size > 0]
    return decide_universal_sphere(nu, support, pair)


def singleton_support_check(nu: SphereMeasure) -> bool:
    """Whether all coordinate-direction support sets of the body are points.

    Holds exactly when the symmetrised measure has full order or vanishes.
    """
    averaged = msym(nu)
    return averaged.is_zero() or averaged.order_of() == SubsetMask.full(nu.dim)
