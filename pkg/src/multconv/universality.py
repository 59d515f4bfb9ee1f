"""Exact universality deciders with verified witnesses.

A measure is universal on a class when convolving with it annihilates no
nonzero member of the class.  For classes cut out by a support family of
zero patterns and a reflection symmetry pair, universality is equivalent
to a finite list of non-vanishing conditions indexed by pairs (E, J):
the parity basis measure of J must not annihilate the top-order part of
the projection onto E.  Deciders below evaluate those lists exactly and,
on a negative decision, construct a counterexample measure that is
verified at construction: nonzero, inside the class, annihilated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional, Union

from .measures import (
    Measure,
    delta_ej,
    mconv,
    msym,
    munc,
    sigma0_on,
)
from .subsets import (
    GeneratingPair,
    SubsetMask,
    all_subsets,
    gamma,
    index_set,
    mask_sort_key,
    subsets_of,
)
from .sphere import SphereMeasure, radial_project, sconv

MAX_DECIDER_DIM = 8

Witness = Union[Measure, SphereMeasure]


@dataclass(frozen=True, slots=True)
class ConditionRecord:
    support: SubsetMask
    index: SubsetMask
    satisfied: bool


@dataclass(slots=True)
class UniversalityReport:
    universal: bool
    conditions: list[ConditionRecord]
    witness: Optional[Witness]
    skipped_non_proper: list[SubsetMask] = field(default_factory=list)

    def __post_init__(self):
        if self.universal != all(c.satisfied for c in self.conditions):
            raise ValueError("decision inconsistent with the condition list")
        if not self.universal and self.witness is None:
            raise ValueError("negative decision without a witness")

    def failing(self) -> list[ConditionRecord]:
        return [c for c in self.conditions if not c.satisfied]

    def to_json(self) -> dict:
        return {
            "universal": self.universal,
            "conditions": [
                {"E": c.support.to_json(), "J": c.index.to_json(), "ok": c.satisfied}
                for c in self.conditions
            ],
            "witness": None if self.witness is None else self.witness.to_json(),
            "skipped": [e.to_json() for e in self.skipped_non_proper],
        }


def _check_dim(dim: int) -> None:
    if dim > MAX_DECIDER_DIM:
        raise ValueError(
            f"dimension {dim} exceeds the enumeration bound {MAX_DECIDER_DIM}"
        )


def _ordered_support(support) -> list[SubsetMask]:
    return sorted(set(support), key=lambda m: (-m.size, mask_sort_key(m)))


def _in_class(witness, pair: GeneratingPair, e: SubsetMask) -> bool:
    if witness.component_patterns() != frozenset({e}):
        return False
    if not all(witness.is_even_under(f) for f in pair.evens):
        return False
    return all(witness.is_odd_under(f) for f in pair.odds)


def _rn_witness(nu: Measure, pair: GeneratingPair, e: SubsetMask, j: SubsetMask) -> Measure:
    """Counterexample for a failing (E, J) condition on point measures.

    The parity basis measure alone annihilates when the lower-order parts
    of the projection cooperate; otherwise convolving it with the
    alternating top-order probe on E removes their contribution.
    """
    candidate = delta_ej(e, j)
    if mconv(nu, candidate):
        candidate = mconv(candidate, sigma0_on(e))
    if not candidate:
        raise RuntimeError("witness construction produced the zero measure")
    if not _in_class(candidate, pair, e):
        raise RuntimeError("witness construction left the symmetry class")
    if mconv(nu, candidate):
        raise RuntimeError("witness construction failed to annihilate")
    return candidate


def _sphere_witness(
    nu: SphereMeasure, pair: GeneratingPair, e: SubsetMask, j: SubsetMask
) -> SphereMeasure:
    candidate = radial_project(delta_ej(e, j))
    if sconv(nu, candidate):
        candidate = radial_project(mconv(delta_ej(e, j), sigma0_on(e)))
    if not candidate:
        raise RuntimeError("witness construction produced the zero measure")
    if not _in_class(candidate, pair, e):
        raise RuntimeError("witness construction left the symmetry class")
    if sconv(nu, candidate):
        raise RuntimeError("witness construction failed to annihilate")
    return candidate


def decide_universal_rn(nu: Measure, support, pair: GeneratingPair) -> UniversalityReport:
    """Decide universality of ``nu`` on the class over ``support`` with ``pair``.

    Support sets whose restricted pair is not proper contribute nothing to
    the class and are recorded as skipped.  Conditions are listed with the
    support sets by descending size, index sets lexicographically.
    """
    _check_dim(nu.dim)
    if pair.dim != nu.dim:
        raise ValueError(f"dimension mismatch: measure {nu.dim} vs pair {pair.dim}")
    conditions: list[ConditionRecord] = []
    skipped: list[SubsetMask] = []
    first_fail: Optional[tuple[SubsetMask, SubsetMask]] = None
    for e in _ordered_support(support):
        if e.dim != nu.dim:
            raise ValueError(f"support set {e} has dimension {e.dim}, expected {nu.dim}")
        indices = index_set(e, pair)
        if not indices:
            skipped.append(e)
            continue
        base = nu.project(e).restrict_order(e)
        for j in sorted(indices, key=mask_sort_key):
            ok = bool(mconv(delta_ej(e, j), base))
            conditions.append(ConditionRecord(e, j, ok))
            if not ok and first_fail is None:
                first_fail = (e, j)
    witness = None if first_fail is None else _rn_witness(nu, pair, *first_fail)
    return UniversalityReport(first_fail is None, conditions, witness, skipped)


def decide_universal_sphere(
    nu: SphereMeasure, support, pair: GeneratingPair
) -> UniversalityReport:
    """Spherical counterpart of :func:`decide_universal_rn`.

    The support family must avoid the empty set; the sphere misses the
    origin cell entirely.
    """
    _check_dim(nu.dim)
    if pair.dim != nu.dim:
        raise ValueError(f"dimension mismatch: measure {nu.dim} vs pair {pair.dim}")
    support = list(support)
    for e in support:
        if e.size == 0:
            raise ValueError("the empty pattern cannot appear in a spherical support family")
    conditions: list[ConditionRecord] = []
    skipped: list[SubsetMask] = []
    first_fail: Optional[tuple[SubsetMask, SubsetMask]] = None
    for e in _ordered_support(support):
        if e.dim != nu.dim:
            raise ValueError(f"support set {e} has dimension {e.dim}, expected {nu.dim}")
        indices = index_set(e, pair)
        if not indices:
            skipped.append(e)
            continue
        base = nu.project(e).restrict_order(e)
        for j in sorted(indices, key=mask_sort_key):
            ok = bool(sconv(delta_ej(e, j), base))
            conditions.append(ConditionRecord(e, j, ok))
            if not ok and first_fail is None:
                first_fail = (e, j)
    witness = None if first_fail is None else _sphere_witness(nu, pair, *first_fail)
    return UniversalityReport(first_fail is None, conditions, witness, skipped)


SymmetryClass = Literal["unconditional", "symmetric", "antisymmetric", "none"]
Scope = Literal["full", "top-order", "positive-orthant"]

_CLASS_PAIRS = {
    "unconditional": lambda n: GeneratingPair.make(n, evens=list(all_subsets(n))),
    "symmetric": lambda n: GeneratingPair.make(n, evens=[SubsetMask.full(n)]),
    "antisymmetric": lambda n: GeneratingPair.make(n, odds=[SubsetMask.full(n)]),
    "none": lambda n: GeneratingPair.make(n),
}


def class_pair(name: SymmetryClass, dim: int) -> GeneratingPair:
    """The generating pair cutting out a named symmetry class."""
    try:
        factory = _CLASS_PAIRS[name]
    except KeyError:
        raise ValueError(f"unknown symmetry class {name!r}") from None
    return factory(dim)


def _parity_indices(name: SymmetryClass, e: SubsetMask) -> list[SubsetMask]:
    if name == "unconditional":
        return [SubsetMask.empty(e.dim)]
    out = []
    for j in subsets_of(e):
        if name == "symmetric" and j.size % 2:
            continue
        if name == "antisymmetric" and j.size % 2 == 0:
            continue
        out.append(j)
    return sorted(out, key=mask_sort_key)


def decide_special(
    nu: Witness, klass: SymmetryClass, scope: Scope = "full", sphere: bool = False
) -> UniversalityReport:
    """Decide via the closed-form condition of the matching symmetry class.

    ``scope="full"`` decides on the whole space (sphere: all nonempty
    patterns).  ``scope="top-order"`` uses the simplified condition list
    available when ``nu`` itself has full order, still deciding on the
    whole space; other inputs are rejected.  ``scope="positive-orthant"``
    (point measures, unconditional class only) reports the sufficient
    condition transferred from the unconditional class.

    The decision always coincides with the general decider run on the
    corresponding pair; the test suite enforces that equality.
    """
    n = nu.dim
    _check_dim(n)
    if sphere != isinstance(nu, SphereMeasure):
        kind = type(nu).__name__
        raise ValueError(f"sphere={sphere} inconsistent with input of type {kind}")
    pair = class_pair(klass, n)
    full = SubsetMask.full(n)

    if scope == "positive-orthant":
        if sphere:
            raise ValueError("positive-orthant scope applies to point measures only")
        if klass != "unconditional":
            raise ValueError("positive-orthant scope requires the unconditional class")
        return decide_special(nu, "unconditional", "full", sphere=False)

    if scope == "top-order":
        if nu.order_of() != full:
            raise ValueError("top-order scope requires a measure of full order")
        conditions: list[ConditionRecord] = []
        first_fail = None
        for j in _parity_indices(klass, full):
            if sphere and j.size == 0:
                # the empty index collapses to one condition per axis
                for i in range(1, n + 1):
                    axis = SubsetMask.single(n, i)
                    ok = bool(msym(nu.project(axis)))
                    conditions.append(ConditionRecord(axis, SubsetMask.empty(n), ok))
                    if not ok and first_fail is None:
                        first_fail = (axis, SubsetMask.empty(n))
                continue
            if sphere:
                ok = bool(sconv(delta_ej(j, j), nu))
            else:
                ok = bool(mconv(delta_ej(j, j), nu))
            conditions.append(ConditionRecord(j, j, ok))
            if not ok and first_fail is None:
                first_fail = (j, j)
        if first_fail is None:
            return UniversalityReport(True, conditions, None)
        e, j = first_fail
        witness = _sphere_witness(nu, pair, e, j) if sphere else _rn_witness(nu, pair, e, j)
        return UniversalityReport(False, conditions, witness)

    if scope != "full":
        raise ValueError(f"unknown scope {scope!r}")

    if klass == "unconditional":
        averaged = munc(nu)
        conditions = []
        first_fail = None
        for e in _ordered_support(all_subsets(n)):
            if sphere and e.size == 0:
                continue
            ok = bool(averaged.project(e).restrict_order(e))
            conditions.append(ConditionRecord(e, SubsetMask.empty(n), ok))
            if not ok and first_fail is None:
                first_fail = (e, SubsetMask.empty(n))
        if first_fail is None:
            return UniversalityReport(True, conditions, None)
        e, j = first_fail
        witness = _sphere_witness(nu, pair, e, j) if sphere else _rn_witness(nu, pair, e, j)
        return UniversalityReport(False, conditions, witness)

    conditions = []
    first_fail = None
    for e in _ordered_support(all_subsets(n)):
        if sphere and e.size == 0:
            continue
        base = nu.project(e).restrict_order(e)
        for j in _parity_indices(klass, e):
            if sphere:
                ok = bool(sconv(delta_ej(e, j), base))
            else:
                ok = bool(mconv(delta_ej(e, j), base))
            conditions.append(ConditionRecord(e, j, ok))
            if not ok and first_fail is None:
                first_fail = (e, j)
    if first_fail is None:
        return UniversalityReport(True, conditions, None)
    e, j = first_fail
    witness = _sphere_witness(nu, pair, e, j) if sphere else _rn_witness(nu, pair, e, j)
    return UniversalityReport(False, conditions, witness)


def symmetry_obstruction(nu: Witness, pair: GeneratingPair) -> list[tuple[SubsetMask, str]]:
    """Reflections fixing ``nu`` (up to sign) that the pair does not allow.

    A measure that is even or odd under a reflection outside the generated
    symmetry pair cannot be universal on that pair's class, so a nonempty
    result is a fast negative pre-filter.
    """
    if pair.dim != nu.dim:
        raise ValueError(f"dimension mismatch: measure {nu.dim} vs pair {pair.dim}")
    sym = gamma(pair)
    if not sym.proper:
        raise ValueError("obstructions are defined against proper pairs only")
    out: list[tuple[SubsetMask, str]] = []
    for e in all_subsets(nu.dim):
        if nu.is_even_under(e) and e not in sym.evens:
            out.append((e, "even"))
        if nu.is_odd_under(e) and e not in sym.odds:
            out.append((e, "odd"))
    return out
