"""Finitely-atomic signed measures on R^n with exact surd weights.

The binary operation throughout is componentwise multiplicative
convolution, which makes these measures a commutative algebra with the
Dirac mass at the all-ones vector as unit.  The module also carries the
coordinate decomposition by zero patterns, multiple reflections and the
symmetrisation operators they induce, the signed atomic basis measures of
the symmetry decomposition, and the alternating projection sum used as a
top-order criterion.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .points import (
    Point,
    hadamard,
    make_point,
    project_point,
    reflect_point,
    zero_pattern,
)
from .scalars import HALF, Surd, SurdLike, as_surd
from .subsets import (
    GeneratingPair,
    SubsetMask,
    all_subsets,
    mask_sort_key,
)

ScalarLike = Union[int, Fraction, Surd]


class Measure:
    """Signed measure with finitely many atoms at rational points."""

    __slots__ = ("dim", "_atoms")

    def __init__(self, dim: int, atoms: Mapping[Point, SurdLike] | Iterable[tuple[Point, SurdLike]] = ()):
        if dim < 1:
            raise ValueError(f"dimension must be >= 1, got {dim}")
        items = atoms.items() if isinstance(atoms, Mapping) else atoms
        acc: dict[Point, Surd] = {}
        for pt, w in items:
            pt = make_point(pt)
            if len(pt) != dim:
                raise ValueError(f"atom {pt} has dimension {len(pt)}, expected {dim}")
            w = as_surd(w)
            prev = acc.get(pt)
            acc[pt] = w if prev is None else prev + w
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_atoms", {p: w for p, w in acc.items() if w})

    def __setattr__(self, name, value):
        raise AttributeError("Measure is immutable")

    @classmethod
    def zero(cls, dim: int) -> "Measure":
        return cls(dim)

    @classmethod
    def dirac(cls, point: Iterable, weight: SurdLike = 1) -> "Measure":
        pt = make_point(point)
        return cls(len(pt), {pt: weight})

    # -- structure ---------------------------------------------------------

    @property
    def atoms(self) -> Mapping[Point, Surd]:
        return MappingProxyType(self._atoms)

    def support(self) -> tuple[Point, ...]:
        return tuple(sorted(self._atoms))

    def weight_at(self, point: Iterable) -> Surd:
        return self._atoms.get(make_point(point), Surd(0))

    def atom_count(self) -> int:
        return len(self._atoms)

    def is_zero(self) -> bool:
        return not self._atoms

    def __bool__(self) -> bool:
        return bool(self._atoms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        return self.dim == other.dim and self._atoms == other._atoms

    def __hash__(self):
        return hash((self.dim, frozenset(self._atoms.items())))

    def __repr__(self) -> str:
        n = len(self._atoms)
        return f"Measure(dim={self.dim}, atoms={n})"

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "Measure") -> "Measure":
        self._check(other)
        acc = dict(self._atoms)
        for pt, w in other._atoms.items():
            prev = acc.get(pt)
            acc[pt] = w if prev is None else prev + w
        return Measure(self.dim, acc)

    def __sub__(self, other: "Measure") -> "Measure":
        return self + (-other)

    def __neg__(self) -> "Measure":
        return Measure(self.dim, {pt: -w for pt, w in self._atoms.items()})

    def __mul__(self, scalar: ScalarLike) -> "Measure":
        c = as_surd(scalar)
        if c is NotImplemented:
            return NotImplemented
        return Measure(self.dim, {pt: w * c for pt, w in self._atoms.items()})

    __rmul__ = __mul__

    def _check(self, other: "Measure") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    # -- mass and Jordan decomposition ----------------------------------------

    def total_mass(self) -> Surd:
        total = Surd(0)
        for w in self._atoms.values():
            total = total + w
        return total

    def jordan(self) -> tuple["Measure", "Measure"]:
        """Split into non-negative parts with disjoint supports."""
        pos: dict[Point, Surd] = {}
        neg: dict[Point, Surd] = {}
        for pt, w in self._atoms.items():
            if w.sign() > 0:
                pos[pt] = w
            else:
                neg[pt] = -w
        return Measure(self.dim, pos), Measure(self.dim, neg)

    def tv_norm(self) -> Surd:
        total = Surd(0)
        for w in self._atoms.values():
            total = total + abs(w)
        return total

    # -- pushforwards and restrictions ---------------------------------------

    def project(self, e: SubsetMask) -> "Measure":
        """Marginal on the coordinate subspace of ``e`` (pushforward)."""
        self._check_mask(e)
        return Measure(self.dim, ((project_point(pt, e), w) for pt, w in self._atoms.items()))

    def reflect(self, f: SubsetMask) -> "Measure":
        self._check_mask(f)
        return Measure(self.dim, ((reflect_point(pt, f), w) for pt, w in self._atoms.items()))

    def restrict_order(self, e: SubsetMask) -> "Measure":
        """Keep the atoms whose zero pattern is exactly ``e``."""
        self._check_mask(e)
        return Measure(
            self.dim,
            {pt: w for pt, w in self._atoms.items() if zero_pattern(pt) == e},
        )

    def restrict_positive(self) -> "Measure":
        """Keep the atoms in the closed positive orthant."""
        return Measure(
            self.dim,
            {pt: w for pt, w in self._atoms.items() if all(c >= 0 for c in pt)},
        )

    def sign_density(self, j: SubsetMask) -> "Measure":
        """Multiply weights by the product of coordinate signs over ``j``.

        Atoms vanishing on some coordinate of ``j`` pick up sign 0 and drop.
        """
        self._check_mask(j)
        acc: dict[Point, Surd] = {}
        for pt, w in self._atoms.items():
            s = 1
            for i in range(self.dim):
                if j.bits >> i & 1:
                    c = pt[i]
                    if c == 0:
                        s = 0
                        break
                    if c < 0:
                        s = -s
            if s == 1:
                acc[pt] = w
            elif s == -1:
                acc[pt] = -w
        return Measure(self.dim, acc)

    def _check_mask(self, mask: SubsetMask) -> None:
        if mask.dim != self.dim:
            raise ValueError(f"dimension mismatch: measure {self.dim} vs mask {mask.dim}")

    # -- coordinate decomposition ----------------------------------------------

    def component_patterns(self) -> frozenset[SubsetMask]:
        """Zero patterns carrying mass (the nonzero coordinate components)."""
        return frozenset(zero_pattern(pt) for pt in self._atoms)

    def order_of(self) -> SubsetMask | None:
        """The unique pattern when exactly one component is nonzero."""
        patterns = self.component_patterns()
        if len(patterns) == 1:
            return next(iter(patterns))
        return None

    def degree(self) -> int:
        """Largest component size; -1 for the zero measure."""
        patterns = self.component_patterns()
        if not patterns:
            return -1
        return max(p.size for p in patterns)

    # -- symmetry tests ----------------------------------------------------------

    def is_even_under(self, f: SubsetMask) -> bool:
        return self.reflect(f) == self

    def is_odd_under(self, f: SubsetMask) -> bool:
        return self.reflect(f) == -self

    # -- serialization -------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "atoms": [
                {"point": [str(c) for c in pt], "weight": w.to_json()}
                for pt, w in sorted(self._atoms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Measure":
        dim = int(data["dim"])
        atoms = [
            (make_point(entry["point"]), Surd.from_json(entry["weight"]))
            for entry in data.get("atoms", [])
        ]
        return cls(dim, atoms)


# -- multiplicative convolution and products --------------------------------------


def mconv(a: Measure, b: Measure) -> Measure:
    """Pushforward of the product measure under the componentwise product."""
    a._check(b)
    acc: dict[Point, Surd] = {}
    for x, wx in a._atoms.items():
        for y, wy in b._atoms.items():
            pt = hadamard(x, y)
            w = wx * wy
            prev = acc.get(pt)
            acc[pt] = w if prev is None else prev + w
    return Measure(a.dim, acc)


def tensor(a: Measure, b: Measure) -> Measure:
    """Product measure on concatenated coordinates."""
    acc: dict[Point, Surd] = {}
    for x, wx in a._atoms.items():
        for y, wy in b._atoms.items():
            acc[x + y] = wx * wy
    return Measure(a.dim + b.dim, acc)


def unit(dim: int) -> Measure:
    """Dirac mass at the all-ones vector, the convolution unit."""
    return Measure.dirac([1] * dim)


# -- distinguished atomic measures -------------------------------------------------


def sigma0_on(e: SubsetMask) -> Measure:
    """Alternating atoms on the {1,2}-grid of the coordinates in ``e``.

    Every proper coordinate projection of the result vanishes, which makes
    it a top-order probe within the subspace of ``e``.  For the empty set
    this degenerates to the Dirac mass at the origin.
    """
    n = e.dim
    idx = [i for i in range(n) if e.bits >> i & 1]
    atoms: dict[Point, Surd] = {}
    for choice in range(1 << len(idx)):
        coords = [Fraction(0)] * n
        total = 0
        for k, i in enumerate(idx):
            v = 1 + (choice >> k & 1)
            coords[i] = Fraction(v)
            total += v
        atoms[tuple(coords)] = Surd(-1 if total % 2 else 1)
    return Measure(n, atoms)


def sigma0(dim: int) -> Measure:
    """Alternating atoms on the full {1,2}-grid."""
    return sigma0_on(SubsetMask.full(dim))


def delta_ej(e: SubsetMask, j: SubsetMask) -> Measure:
    """Signed uniform atoms on the sign vectors of ``e``.

    Each of the ``2**|e|`` sign vectors carries weight ``2**-|e|`` times the
    parity character of ``j``; requires ``j`` inside ``e``.  These measures
    are the basis of the symmetry decomposition of measures.
    """
    if not j.issubset(e):
        raise ValueError(f"index set {j} is not a subset of the support {e}")
    n = e.dim
    idx = [i for i in range(n) if e.bits >> i & 1]
    scale = Fraction(1, 1 << len(idx))
    acc: dict[Point, Surd] = {}
    for choice in range(1 << len(idx)):
        coords = [Fraction(0)] * n
        parity = 0
        for k, i in enumerate(idx):
            if choice >> k & 1:
                coords[i] = Fraction(-1)
                if j.bits >> i & 1:
                    parity ^= 1
            else:
                coords[i] = Fraction(1)
        acc[tuple(coords)] = Surd(-scale if parity else scale)
    return Measure(n, acc)


def delta_j(dim: int, j: SubsetMask) -> Measure:
    """Shorthand for the full-support basis measure."""
    return delta_ej(SubsetMask.full(dim), j)


def sigma_sym(dim: int) -> Measure:
    """Two half-weight atoms at the all-ones vector and its antipode."""
    ones = [Fraction(1)] * dim
    return Measure(dim, {tuple(ones): HALF, tuple(-c for c in ones): HALF})


def sigma_unc(dim: int) -> Measure:
    """Uniform probability on all sign vectors."""
    return delta_ej(SubsetMask.full(dim), SubsetMask.empty(dim))


# -- symmetrisation operators -------------------------------------------------------


def symmetrize(mu, pair: GeneratingPair):
    """Project onto the even/odd symmetry class of the pair.

    Applies one averaging factor per generator: ``(I - T_F)/2`` for odd
    generators, then ``(I + T_F)/2`` for even ones.  Idempotent; the zero
    operator exactly when the pair is not proper.  Works for both point
    measures and sphere measures.
    """
    if pair.dim != mu.dim:
        raise ValueError(f"dimension mismatch: measure {mu.dim} vs pair {pair.dim}")
    out = mu
    for f in sorted(pair.odds, key=mask_sort_key):
        out = (out - out.reflect(f)) * HALF
    for f in sorted(pair.evens, key=mask_sort_key):
        out = (out + out.reflect(f)) * HALF
    return out


def group_average(mu, group: Iterable[SubsetMask]):
    """Average of the reflections over a subgroup."""
    members = sorted(group, key=mask_sort_key)
    if not members:
        raise ValueError("expected a nonempty reflection group")
    out = mu.reflect(members[0])
    for f in members[1:]:
        out = out + mu.reflect(f)
    return out * Fraction(1, len(members))


def msym(mu):
    """Average with the origin reflection."""
    full = SubsetMask.full(mu.dim)
    return (mu + mu.reflect(full)) * HALF


def munc(mu):
    """Average over all multiple reflections."""
    return group_average(mu, all_subsets(mu.dim))


def unc_forward(mu: Measure) -> Measure:
    """Spread a measure on the closed positive orthant over all orthants."""
    if any(any(c < 0 for c in pt) for pt in mu._atoms):
        raise ValueError("measure has an atom outside the positive orthant")
    return munc(mu)


def unc_inverse(mu: Measure) -> Measure:
    """Collapse an unconditional measure back to the positive orthant.

    Each component of zero pattern E regains the factor ``2**|E|`` that the
    orthant average distributed over its reflected copies.
    """
    for i in range(1, mu.dim + 1):
        if not mu.is_even_under(SubsetMask.single(mu.dim, i)):
            raise ValueError("measure is not unconditional")
    acc: dict[Point, Surd] = {}
    for pt, w in mu._atoms.items():
        if all(c >= 0 for c in pt):
            acc[pt] = w * (1 << zero_pattern(pt).size)
    return Measure(mu.dim, acc)


def phat(mu):
    """Alternating sum of all coordinate projections.

    Vanishes exactly when the top-order component vanishes.  On sphere
    measures the projections renormalise radially, giving the spherical
    variant of the same criterion.
    """
    out = None
    for e in all_subsets(mu.dim):
        term = mu.project(e)
        if e.size % 2:
            term = -term
        out = term if out is None else out + term
    return out
