"""Subsets of {1,..,n} as bit masks.

The family of subsets forms a Boolean group under symmetric difference.
This module carries that group, generating/symmetry pairs of reflection
sets with their closure map, the parity index families that drive the
universality deciders, and the dimension-raising helpers used by lifting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_DIM = 63


@dataclass(frozen=True, slots=True)
class SubsetMask:
    """A subset of {1,..,dim} stored in the low ``dim`` bits."""

    bits: int
    dim: int

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {self.dim}")
        if not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"bits {self.bits:#x} outside dimension {self.dim}")

    @classmethod
    def empty(cls, dim: int) -> "SubsetMask":
        return cls(0, dim)

    @classmethod
    def full(cls, dim: int) -> "SubsetMask":
        return cls((1 << dim) - 1, dim)

    @classmethod
    def single(cls, dim: int, index: int) -> "SubsetMask":
        if not 1 <= index <= dim:
            raise ValueError(f"index {index} outside 1..{dim}")
        return cls(1 << (index - 1), dim)

    @classmethod
    def from_indices(cls, dim: int, indices: Iterable[int]) -> "SubsetMask":
        bits = 0
        for i in indices:
            if not 1 <= int(i) <= dim:
                raise ValueError(f"index {i} outside 1..{dim}")
            bits |= 1 << (int(i) - 1)
        return cls(bits, dim)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.dim) if self.bits >> i & 1)

    def contains(self, index: int) -> bool:
        return bool(self.bits >> (index - 1) & 1)

    def issubset(self, other: "SubsetMask") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> "SubsetMask":
        return SubsetMask(~self.bits & (1 << self.dim) - 1, self.dim)

    def _check(self, other: "SubsetMask") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __xor__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.bits ^ other.bits, self.dim)

    def __and__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.bits & other.bits, self.dim)

    def __or__(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.bits | other.bits, self.dim)

    def to_json(self) -> list[int]:
        return list(self.indices())

    @classmethod
    def from_json(cls, dim: int, data: Iterable[int]) -> "SubsetMask":
        return cls.from_indices(dim, data)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.indices())) + "}"


def symdiff(a: SubsetMask, b: SubsetMask) -> SubsetMask:
    """Symmetric difference (the Boolean group operation)."""
    return a ^ b


def all_subsets(dim: int) -> Iterator[SubsetMask]:
    for bits in range(1 << dim):
        yield SubsetMask(bits, dim)


def subsets_of(mask: SubsetMask) -> Iterator[SubsetMask]:
    """All subsets of ``mask`` in increasing bit order."""
    sub = 0
    while True:
        yield SubsetMask(sub, mask.dim)
        if sub == mask.bits:
            return
        sub = (sub - mask.bits) & mask.bits


def mask_sort_key(mask: SubsetMask):
    return mask.indices()


def _coerce_family(dim: int, members: Iterable[SubsetMask]) -> frozenset[SubsetMask]:
    fam = frozenset(members)
    for m in fam:
        if m.dim != dim:
            raise ValueError(f"member {m} has dimension {m.dim}, expected {dim}")
    return fam


@dataclass(frozen=True, slots=True)
class GeneratingPair:
    """Prescribed even and odd reflection sets (not necessarily closed)."""

    evens: frozenset[SubsetMask]
    odds: frozenset[SubsetMask]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "evens", _coerce_family(self.dim, self.evens))
        object.__setattr__(self, "odds", _coerce_family(self.dim, self.odds))

    @classmethod
    def make(cls, dim: int, evens: Iterable[SubsetMask] = (), odds: Iterable[SubsetMask] = ()) -> "GeneratingPair":
        return cls(frozenset(evens), frozenset(odds), dim)

    def to_json(self) -> dict:
        return {
            "evens": [m.to_json() for m in sorted(self.evens, key=mask_sort_key)],
            "odds": [m.to_json() for m in sorted(self.odds, key=mask_sort_key)],
            "dim": self.dim,
        }

    @classmethod
    def from_json(cls, data: dict) -> "GeneratingPair":
        dim = int(data["dim"])
        evens = [SubsetMask.from_json(dim, e) for e in data.get("evens", [])]
        odds = [SubsetMask.from_json(dim, o) for o in data.get("odds", [])]
        return cls.make(dim, evens, odds)


@dataclass(frozen=True, slots=True)
class SymmetryPair:
    """Even and odd parts of the reflection group generated by a pair.

    ``evens`` is a subgroup containing the empty set; the odd part is a
    coset-like family; ``proper`` records whether the two parts are
    disjoint (exactly the pairs admitting nonzero invariant measures).
    """

    evens: frozenset[SubsetMask]
    odds: frozenset[SubsetMask]
    proper: bool
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "evens", _coerce_family(self.dim, self.evens))
        object.__setattr__(self, "odds", _coerce_family(self.dim, self.odds))
        empty = SubsetMask.empty(self.dim)
        if empty not in self.evens:
            raise ValueError("even part must contain the empty set")
        for a in self.evens:
            for b in self.evens:
                if a ^ b not in self.evens:
                    raise ValueError("even part is not a subgroup")
        for a in self.odds:
            for b in self.odds:
                if a ^ b not in self.evens:
                    raise ValueError("odd part not closed into the even part")
        for a in self.evens:
            for b in self.odds:
                if a ^ b not in self.odds:
                    raise ValueError("even*odd does not land in the odd part")
        if self.proper != self.evens.isdisjoint(self.odds):
            raise ValueError("proper flag inconsistent with the parts")

    @property
    def group(self) -> frozenset[SubsetMask]:
        return self.evens | self.odds

    def as_generating_pair(self) -> GeneratingPair:
        return GeneratingPair(self.evens, self.odds, self.dim)


def gamma(pair: GeneratingPair) -> SymmetryPair:
    """Close a generating pair into the symmetry pair it generates.

    Breadth-first closure over (subset, parity) states, where the parity
    tracks how many odd generators occur in a product representation.  An
    element reachable with both parities makes the pair non-proper.
    """
    n = pair.dim
    gens = [(f.bits, 0) for f in pair.evens] + [(f.bits, 1) for f in pair.odds]
    if not gens:
        empty = SubsetMask.empty(n)
        return SymmetryPair(frozenset({empty}), frozenset(), True, n)
    seen: set[tuple[int, int]] = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for bits, par in frontier:
            for gb, gp in gens:
                state = (bits ^ gb, par ^ gp)
                if state not in seen:
                    seen.add(state)
                    nxt.append(state)
        frontier = nxt
    evens = frozenset(SubsetMask(b, n) for b, p in seen if p == 0)
    odds = frozenset(SubsetMask(b, n) for b, p in seen if p == 1)
    return SymmetryPair(evens, odds, (0, 1) not in seen, n)


def restrict_pair(pair: GeneratingPair, e: SubsetMask) -> GeneratingPair:
    """Intersect every member with ``e``."""
    return GeneratingPair(
        frozenset(f & e for f in pair.evens),
        frozenset(f & e for f in pair.odds),
        pair.dim,
    )


def index_set(e: SubsetMask, pair: GeneratingPair) -> frozenset[SubsetMask]:
    """Subsets J of ``e`` meeting every even member evenly and every odd member oddly.

    Empty exactly when the pair restricted to ``e`` is not proper.
    """
    if e.dim != pair.dim:
        raise ValueError(f"dimension mismatch: {e.dim} vs {pair.dim}")
    out = []
    for j in subsets_of(e):
        if all((j.bits & f.bits).bit_count() % 2 == 0 for f in pair.evens) and all(
            (j.bits & f.bits).bit_count() % 2 == 1 for f in pair.odds
        ):
            out.append(j)
    return frozenset(out)


def is_group(masks: Iterable[SubsetMask]) -> bool:
    fam = set(masks)
    if not fam:
        return False
    dims = {m.dim for m in fam}
    if len(dims) != 1:
        return False
    if SubsetMask.empty(dims.pop()) not in fam:
        return False
    return all(a ^ b in fam for a in fam for b in fam)


def j_dual(group: Iterable[SubsetMask]) -> frozenset[SubsetMask]:
    """Subsets meeting every group member evenly; an involution on subgroups."""
    fam = frozenset(group)
    if not is_group(fam):
        raise ValueError("input is not a subgroup under symmetric difference")
    dim = next(iter(fam)).dim
    full = SubsetMask.full(dim)
    return index_set(full, GeneratingPair(fam, frozenset(), dim))


# -- dimension-raising helpers (new coordinate in the lowest bit) -----------


def lift_mask(mask: SubsetMask) -> SubsetMask:
    """The same subset viewed inside dimension ``dim + 1``."""
    return SubsetMask(mask.bits << 1, mask.dim + 1)


def lift_set(mask: SubsetMask) -> SubsetMask:
    """Adjoin the new coordinate: E maps to {0} union E."""
    return SubsetMask(mask.bits << 1 | 1, mask.dim + 1)


def lift_pair(pair: GeneratingPair) -> GeneratingPair:
    """Lifted generating pair: evens gain the full lifted index set."""
    evens = {lift_mask(f) for f in pair.evens}
    evens.add(SubsetMask.full(pair.dim + 1))
    odds = {lift_mask(f) for f in pair.odds}
    return GeneratingPair(frozenset(evens), frozenset(odds), pair.dim + 1)


def lift_family(family: Iterable[SubsetMask], e: SubsetMask) -> frozenset[SubsetMask]:
    """Spread a family inside P(E) over P({0} union E): F and F delta E_L."""
    el = lift_set(e)
    out = set()
    for f in family:
        if not f.issubset(e):
            raise ValueError(f"family member {f} is not a subset of {e}")
        lf = lift_mask(f)
        out.add(lf)
        out.add(lf ^ el)
    return frozenset(out)
