"""Exact projective points, linear subspaces, and coordinate projections.

Everything is an immutable value over the rationals. Points compare up to
scale, subspaces store a reduced-row-echelon basis, so structural equality
coincides with geometric equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from . import linalg
from .errors import (
    DimensionMismatch,
    InvalidArgument,
    InvalidIndexSet,
    InvalidPoint,
    ProjectionUndefined,
)

RationalLike = Union[Fraction, int, str]
IndexSet = tuple[int, ...]


def as_index_set(members: Iterable[int], n: int) -> IndexSet:
    """Validate an index set: nonempty, strictly increasing, within {0..n}."""
    subset = tuple(members)
    if not subset:
        raise InvalidIndexSet("index set must be nonempty")
    if any(b <= a for a, b in zip(subset, subset[1:])):
        raise InvalidIndexSet(f"index set {subset} is not strictly increasing")
    if subset[0] < 0 or subset[-1] > n:
        raise InvalidIndexSet(f"index set {subset} out of range 0..{n}")
    return subset


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """Point of projective space, stored as a nonzero homogeneous vector."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coords = self.coords
        if not all(type(c) is Fraction for c in coords):
            coords = tuple(Fraction(c) for c in coords)
        else:
            coords = tuple(coords)
        if not coords or not any(coords):
            raise InvalidPoint("homogeneous coordinates must not all be zero")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    @property
    def on_torus(self) -> bool:
        """True when every homogeneous coordinate is nonzero."""
        return all(self.coords)

    def normalize(self) -> "ProjectivePoint":
        """Canonical representative: first nonzero coordinate scaled to 1."""
        head = next(c for c in self.coords if c)
        if head == 1:
            return self
        return ProjectivePoint(tuple(c / head for c in self.coords))

    def scale(self, factor: RationalLike) -> "ProjectivePoint":
        factor = Fraction(factor)
        if factor == 0:
            raise InvalidArgument("scale factor must be nonzero")
        return ProjectivePoint(tuple(c * factor for c in self.coords))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        if len(self.coords) != len(other.coords):
            return False
        return self.normalize().coords == other.normalize().coords

    def __hash__(self) -> int:
        return hash(self.normalize().coords)

    def __repr__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def point(*coords: RationalLike) -> ProjectivePoint:
    """Shorthand constructor: point(2, 3, \"1/2\")."""
    return ProjectivePoint(tuple(Fraction(c) for c in coords))


@dataclass(frozen=True)
class LinearSubspace:
    """Projective linear subspace of P^ambient_dim, basis kept in RREF."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        width = self.ambient_dim + 1
        for row in self.basis:
            if len(row) != width:
                raise DimensionMismatch(
                    f"basis vector of length {len(row)} in P^{self.ambient_dim}"
                )
        if linalg.is_rref(self.basis, width):
            reduced = tuple(
                tuple(v if type(v) is Fraction else Fraction(v) for v in row)
                for row in self.basis
            )
        else:
            reduced = tuple(linalg.rref(self.basis, width))
        if not reduced:
            raise InvalidArgument("a linear subspace needs a nonzero generator")
        object.__setattr__(self, "basis", reduced)

    @property
    def proj_dim(self) -> int:
        return len(self.basis) - 1

    def annihilator(self) -> tuple[tuple[Fraction, ...], ...]:
        """Covectors vanishing on the subspace (kernel of the basis matrix)."""
        cached = self.__dict__.get("_annihilator")
        if cached is None:
            cached = tuple(linalg.kernel_of_rref(self.basis, self.ambient_dim + 1))
            self.__dict__["_annihilator"] = cached
        return cached

    def contains(self, p: ProjectivePoint) -> bool:
        if p.dim != self.ambient_dim:
            raise DimensionMismatch(
                f"point of P^{p.dim} against subspace of P^{self.ambient_dim}"
            )
        return not any(linalg.residue(p.coords, self.basis))

    def __repr__(self) -> str:
        rows = ", ".join("(" + ":".join(str(c) for c in row) + ")" for row in self.basis)
        return f"LinearSubspace(P^{self.ambient_dim}, dim={self.proj_dim}, [{rows}])"


def normalize(p: ProjectivePoint) -> ProjectivePoint:
    return p.normalize()


def coordinate_subspace(members: Iterable[int], n: int) -> LinearSubspace:
    """Subspace where every coordinate outside the index set vanishes."""
    return _coordinate_subspace(as_index_set(members, n), n)


@lru_cache(maxsize=None)
def _coordinate_subspace(subset: IndexSet, n: int) -> LinearSubspace:
    rows = []
    for i in subset:
        row = [Fraction(0)] * (n + 1)
        row[i] = Fraction(1)
        rows.append(tuple(row))
    return LinearSubspace(n, tuple(rows))


def opposite_face(members: Iterable[int], n: int) -> IndexSet:
    """Complementary index set: the face spanned by the remaining vertices."""
    subset = as_index_set(members, n)
    if len(subset) == n + 1:
        raise InvalidIndexSet("a full index set has no opposite face")
    inside = set(subset)
    return tuple(i for i in range(n + 1) if i not in inside)


def span(items: Sequence[Union[ProjectivePoint, LinearSubspace]]) -> LinearSubspace:
    """Smallest linear subspace containing every given point and subspace."""
    if not items:
        raise InvalidArgument("span of an empty collection is undefined")
    rows: list[tuple[Fraction, ...]] = []
    ambient: int | None = None
    for item in items:
        if isinstance(item, ProjectivePoint):
            dim, new_rows = item.dim, [item.coords]
        elif isinstance(item, LinearSubspace):
            dim, new_rows = item.ambient_dim, list(item.basis)
        else:
            raise InvalidArgument(f"cannot span {type(item).__name__} objects")
        if ambient is None:
            ambient = dim
        elif dim != ambient:
            raise DimensionMismatch(f"mixed ambient spaces P^{ambient} and P^{dim}")
        rows.extend(new_rows)
    assert ambient is not None
    return LinearSubspace(ambient, tuple(rows))


def intersect(subspaces: Sequence[LinearSubspace]) -> LinearSubspace | None:
    """Exact intersection; None when the subspaces only share the zero vector."""
    if not subspaces:
        raise InvalidArgument("intersection of an empty collection is undefined")
    ambient = subspaces[0].ambient_dim
    covectors: list[tuple[Fraction, ...]] = []
    for sub in subspaces:
        if sub.ambient_dim != ambient:
            raise DimensionMismatch(
                f"mixed ambient spaces P^{ambient} and P^{sub.ambient_dim}"
            )
        covectors.extend(sub.annihilator())
    if not covectors:
        return subspaces[0]
    basis = linalg.kernel(covectors, ambient + 1)
    if not basis:
        return None
    return LinearSubspace(ambient, tuple(basis))


def project(p: ProjectivePoint, members: Iterable[int]) -> ProjectivePoint:
    """Keep the coordinates indexed by the set; the coordinate projection."""
    subset = as_index_set(members, p.dim)
    coords = tuple(p.coords[i] for i in subset)
    if not any(coords):
        raise ProjectionUndefined(
            f"{p!r} lies in the center of the projection onto {subset}"
        )
    return ProjectivePoint(coords)


def embed(p: ProjectivePoint, members: Iterable[int], n: int) -> ProjectivePoint:
    """Place a point of P^k into P^n on the coordinate subspace of the set."""
    subset = as_index_set(members, n)
    if len(subset) != len(p.coords):
        raise DimensionMismatch(
            f"point of P^{p.dim} cannot fill an index set of size {len(subset)}"
        )
    coords = [Fraction(0)] * (n + 1)
    for position, i in enumerate(subset):
        coords[i] = p.coords[position]
    return ProjectivePoint(tuple(coords))
