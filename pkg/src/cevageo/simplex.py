"""Concurrency of cevian spans of an n-simplex.

One point is fixed in each k-dimensional coordinate face of P^n. Arranging
their coordinates as a partially specified matrix (one row per face, entry
at column j known only when j indexes the face), the spans through the
opposite faces are concurrent exactly when the matrix completes to rank one.
On instances with no zero coordinate this is decided by triple ratio
products for k = 1 and by the fully specified 2x2 minors for k >= 2; an
exact geometric oracle (kernel of stacked annihilators) arbitrates both.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb, gcd
from typing import Iterable, Mapping, Union

from .errors import (
    InvalidArgument,
    NotRankOneCompletable,
    OffTorus,
    WrongArity,
)
from .projective import (
    IndexSet,
    LinearSubspace,
    ProjectivePoint,
    coordinate_subspace,
    embed,
    intersect,
    opposite_face,
    project,
    span,
)


def face_subsets(n: int, k: int) -> tuple[IndexSet, ...]:
    """All (k+1)-element index sets of {0..n}, in lexicographic order."""
    return tuple(combinations(range(n + 1), k + 1))


def _validate_shape(n: int, k: int) -> None:
    if n < 2:
        raise InvalidArgument(f"need n >= 2, got n={n}")
    if not 1 <= k <= n - 1:
        raise InvalidArgument(f"need 1 <= k <= n-1, got k={k} for n={n}")


@dataclass(frozen=True)
class FaceInstance:
    """A choice of one point in each k-dimensional coordinate face of P^n.

    The point for face I is given in the coordinates of that face, ordered
    by increasing index. Zero coordinates are allowed here; the algebraic
    criteria reject them, the geometric oracle does not.
    """

    n: int
    k: int
    points: Mapping[IndexSet, ProjectivePoint]

    def __post_init__(self) -> None:
        _validate_shape(self.n, self.k)
        canonical = {}
        for subset, p in self.points.items():
            key = tuple(subset)
            if p.dim != self.k:
                raise InvalidArgument(
                    f"face {key} needs a point of P^{self.k}, got P^{p.dim}"
                )
            canonical[key] = p
        expected = face_subsets(self.n, self.k)
        if set(canonical) != set(expected):
            raise InvalidArgument(
                f"need exactly one point per (k+1)-subset, {len(expected)} in total"
            )
        object.__setattr__(self, "points", {s: canonical[s] for s in expected})

    @property
    def subsets(self) -> tuple[IndexSet, ...]:
        return tuple(self.points)

    @property
    def on_torus(self) -> bool:
        return all(p.on_torus for p in self.points.values())

    def point(self, subset: Iterable[int]) -> ProjectivePoint:
        return self.points[tuple(subset)]


class InstanceKind(Enum):
    POSITIVE = "positive"
    PERTURBED = "perturbed"


class Criterion(Enum):
    TRIPLE_RATIOS = "triple_ratios"
    MINORS = "minors"


@dataclass(frozen=True)
class PartialMatrix:
    """Rows indexed by faces (lexicographic), entry (I, j) known iff j in I."""

    n: int
    k: int
    subsets: tuple[IndexSet, ...]
    entries: tuple[tuple[Fraction | None, ...], ...]

    def entry(self, subset: Iterable[int], j: int) -> Fraction | None:
        return self.entries[self.subsets.index(tuple(subset))][j]


@dataclass(frozen=True)
class Minor:
    """A fully specified 2x2 minor: rows from faces I, J and columns i < j."""

    row_i: IndexSet
    row_j: IndexSet
    col_i: int
    col_j: int
    value: Fraction


@dataclass(frozen=True)
class TripleViolation:
    """Indices a < b < c whose ratio product differs from 1."""

    a: int
    b: int
    c: int
    product: Fraction


@dataclass(frozen=True)
class ConcurrencyReport:
    verdict: bool
    criterion: Criterion
    witnesses: tuple[Union[Minor, TripleViolation], ...]
    common_point: ProjectivePoint | None
    oracle_agrees: bool | None = None


def build_matrix(inst: FaceInstance) -> PartialMatrix:
    """Lay the face points out as the partially specified matrix."""
    rows = []
    for subset in inst.subsets:
        row: list[Fraction | None] = [None] * (inst.n + 1)
        for position, j in enumerate(subset):
            row[j] = inst.points[subset].coords[position]
        rows.append(tuple(row))
    return PartialMatrix(n=inst.n, k=inst.k, subsets=inst.subsets, entries=tuple(rows))


def matrix_to_instance(m: PartialMatrix) -> FaceInstance:
    points = {}
    for subset, row in zip(m.subsets, m.entries):
        points[subset] = ProjectivePoint(tuple(row[j] for j in subset))
    return FaceInstance(n=m.n, k=m.k, points=points)


def specified_minors(m: PartialMatrix) -> list[Minor]:
    """Every 2x2 minor whose four entries are all specified, with its value."""
    minors = []
    for (subset_i, row_i), (subset_j, row_j) in combinations(zip(m.subsets, m.entries), 2):
        shared = [c for c in subset_i if c in subset_j]
        for col_i, col_j in combinations(shared, 2):
            value = row_i[col_i] * row_j[col_j] - row_i[col_j] * row_j[col_i]
            minors.append(Minor(subset_i, subset_j, col_i, col_j, value))
    return minors


def _violated_minors(m: PartialMatrix) -> tuple[Minor, ...]:
    """Nonzero fully specified minors.

    The scan runs on integer-cleared rows (a positive per-row rescale, so
    zero-ness is unchanged); exact values are recomputed only for the
    violations actually reported.
    """
    int_rows = []
    for subset, row in zip(m.subsets, m.entries):
        lcm = 1
        for j in subset:
            den = row[j].denominator
            lcm = lcm // gcd(lcm, den) * den
        int_rows.append({j: row[j].numerator * (lcm // row[j].denominator) for j in subset})
    violations = []
    for (subset_i, row_i, ints_i), (subset_j, row_j, ints_j) in combinations(
        zip(m.subsets, m.entries, int_rows), 2
    ):
        shared = [c for c in subset_i if c in ints_j]
        for col_i, col_j in combinations(shared, 2):
            if ints_i[col_i] * ints_j[col_j] != ints_i[col_j] * ints_j[col_i]:
                value = row_i[col_i] * row_j[col_j] - row_i[col_j] * row_j[col_i]
                violations.append(Minor(subset_i, subset_j, col_i, col_j, value))
    return tuple(violations)


def check_triples_k1(inst: FaceInstance) -> list[TripleViolation]:
    """Violated ratio products over all index triples a < b < c (k = 1 only).

    The product multiplies the a:b and b:c ratios by the *inverted* a:c
    ratio; the asymmetry comes from writing each line point with its smaller
    index first while the triple is ordered cyclically.
    """
    if inst.k != 1:
        raise WrongArity(f"triple products apply to k=1, got k={inst.k}")
    if not inst.on_torus:
        raise OffTorus("triple products need every coordinate nonzero")
    violations = []
    for a, b, c in combinations(range(inst.n + 1), 3):
        ab = inst.points[(a, b)].coords
        bc = inst.points[(b, c)].coords
        ac = inst.points[(a, c)].coords
        product = (ab[0] / ab[1]) * (bc[0] / bc[1]) * (ac[1] / ac[0])
        if product != 1:
            violations.append(TripleViolation(a, b, c, product))
    return violations


def decide_concurrent(inst: FaceInstance) -> ConcurrencyReport:
    """Concurrency verdict via the algebraic criteria, with witnesses.

    Instances with a zero coordinate are rejected; the criteria are only
    valid on the torus.
    """
    if not inst.on_torus:
        raise OffTorus("the algebraic criteria require every coordinate nonzero")
    if inst.k == 1:
        criterion = Criterion.TRIPLE_RATIOS
        witnesses: tuple = tuple(check_triples_k1(inst))
    else:
        criterion = Criterion.MINORS
        witnesses = _violated_minors(build_matrix(inst))
    verdict = not witnesses
    common = complete_rank1(build_matrix(inst)) if verdict else None
    return ConcurrencyReport(
        verdict=verdict, criterion=criterion, witnesses=witnesses, common_point=common
    )


def decide_with_oracle(inst: FaceInstance) -> ConcurrencyReport:
    """Run the criteria and the geometric oracle; record whether they agree."""
    report = decide_concurrent(inst)
    meet = geometric_oracle(inst)
    oracle_point = meet if isinstance(meet, ProjectivePoint) else None
    agrees = report.verdict == (oracle_point is not None)
    if agrees and report.verdict:
        agrees = report.common_point == oracle_point
    return ConcurrencyReport(
        verdict=report.verdict,
        criterion=report.criterion,
        witnesses=report.witnesses,
        common_point=report.common_point,
        oracle_agrees=agrees,
    )


def complete_rank1(m: PartialMatrix) -> ProjectivePoint:
    """The common point, read off a rank-one completion anchored at x0 = 1.

    Coordinate x_j comes from the lexicographically first face containing
    both 0 and j; every row is then checked to be proportional to the
    result on its specified columns.
    """
    coords: list[Fraction | None] = [Fraction(1)] + [None] * m.n
    for j in range(1, m.n + 1):
        subset = _first_subset_with(m.n, m.k, j)
        row = m.entries[m.subsets.index(subset)]
        anchor = row[0]
        if anchor is None or anchor == 0:
            raise OffTorus("rank-one completion anchors at x0 = 1 and needs x^I_0 != 0")
        coords[j] = row[j] / anchor
    x = [c for c in coords if c is not None]
    if len(x) != m.n + 1:
        raise AssertionError("every coordinate is anchored by construction")
    for subset, row in zip(m.subsets, m.entries):
        pivot = subset[0]
        for j in subset:
            if row[j] * x[pivot] != row[pivot] * x[j]:
                raise NotRankOneCompletable(
                    f"row {subset} is not proportional to the candidate point"
                )
    return ProjectivePoint(tuple(x))


def _first_subset_with(n: int, k: int, j: int) -> IndexSet:
    """Lexicographically first (k+1)-subset of {0..n} containing 0 and j."""
    members = {0, j}
    candidate = 1
    while len(members) < k + 1:
        if candidate != j:
            members.add(candidate)
        candidate += 1
    return tuple(sorted(members))


def completed_matrix(m: PartialMatrix, x: ProjectivePoint) -> list[tuple[Fraction, ...]]:
    """Fill the unspecified entries from the rank-one model with point x."""
    rows = []
    for subset, row in zip(m.subsets, m.entries):
        pivot = next((j for j in subset if x.coords[j] != 0), None)
        if pivot is None:
            raise NotRankOneCompletable(f"point has no support on face {subset}")
        scale = row[pivot] / x.coords[pivot]
        rows.append(tuple(x.coords[j] * scale for j in range(m.n + 1)))
    return rows


def cevian_span(inst: FaceInstance, subset: Iterable[int]) -> LinearSubspace:
    """Span of the face point (embedded in P^n) and the opposite face."""
    subset = tuple(subset)
    embedded = embed(inst.points[subset], subset, inst.n)
    opposite = coordinate_subspace(opposite_face(subset, inst.n), inst.n)
    return span([embedded, opposite])


def geometric_oracle(
    inst: FaceInstance,
) -> ProjectivePoint | LinearSubspace | None:
    """Exact intersection of all cevian spans.

    Returns the point when the intersection is zero-dimensional, the whole
    subspace when it is larger, and None when it is empty. Valid on and off
    the torus; this is the arbiter for the algebraic criteria.
    """
    spans = [cevian_span(inst, subset) for subset in inst.subsets]
    meet = intersect(spans)
    if meet is None:
        return None
    if meet.proj_dim == 0:
        return ProjectivePoint(meet.basis[0])
    return meet


def random_instance(n: int, k: int, seed: int, kind: InstanceKind) -> FaceInstance:
    """Seeded random instance with known ground truth.

    POSITIVE projects a random point with all coordinates nonzero into every
    face, so the spans are concurrent by construction. PERTURBED then scales
    one specified coordinate by a random factor != 1, which always breaks
    concurrency on the torus.
    """
    _validate_shape(n, k)
    rng = random.Random(f"cevageo:{n}:{k}:{seed}:{kind.value}")
    coords = tuple(_random_nonzero(rng) for _ in range(n + 1))
    source = ProjectivePoint(coords)
    points = {
        subset: project(source, subset) for subset in face_subsets(n, k)
    }
    if kind is InstanceKind.PERTURBED:
        subsets = face_subsets(n, k)
        target = subsets[rng.randrange(len(subsets))]
        position = rng.randrange(k + 1)
        factor = _random_nonzero(rng)
        while factor == 1:
            factor = _random_nonzero(rng)
        old = points[target].coords
        new = old[:position] + (old[position] * factor,) + old[position + 1 :]
        points[target] = ProjectivePoint(new)
    return FaceInstance(n=n, k=k, points=points)


def _random_nonzero(rng: random.Random) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-9, 9)
    return Fraction(num, rng.randint(1, 9))


def specified_minor_count(n: int, k: int) -> int:
    """Expected number of fully specified minors; sanity check for tests."""
    total = 0
    for subset_i, subset_j in combinations(face_subsets(n, k), 2):
        shared = len(set(subset_i) & set(subset_j))
        total += comb(shared, 2)
    return total
