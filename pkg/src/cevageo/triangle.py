"""Planar concurrency of cevians via an exact change of basis.

A Euclidean triangle is lifted to the z=1 slice of 3-space; the inverse of
the vertex matrix sends its vertices to the standard basis, so the sides
land on the coordinate lines and each cevian foot becomes a point of P^1.
Concurrency is then a single determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DegenerateTriangle, IndeterminateRatio, InvalidArgument, PointNotOnSide
from .projective import LinearSubspace, ProjectivePoint, intersect, point, span

Coords = tuple[Fraction, Fraction]
Matrix3 = tuple[tuple[Fraction, ...], ...]


class _InfiniteRatio:
    """Ratio product with zero denominator and nonzero numerator."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = _InfiniteRatio()

RatioValue = Union[Fraction, _InfiniteRatio]


def _coords(value) -> Coords:
    x, y = value
    return (Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Triangle2D:
    """Euclidean triangle with exact rational vertices A, B, C."""

    a: Coords
    b: Coords
    c: Coords

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _coords(self.a))
        object.__setattr__(self, "b", _coords(self.b))
        object.__setattr__(self, "c", _coords(self.c))
        if _det3(embedding_transform(self, _validate=False)) == 0:
            raise DegenerateTriangle(f"vertices {self.a}, {self.b}, {self.c} are collinear")


@dataclass(frozen=True)
class CevianTriple:
    """Feet of the three cevians as points of P^1.

    d sits on side BC, e on AC, f on AB; the classical side ratios are
    CD/DB = d0/d1, AE/EC = e0/e1, BF/FA = f0/f1.
    """

    d: ProjectivePoint
    e: ProjectivePoint
    f: ProjectivePoint

    def __post_init__(self) -> None:
        for name, p in (("d", self.d), ("e", self.e), ("f", self.f)):
            if p.dim != 1:
                raise PointNotOnSide(f"{name} must be a point of P^1, got P^{p.dim}")


@dataclass(frozen=True)
class CevaReport:
    """Outcome of the planar concurrency check.

    ratio_product is None when both monomials vanish (the 0/0 case); the
    determinant still decides.
    """

    ratio_product: RatioValue | None
    determinant: Fraction
    concurrent: bool
    common_point: ProjectivePoint | None


def embedding_transform(t: Triangle2D, _validate: bool = True) -> Matrix3:
    """Matrix with columns the lifted vertices; its inverse standardizes them."""
    m = (
        (t.a[0], t.b[0], t.c[0]),
        (t.a[1], t.b[1], t.c[1]),
        (Fraction(1), Fraction(1), Fraction(1)),
    )
    if _validate and _det3(m) == 0:
        raise DegenerateTriangle(f"vertices {t.a}, {t.b}, {t.c} are collinear")
    return m


def _det3(m: Matrix3) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _invert3(m: Matrix3) -> Matrix3:
    det = _det3(m)
    if det == 0:
        raise DegenerateTriangle("matrix is singular")

    def cof(r: int, c: int) -> Fraction:
        return (
            m[(r + 1) % 3][(c + 1) % 3] * m[(r + 2) % 3][(c + 2) % 3]
            - m[(r + 1) % 3][(c + 2) % 3] * m[(r + 2) % 3][(c + 1) % 3]
        )

    return tuple(tuple(cof(c, r) / det for c in range(3)) for r in range(3))


def _apply3(m: Matrix3, v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    return tuple(sum(row[j] * v[j] for j in range(3)) for row in m)


def cevian_coordinates(t: Triangle2D, d_foot, e_foot, f_foot) -> CevianTriple:
    """Transform the feet into P^1 points on the coordinate lines.

    Images are read off as (0, d0, d1), (e1, 0, e0), (f0, f1, 0); a nonzero
    entry where a zero is required means the foot is off its side.
    """
    inv = _invert3(embedding_transform(t))
    images = []
    for name, foot in (("D", d_foot), ("E", e_foot), ("F", f_foot)):
        x, y = _coords(foot)
        images.append((name, _apply3(inv, (x, y, Fraction(1)))))
    (_, img_d), (_, img_e), (_, img_f) = images
    if img_d[0] != 0:
        raise PointNotOnSide("D must lie on line BC")
    if img_e[1] != 0:
        raise PointNotOnSide("E must lie on line AC")
    if img_f[2] != 0:
        raise PointNotOnSide("F must lie on line AB")
    return CevianTriple(
        d=ProjectivePoint((img_d[1], img_d[2])),
        e=ProjectivePoint((img_e[2], img_e[0])),
        f=ProjectivePoint((img_f[0], img_f[1])),
    )


def concurrency_determinant(c: CevianTriple) -> Fraction:
    """d0*e0*f0 - d1*e1*f1; zero exactly when the cevians are concurrent."""
    d0, d1 = c.d.coords
    e0, e1 = c.e.coords
    f0, f1 = c.f.coords
    return d0 * e0 * f0 - d1 * e1 * f1


def ratio_product(c: CevianTriple) -> RatioValue:
    """(d0/d1)(e0/e1)(f0/f1); INFINITE when only the denominator vanishes."""
    d0, d1 = c.d.coords
    e0, e1 = c.e.coords
    f0, f1 = c.f.coords
    num = d0 * e0 * f0
    den = d1 * e1 * f1
    if den == 0:
        if num == 0:
            raise IndeterminateRatio("both ratio monomials vanish; use the determinant")
        return INFINITE
    return num / den


def cevian_lines(c: CevianTriple) -> tuple[LinearSubspace, LinearSubspace, LinearSubspace]:
    """The three cevians as projective lines in standardized coordinates."""
    d0, d1 = c.d.coords
    e0, e1 = c.e.coords
    f0, f1 = c.f.coords
    return (
        span([point(1, 0, 0), ProjectivePoint((Fraction(0), d0, d1))]),
        span([point(0, 1, 0), ProjectivePoint((e1, Fraction(0), e0))]),
        span([point(0, 0, 1), ProjectivePoint((f0, f1, Fraction(0)))]),
    )


def check_ceva(t: Triangle2D, d_foot, e_foot, f_foot) -> CevaReport:
    """Full planar report: determinant, ratio product, recovered point.

    The common point is found by intersecting the three cevian lines exactly
    and mapping back through the vertex matrix, so it is correct even when
    the cevians meet outside the triangle or at infinity.
    """
    triple = cevian_coordinates(t, d_foot, e_foot, f_foot)
    det = concurrency_determinant(triple)
    try:
        ratio: RatioValue | None = ratio_product(triple)
    except IndeterminateRatio:
        ratio = None
    concurrent = det == 0
    common = None
    if concurrent:
        meet = intersect(list(cevian_lines(triple)))
        if meet is None or meet.proj_dim != 0:
            raise AssertionError("vanishing determinant must yield a single point")
        transform = embedding_transform(t)
        common = ProjectivePoint(_apply3(transform, meet.basis[0])).normalize()
    return CevaReport(ratio_product=ratio, determinant=det, concurrent=concurrent, common_point=common)


def cevian_feet(t: Triangle2D, p) -> tuple[Coords, Coords, Coords]:
    """Feet of the cevians through an interior point, as Euclidean pairs.

    Rejects points for which a cevian is undefined (p at a vertex) or a foot
    escapes to infinity (cevian parallel to the opposite side).
    """
    px, py = _coords(p)
    lift = lambda xy: (xy[0], xy[1], Fraction(1))
    a, b, c = lift(t.a), lift(t.b), lift(t.c)
    target = (px, py, Fraction(1))
    feet = []
    for vertex, (s1, s2) in ((a, (b, c)), (b, (a, c)), (c, (a, b))):
        through = _cross(vertex, target)
        if not any(through):
            raise InvalidArgument("cevians through a vertex are undefined")
        foot = _cross(through, _cross(s1, s2))
        if foot[2] == 0:
            raise InvalidArgument("cevian foot lies at infinity")
        feet.append((foot[0] / foot[2], foot[1] / foot[2]))
    return feet[0], feet[1], feet[2]


def _cross(u: tuple[Fraction, ...], v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )
