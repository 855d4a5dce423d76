"""The blowup of the plane in the three vertices, as an incidence locus.

A surface point couples a plane point x with three lines d, e, f through the
vertices; the three bilinear incidence equations are

    x1*d1 = x2*d0,   x2*e1 = x0*e0,   x0*f1 = x1*f0.

Forgetting x lands on the hypersurface d0*e0*f0 = d1*e1*f1 inside the triple
product of lines, and that map is invertible away from two exceptional
triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInImage, NotOnHypersurface, NotOnSurface
from .projective import ProjectivePoint, point


def on_affine_blowup(p, line: ProjectivePoint) -> bool:
    """Incidence x*a1 == a0*y of a plane point with a line through the origin."""
    x, y = (Fraction(v) for v in p)
    if line.dim != 1:
        raise NotOnSurface(f"line must be a point of P^1, got P^{line.dim}")
    a0, a1 = line.coords
    return x * a1 == a0 * y


def _check_p1(name: str, p: ProjectivePoint) -> None:
    if p.dim != 1:
        raise NotOnSurface(f"{name} must be a point of P^1, got P^{p.dim}")


def on_surface(x: ProjectivePoint, d: ProjectivePoint, e: ProjectivePoint, f: ProjectivePoint) -> bool:
    """All three incidence equations hold exactly."""
    if x.dim != 2:
        raise NotOnSurface(f"x must be a point of P^2, got P^{x.dim}")
    for name, p in (("d", d), ("e", e), ("f", f)):
        _check_p1(name, p)
    x0, x1, x2 = x.coords
    d0, d1 = d.coords
    e0, e1 = e.coords
    f0, f1 = f.coords
    return x1 * d1 == x2 * d0 and x2 * e1 == x0 * e0 and x0 * f1 == x1 * f0


def on_hypersurface(d: ProjectivePoint, e: ProjectivePoint, f: ProjectivePoint) -> bool:
    """The product equation d0*e0*f0 == d1*e1*f1."""
    for name, p in (("d", d), ("e", e), ("f", f)):
        _check_p1(name, p)
    d0, d1 = d.coords
    e0, e1 = e.coords
    f0, f1 = f.coords
    return d0 * e0 * f0 == d1 * e1 * f1


@dataclass(frozen=True)
class SurfacePoint:
    """Point of the blowup surface; the incidence equations are enforced."""

    x: ProjectivePoint
    d: ProjectivePoint
    e: ProjectivePoint
    f: ProjectivePoint

    def __post_init__(self) -> None:
        if not on_surface(self.x, self.d, self.e, self.f):
            raise NotOnSurface(
                f"({self.x!r}, {self.d!r}, {self.e!r}, {self.f!r}) violates the incidence equations"
            )


@dataclass(frozen=True)
class HypersurfacePoint:
    """Triple of lines satisfying the product equation."""

    d: ProjectivePoint
    e: ProjectivePoint
    f: ProjectivePoint

    def __post_init__(self) -> None:
        if not on_hypersurface(self.d, self.e, self.f):
            raise NotOnHypersurface(
                f"({self.d!r}, {self.e!r}, {self.f!r}) violates d0*e0*f0 = d1*e1*f1"
            )


def project_to_hypersurface(s: SurfacePoint) -> HypersurfacePoint:
    """Forget the plane point; the image satisfies the product equation."""
    return HypersurfacePoint(d=s.d, e=s.e, f=s.f)


# Each chart names the x-coordinate it pins to 1 and the two coordinates
# that must not vanish for the inversion formulas below to apply.
_CHARTS = ("x2", "x0", "x1")


def excluded_triple(d: ProjectivePoint, e: ProjectivePoint, f: ProjectivePoint) -> str | None:
    """Name of the exceptional triple, or None.

    ((1:0),(1:0),(1:0)) and ((0:1),(0:1),(0:1)) are the two triples the
    inverse construction pivots on: no plane point sits over either.
    """
    for name, p in (("d", d), ("e", e), ("f", f)):
        _check_p1(name, p)
    if d.coords[1] == 0 and e.coords[1] == 0 and f.coords[1] == 0:
        return "((1:0),(1:0),(1:0))"
    if d.coords[0] == 0 and e.coords[0] == 0 and f.coords[0] == 0:
        return "((0:1),(0:1),(0:1))"
    return None


def lift_triple(d: ProjectivePoint, e: ProjectivePoint, f: ProjectivePoint) -> SurfacePoint:
    """Validate a raw line triple and recover the plane point over it.

    The two exceptional triples are reported as NotInImage before anything
    else; other triples off the hypersurface raise NotOnHypersurface.
    """
    excluded = excluded_triple(d, e, f)
    if excluded is not None:
        raise NotInImage(f"{excluded} has no preimage on the blowup surface")
    return lift_to_surface(HypersurfacePoint(d=d, e=e, f=f))


def lift_to_surface(h: HypersurfacePoint) -> SurfacePoint:
    """Recover the unique plane point over a hypersurface point.

    Charts are tried in a fixed order and the first applicable one is used;
    every applicable chart yields the same point. Every hypersurface point
    admits a chart: the only chartless triples are the two exceptional ones,
    and those fail the hypersurface equation.
    """
    d0, d1 = h.d.coords
    e0, e1 = h.e.coords
    f0, f1 = h.f.coords
    for chart in _CHARTS:
        x = _lift_in_chart(chart, d0, d1, e0, e1, f0, f1)
        if x is not None:
            return SurfacePoint(x=x, d=h.d, e=h.e, f=h.f)
    raise AssertionError("hypersurface points always admit a chart")


def _lift_in_chart(chart: str, d0, d1, e0, e1, f0, f1) -> ProjectivePoint | None:
    if chart == "x2" and d1 != 0 and e0 != 0:
        # x2 = 1, x1 = d0/d1, x0 = e1/e0, cleared by e0*d1
        return point(e1 * d1, d0 * e0, e0 * d1)
    if chart == "x0" and e1 != 0 and f0 != 0:
        # x0 = 1, x1 = f1/f0, x2 = e0/e1, cleared by f0*e1
        return point(f0 * e1, f1 * e1, e0 * f0)
    if chart == "x1" and d0 != 0 and f1 != 0:
        # x1 = 1, x0 = f0/f1, x2 = d1/d0, cleared by f1*d0
        return point(f0 * d0, f1 * d0, f1 * d1)
    return None


def lift_charts(h: HypersurfacePoint) -> dict[str, ProjectivePoint]:
    """Lift in every applicable chart; used to confirm chart independence."""
    d0, d1 = h.d.coords
    e0, e1 = h.e.coords
    f0, f1 = h.f.coords
    lifts = {}
    for chart in _CHARTS:
        x = _lift_in_chart(chart, d0, d1, e0, e1, f0, f1)
        if x is not None:
            lifts[chart] = x
    return lifts
