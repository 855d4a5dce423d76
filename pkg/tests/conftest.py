import random
from fractions import Fraction

import pytest

from cevageo.projective import ProjectivePoint
from cevageo.simplex import FaceInstance
from cevageo.triangle import CevianTriple


def rational(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 9))


def nonzero_rational(rng: random.Random) -> Fraction:
    value = rational(rng)
    while value == 0:
        value = rational(rng)
    return value


def random_p1(rng: random.Random, allow_zero: bool = False) -> ProjectivePoint:
    """Random point of P^1; with allow_zero, one coordinate may vanish."""
    while True:
        if allow_zero:
            a, b = rational(rng), rational(rng)
        else:
            a, b = nonzero_rational(rng), nonzero_rational(rng)
        if a or b:
            return ProjectivePoint((a, b))


def random_h_point(rng: random.Random) -> tuple[ProjectivePoint, ProjectivePoint, ProjectivePoint]:
    """Random triple on the hypersurface d0*e0*f0 = d1*e1*f1."""
    d = random_p1(rng, allow_zero=True)
    e = random_p1(rng, allow_zero=True)
    f0 = d.coords[1] * e.coords[1]
    f1 = d.coords[0] * e.coords[0]
    if f0 == 0 and f1 == 0:
        # both monomials vanish already; any f works
        f = random_p1(rng, allow_zero=True)
    else:
        f = ProjectivePoint((f0, f1))
    return d, e, f


def triple_instance(triple: CevianTriple) -> FaceInstance:
    """Translate a planar cevian triple into the n=2, k=1 face instance."""
    d0, d1 = triple.d.coords
    e0, e1 = triple.e.coords
    f0, f1 = triple.f.coords
    return FaceInstance(
        n=2,
        k=1,
        points={
            (0, 1): ProjectivePoint((f0, f1)),
            (0, 2): ProjectivePoint((e1, e0)),
            (1, 2): ProjectivePoint((d0, d1)),
        },
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random("cevageo-tests")
