import random
from fractions import Fraction

import pytest

from cevageo.errors import DegenerateTriangle, IndeterminateRatio, InvalidArgument, PointNotOnSide
from cevageo.projective import intersect, point
from cevageo.triangle import (
    INFINITE,
    CevianTriple,
    Triangle2D,
    cevian_coordinates,
    cevian_feet,
    cevian_lines,
    check_ceva,
    concurrency_determinant,
    embedding_transform,
    ratio_product,
    _apply3,
    _invert3,
)
from tests.conftest import rational

F = Fraction


def unit_triangle() -> Triangle2D:
    return Triangle2D((1, 0), (0, 1), (0, 0))


def test_embedding_transform_rows():
    t = embedding_transform(unit_triangle())
    assert t == (
        (F(1), F(0), F(0)),
        (F(0), F(1), F(0)),
        (F(1), F(1), F(1)),
    )


def test_inverse_standardizes_vertices(rng):
    for _ in range(10):
        while True:
            try:
                tri = Triangle2D(
                    (rational(rng), rational(rng)),
                    (rational(rng), rational(rng)),
                    (rational(rng), rational(rng)),
                )
                break
            except DegenerateTriangle:
                continue
        inv = _invert3(embedding_transform(tri))
        lifted = [(v[0], v[1], F(1)) for v in (tri.a, tri.b, tri.c)]
        images = [_apply3(inv, v) for v in lifted]
        assert images[0] == (F(1), F(0), F(0))
        assert images[1] == (F(0), F(1), F(0))
        assert images[2] == (F(0), F(0), F(1))


def test_collinear_triangle_rejected():
    with pytest.raises(DegenerateTriangle):
        Triangle2D((0, 0), (2, 0), (1, 0))


class TestCevianCoordinates:
    def test_midpoints_give_unit_ratios(self):
        tri = unit_triangle()
        triple = cevian_coordinates(tri, (0, F("1/2")), (F("1/2"), 0), (F("1/2"), F("1/2")))
        assert triple.d == point(1, 1)
        assert triple.e == point(1, 1)
        assert triple.f == point(1, 1)

    def test_third_point_on_bc(self):
        # D = (0, 1/3) divides CB so that CD/DB = 1/2
        triple = cevian_coordinates(
            unit_triangle(), (0, F("1/3")), (F("1/2"), 0), (F("1/2"), F("1/2"))
        )
        assert triple.d == point(1, 2)
        assert triple.d.coords[0] / triple.d.coords[1] == F("1/2")

    def test_foot_at_vertex_gives_zero_coordinate(self):
        # F = A puts the last image coordinate at zero: f = (f0 : 0)
        triple = cevian_coordinates(
            unit_triangle(), (0, F("1/2")), (F("1/2"), 0), (1, 0)
        )
        assert triple.f.coords[1] == 0
        assert ratio_product(triple) is INFINITE

    def test_foot_off_side_rejected(self):
        with pytest.raises(PointNotOnSide):
            cevian_coordinates(
                unit_triangle(), (F("1/4"), F("1/4")), (F("1/2"), 0), (F("1/2"), F("1/2"))
            )


class TestDeterminant:
    def test_medians_vanish(self):
        assert concurrency_determinant(CevianTriple(point(1, 1), point(1, 1), point(1, 1))) == 0

    def test_concurrent_example(self):
        assert concurrency_determinant(CevianTriple(point(1, 2), point(3, 1), point(2, 3))) == 0

    def test_nonconcurrent_example(self):
        triple = CevianTriple(point(1, 1), point(1, 1), point(2, 1))
        assert concurrency_determinant(triple) == 1
        assert intersect(list(cevian_lines(triple))) is None


class TestRatioProduct:
    def test_medians(self):
        assert ratio_product(CevianTriple(point(1, 1), point(1, 1), point(1, 1))) == 1

    def test_concurrent_example(self):
        assert ratio_product(CevianTriple(point(1, 2), point(3, 1), point(2, 3))) == 1

    def test_nonconcurrent_example(self):
        assert ratio_product(CevianTriple(point(1, 1), point(1, 1), point(2, 1))) == 2

    def test_indeterminate(self):
        with pytest.raises(IndeterminateRatio):
            ratio_product(CevianTriple(point(1, 0), point(0, 1), point(1, 1)))


class TestCheckCeva:
    def test_medians_meet_at_centroid(self):
        tri = Triangle2D((0, 0), (4, 0), (0, 4))
        report = check_ceva(tri, (2, 2), (0, 2), (2, 0))
        assert report.concurrent
        assert report.ratio_product == 1
        assert report.determinant == 0
        assert report.common_point == point(F("4/3"), F("4/3"), 1)

    def test_perturbed_foot_breaks_concurrency(self):
        tri = Triangle2D((0, 0), (4, 0), (0, 4))
        report = check_ceva(tri, (2, 2), (0, 2), (1, 0))
        assert not report.concurrent
        assert report.determinant != 0
        assert report.common_point is None

    def test_parallel_cevians_meet_at_infinity(self):
        # cevians parallel to (1,1): concurrent in the projective sense
        tri = Triangle2D((0, 0), (1, 0), (0, 1))
        report = check_ceva(tri, (F("1/2"), F("1/2")), (0, -1), (-1, 0))
        assert report.concurrent
        assert report.common_point == point(1, 1, 0)

    def test_determinant_decides_when_ratio_indeterminate(self):
        # D at vertex B and E at vertex A: both monomials vanish, yet the
        # cevians AB, BA, CF still meet in a single point
        tri = unit_triangle()
        report = check_ceva(tri, (0, 1), (1, 0), (F("1/2"), F("1/2")))
        assert report.ratio_product is None
        assert report.determinant == 0
        assert report.concurrent
        assert report.common_point == point(F("1/2"), F("1/2"), 1)


def test_constructive_soundness(rng):
    """Feet of the cevians through p reproduce p as the common point."""
    built = 0
    while built < 25:
        try:
            tri = Triangle2D(
                (rational(rng), rational(rng)),
                (rational(rng), rational(rng)),
                (rational(rng), rational(rng)),
            )
            p = (rational(rng), rational(rng))
            feet = cevian_feet(tri, p)
        except (DegenerateTriangle, InvalidArgument):
            continue
        built += 1
        report = check_ceva(tri, *feet)
        assert report.concurrent
        assert report.common_point == point(p[0], p[1], 1)


def test_affine_invariance(rng):
    """Any invertible affine map preserves the ratio product and the
    vanishing of the determinant."""
    checked = 0
    while checked < 25:
        m = [[rational(rng) for _ in range(2)] for _ in range(2)]
        shift = (rational(rng), rational(rng))
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0:
            continue

        def apply(pt):
            return (
                m[0][0] * pt[0] + m[0][1] * pt[1] + shift[0],
                m[1][0] * pt[0] + m[1][1] * pt[1] + shift[1],
            )

        try:
            tri = Triangle2D(
                (rational(rng), rational(rng)),
                (rational(rng), rational(rng)),
                (rational(rng), rational(rng)),
            )
            feet = cevian_feet(tri, (rational(rng), rational(rng)))
            if checked % 2:
                # slide F along AB to exercise non-concurrent configurations
                direction = (tri.b[0] - tri.a[0], tri.b[1] - tri.a[1])
                feet = (
                    feet[0],
                    feet[1],
                    (feet[2][0] + direction[0], feet[2][1] + direction[1]),
                )
            before_triple = cevian_coordinates(tri, *feet)
            mapped_tri = Triangle2D(apply(tri.a), apply(tri.b), apply(tri.c))
            after_triple = cevian_coordinates(mapped_tri, *[apply(f) for f in feet])
        except (DegenerateTriangle, InvalidArgument, PointNotOnSide):
            continue
        checked += 1
        assert (concurrency_determinant(before_triple) == 0) == (
            concurrency_determinant(after_triple) == 0
        )
        try:
            before_ratio = ratio_product(before_triple)
        except IndeterminateRatio:
            continue
        assert before_ratio == ratio_product(after_triple)
