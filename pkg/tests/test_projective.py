import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cevageo.errors import (
    DimensionMismatch,
    InvalidArgument,
    InvalidIndexSet,
    InvalidPoint,
    ProjectionUndefined,
)
from cevageo.projective import (
    LinearSubspace,
    ProjectivePoint,
    coordinate_subspace,
    embed,
    intersect,
    normalize,
    opposite_face,
    point,
    project,
    span,
)

F = Fraction


class TestNormalize:
    def test_divides_by_first_nonzero(self):
        assert normalize(point(2, 4, 6)).coords == (F(1), F(2), F(3))

    def test_negative_leading_coordinate(self):
        assert normalize(point(0, -3, 6)).coords == (F(0), F(1), F(-2))

    def test_identity_case(self):
        p = point(1, 0, 0)
        assert normalize(p).coords == p.coords

    def test_idempotent(self):
        p = point("2/3", 5, 0)
        assert normalize(normalize(p)) == normalize(p)

    def test_all_zero_rejected(self):
        with pytest.raises(InvalidPoint):
            point(0, 0, 0)


def test_point_equality_up_to_scale():
    assert point(1, 2, 3) == point(2, 4, 6)
    assert point(1, 2, 3) != point(1, 2, 4)
    assert point(1, 2) != point(1, 2, 0)
    assert hash(point(1, 2, 3)) == hash(point("1/2", 1, "3/2"))


class TestCoordinateSubspace:
    def test_line_in_plane(self):
        sub = coordinate_subspace((0, 1), 2)
        assert sub.proj_dim == 1
        assert sub.basis == ((F(1), F(0), F(0)), (F(0), F(1), F(0)))

    def test_single_vertex(self):
        sub = coordinate_subspace((2,), 2)
        assert sub.proj_dim == 0
        assert sub.contains(point(0, 0, 1))

    def test_line_in_three_space(self):
        sub = coordinate_subspace((2, 3), 3)
        assert sub.proj_dim == 1
        assert sub.contains(point(0, 0, 5, 7))
        assert not sub.contains(point(1, 0, 5, 7))

    def test_empty_rejected(self):
        with pytest.raises(InvalidIndexSet):
            coordinate_subspace((), 2)

    def test_unsorted_rejected(self):
        with pytest.raises(InvalidIndexSet):
            coordinate_subspace((2, 1), 3)


class TestOppositeFace:
    def test_plane_cases(self):
        assert opposite_face((0, 1), 2) == (2,)
        assert opposite_face((2, 3), 3) == (0, 1)
        assert opposite_face((0,), 4) == (1, 2, 3, 4)

    def test_full_set_rejected(self):
        with pytest.raises(InvalidIndexSet):
            opposite_face((0, 1, 2), 2)

    def test_empty_rejected(self):
        with pytest.raises(InvalidIndexSet):
            opposite_face((), 2)


class TestSpan:
    def test_two_points_make_a_coordinate_line(self):
        sub = span([point(1, 0, 0), point(0, 1, 0)])
        assert sub == coordinate_subspace((0, 1), 2)
        assert sub.proj_dim == 1

    def test_single_point(self):
        sub = span([point(1, 2, 3)])
        assert sub.proj_dim == 0
        assert sub.contains(point(2, 4, 6))

    def test_point_with_subspace(self):
        sub = span([point(1, 1, 1, 1), coordinate_subspace((2, 3), 3)])
        assert sub.proj_dim == 2

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            span([point(1, 0), point(1, 0, 0)])

    def test_empty_rejected(self):
        with pytest.raises(InvalidArgument):
            span([])


class TestIntersect:
    def test_two_coordinate_lines_meet_in_a_point(self):
        a = coordinate_subspace((1, 2), 2)  # x0 = 0
        b = coordinate_subspace((0, 2), 2)  # x1 = 0
        meet = intersect([a, b])
        assert meet is not None and meet.proj_dim == 0
        assert ProjectivePoint(meet.basis[0]) == point(0, 0, 1)

    def test_three_cevian_lines(self):
        # d=(1:2), e=(3:1), f=(2:3): lines through each vertex and its foot
        lines = [
            span([point(1, 0, 0), point(0, 1, 2)]),
            span([point(0, 1, 0), point(1, 0, 3)]),
            span([point(0, 0, 1), point(2, 3, 0)]),
        ]
        meet = intersect(lines)
        assert meet is not None and meet.proj_dim == 0
        assert ProjectivePoint(meet.basis[0]) == point(2, 3, 6)

    def test_skew_lines_are_empty(self):
        a = span([point(1, 0, 0, 0), point(0, 1, 0, 0)])
        b = span([point(0, 0, 1, 0), point(1, 1, 1, 1)])
        assert intersect([a, b]) is None

    def test_empty_input_rejected(self):
        with pytest.raises(InvalidArgument):
            intersect([])


class TestProject:
    def test_keeps_selected_coordinates(self):
        assert project(point(1, 2, 3, 4), (2, 3)) == point(3, 4)

    def test_spec_example_shape(self):
        p = point(5, 6, 7, 8)
        assert project(p, (2, 3)).coords == (F(7), F(8))

    def test_center_of_projection(self):
        with pytest.raises(ProjectionUndefined):
            project(point(1, 0, 0), (1, 2))


def test_embed_inverts_project():
    p = point(0, 3, 0, 4)
    assert embed(project(p, (1, 3)), (1, 3), 3) == p
    with pytest.raises(DimensionMismatch):
        embed(point(1, 2), (0, 1, 2), 3)


def test_geometric_algebraic_agreement(rng):
    """Intersecting span(p, opposite face) with the face extracts the
    projection, placed on the face with zeros elsewhere."""
    from tests.conftest import nonzero_rational

    for _ in range(25):
        n = rng.randint(2, 5)
        k = rng.randint(1, n - 1)
        p = ProjectivePoint(tuple(nonzero_rational(rng) for _ in range(n + 1)))
        subset = tuple(sorted(rng.sample(range(n + 1), k + 1)))
        cone = span([p, coordinate_subspace(opposite_face(subset, n), n)])
        meet = intersect([cone, coordinate_subspace(subset, n)])
        assert meet is not None and meet.proj_dim == 0
        assert ProjectivePoint(meet.basis[0]) == embed(project(p, subset), subset, n)


def _random_subspace(rng, n, generators):
    from tests.conftest import rational

    while True:
        rows = [
            tuple(rational(rng) for _ in range(n + 1)) for _ in range(generators)
        ]
        if any(any(row) for row in rows):
            return span(
                [ProjectivePoint(row) for row in rows if any(row)]
            )


def test_dimension_formula(rng):
    """dim span(A,B) + dim (A meet B) = dim A + dim B when they meet."""
    hits = 0
    while hits < 30:
        n = rng.randint(2, 5)
        a = _random_subspace(rng, n, rng.randint(1, n))
        b = _random_subspace(rng, n, rng.randint(1, n))
        meet = intersect([a, b])
        if meet is None:
            continue
        hits += 1
        joined = span([a, b])
        assert joined.proj_dim + meet.proj_dim == a.proj_dim + b.proj_dim


def test_span_and_intersect_are_order_independent(rng):
    for _ in range(20):
        n = rng.randint(2, 4)
        subs = [_random_subspace(rng, n, rng.randint(1, n)) for _ in range(3)]
        shuffled = list(subs)
        rng.shuffle(shuffled)
        assert span(subs) == span(shuffled)
        assert intersect(subs) == intersect(shuffled)


nonzero_scalar = st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(
    lambda f: f != 0
)
coords_strategy = st.lists(
    st.fractions(min_value=-9, max_value=9, max_denominator=9), min_size=2, max_size=6
).filter(lambda cs: any(cs))


@given(coords_strategy, nonzero_scalar)
@settings(max_examples=200, deadline=None)
def test_scale_invariance(coords, scalar):
    p = ProjectivePoint(tuple(coords))
    assert normalize(p.scale(scalar)) == normalize(p)


@given(coords_strategy, st.data())
@settings(max_examples=200, deadline=None)
def test_projection_compatibility(coords, data):
    """Projecting to I and then to J inside I equals projecting straight to J."""
    p = ProjectivePoint(tuple(coords))
    n = p.dim
    big = sorted(
        data.draw(
            st.sets(st.integers(min_value=0, max_value=n), min_size=2, max_size=n + 1)
        )
    )
    small = sorted(
        data.draw(st.sets(st.sampled_from(big), min_size=1, max_size=len(big)))
    )
    try:
        once = project(p, big)
    except ProjectionUndefined:
        return
    positions = tuple(big.index(j) for j in small)
    try:
        direct = project(p, small)
    except ProjectionUndefined:
        assert not any(once.coords[i] for i in positions)
        return
    assert project(once, positions) == direct
