import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from cevageo import linalg

F = Fraction


def rows_of(*rows):
    return [tuple(F(v) for v in row) for row in rows]


def test_rref_identity_like():
    rows = rows_of((2, 0, 0), (0, 0, 3))
    assert linalg.rref(rows, 3) == rows_of((1, 0, 0), (0, 0, 1))


def test_rref_dependent_rows_collapse():
    rows = rows_of((1, 2, 3), (2, 4, 6), (1, 2, 4))
    reduced = linalg.rref(rows, 3)
    assert reduced == rows_of((1, 2, 0), (0, 0, 1))


def test_rref_drops_zero_rows_and_is_canonical():
    rows = rows_of((0, 0, 0), (0, F("1/2"), 1))
    assert linalg.rref(rows, 3) == rows_of((0, 1, 2))


def test_is_rref():
    assert linalg.is_rref(rows_of((1, 0, 5), (0, 1, 7)), 3)
    assert not linalg.is_rref(rows_of((2, 0, 0)), 3)
    assert not linalg.is_rref(rows_of((0, 1, 0), (1, 0, 0)), 3)
    assert not linalg.is_rref(rows_of((1, 1, 0), (0, 1, 0)), 3)


def test_kernel_of_plane_normal():
    # kernel of (1 1 1) is the plane x+y+z=0
    basis = linalg.kernel(rows_of((1, 1, 1)), 3)
    assert len(basis) == 2
    for vec in basis:
        assert sum(vec) == 0


def test_kernel_empty_for_full_rank():
    assert linalg.kernel(rows_of((1, 0), (0, 1)), 2) == []


def test_residue_detects_membership():
    basis = linalg.rref(rows_of((1, 0, 1), (0, 1, 1)), 3)
    assert not any(linalg.residue(tuple(F(v) for v in (2, 3, 5)), basis))
    assert any(linalg.residue(tuple(F(v) for v in (0, 0, 1)), basis))


small_fraction = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def fraction_matrix(draw):
    height = draw(st.integers(min_value=1, max_value=5))
    width = draw(st.integers(min_value=1, max_value=5))
    rows = [
        tuple(draw(small_fraction) for _ in range(width)) for _ in range(height)
    ]
    return rows, width


@given(fraction_matrix())
@settings(max_examples=150, deadline=None)
def test_kernel_vectors_annihilate(matrix):
    rows, width = matrix
    for vec in linalg.kernel(rows, width):
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


@given(fraction_matrix())
@settings(max_examples=150, deadline=None)
def test_rank_nullity(matrix):
    rows, width = matrix
    assert linalg.rank(rows, width) + len(linalg.kernel(rows, width)) == width


@given(fraction_matrix())
@settings(max_examples=150, deadline=None)
def test_rref_is_idempotent_and_canonical(matrix):
    rows, width = matrix
    reduced = linalg.rref(rows, width)
    assert linalg.rref(reduced, width) == reduced
    assert linalg.is_rref(reduced, width)
    # row-space invariance under shuffling
    rng = random.Random(42)
    shuffled = list(rows)
    rng.shuffle(shuffled)
    assert linalg.rref(shuffled, width) == reduced
