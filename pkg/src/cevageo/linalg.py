"""Exact row reduction over the rationals.

Rows are cleared to coprime integers and eliminated by cross-multiplication
(with opportunistic gcd reduction), so stacked systems with many sparse rows
stay cheap. Results come back as Fractions in fully reduced row echelon form,
which makes subspace representations canonical: equal row spaces produce
literally equal bases.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row to coprime integers (sign preserved)."""
    lcm = 1
    for value in row:
        den = value.denominator
        lcm = lcm // gcd(lcm, den) * den
    ints = [value.numerator * (lcm // value.denominator) for value in row]
    g = 0
    for value in ints:
        g = gcd(g, value)
    if g > 1:
        ints = [value // g for value in ints]
    return ints


def _reduce_row(row: list[int]) -> list[int]:
    g = 0
    for value in row:
        g = gcd(g, value)
    if g > 1:
        return [value // g for value in row]
    return row


def _int_echelon(rows: list[list[int]], width: int) -> tuple[list[list[int]], list[int]]:
    """Gauss-Jordan over the integers; returns nonzero rows and pivot columns."""
    work = [row for row in rows if any(row)]
    pivot_cols: list[int] = []
    next_row = 0
    for col in range(width):
        pivot = next((i for i in range(next_row, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[next_row], work[pivot] = work[pivot], work[next_row]
        pivot_row = work[next_row]
        head = pivot_row[col]
        for i, row in enumerate(work):
            if i == next_row:
                continue
            factor = row[col]
            if factor == 0:
                continue
            work[i] = _reduce_row(
                [row[j] * head - pivot_row[j] * factor for j in range(width)]
            )
        pivot_cols.append(col)
        next_row += 1
        if next_row == len(work):
            break
    reduced = [row for row in work[:next_row]]
    return reduced, pivot_cols


def rref(rows: Sequence[Sequence[Fraction]], width: int) -> list[Vector]:
    """Reduced row echelon form; zero rows dropped, pivots normalized to 1."""
    int_rows = [_integer_row(row) for row in rows]
    reduced, pivot_cols = _int_echelon(int_rows, width)
    result = []
    for row, col in zip(reduced, pivot_cols):
        head = row[col]
        result.append(
            tuple(
                _ZERO if value == 0 else (_ONE if value == head else Fraction(value, head))
                for value in row
            )
        )
    return result


def is_rref(rows: Sequence[Sequence[Fraction]], width: int) -> bool:
    """Cheap test for an already canonical basis (skips re-reduction)."""
    previous = -1
    pivots = []
    for row in rows:
        col = next((j for j, value in enumerate(row) if value), None)
        if col is None or col <= previous or row[col] != 1:
            return False
        pivots.append(col)
        previous = col
    for i, row in enumerate(rows):
        for j, col in enumerate(pivots):
            if i != j and row[col] != 0:
                return False
    return True


def rank(rows: Sequence[Sequence[Fraction]], width: int) -> int:
    int_rows = [_integer_row(row) for row in rows]
    _, pivot_cols = _int_echelon(int_rows, width)
    return len(pivot_cols)


def kernel(rows: Sequence[Sequence[Fraction]], width: int) -> list[Vector]:
    """Canonical basis of the right kernel {v : A v = 0}."""
    return kernel_of_rref(rref(rows, width), width)


def kernel_of_rref(reduced: Sequence[Sequence[Fraction]], width: int) -> list[Vector]:
    """Kernel basis when the input is already in reduced row echelon form."""
    pivot_cols = [next(j for j, value in enumerate(row) if value) for row in reduced]
    free_cols = [j for j in range(width) if j not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [_ZERO] * width
        vec[free] = _ONE
        for row, col in zip(reduced, pivot_cols):
            vec[col] = -row[free]
        basis.append(vec)
    return rref(basis, width)


def residue(vector: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> Vector:
    """Remainder of a vector after elimination against an RREF basis.

    Zero exactly when the vector lies in the row space of ``basis``.
    """
    work = list(vector)
    for row in basis:
        col = next(j for j, value in enumerate(row) if value)
        factor = work[col]
        if factor == 0:
            continue
        for j in range(len(work)):
            work[j] -= factor * row[j]
    return tuple(work)
