"""Exact dense linear algebra over the rationals.

Determinants and linear solves go through fraction-free (Bareiss)
elimination on an integer lift of the matrix: each row is scaled by the LCM
of its denominators, eliminated over the integers with exact divisions, and
the scaling is undone at the end.  This avoids the denominator blow-up of
naive rational Gaussian elimination on Hankel matrices of fast-growing
sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence


class SingularSystem(ValueError):
    """The coefficient matrix is singular."""


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of Fraction

    @staticmethod
    def of(grid: Sequence[Sequence]) -> "RatMatrix":
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        ent = []
        for r in grid:
            if len(r) != cols:
                raise ValueError("ragged matrix")
            ent.append(tuple(Fraction(v) for v in r))
        return RatMatrix(rows, cols, tuple(ent))

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix.of([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def _integer_lift(grid) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; return (int rows, product of scalings)."""
    lifted = []
    scale = Fraction(1)
    for row in grid:
        d = 1
        for v in row:
            d = lcm(d, v.denominator)
        scale *= d
        lifted.append([int(v * d) for v in row])
    return lifted, scale


def _bareiss(m: list[list[int]], ncols_elim: int) -> int:
    """In-place fraction-free elimination of the first ncols_elim columns.

    Returns the sign of the row permutation applied; after return,
    m[k][k] for k < ncols_elim holds the k-th leading principal minor of the
    (possibly row-swapped) integer matrix, up to the usual Bareiss scaling:
    the final pivot m[n-1][n-1] is exactly det for a full square elimination.
    Raises SingularSystem if a zero pivot column is hit.
    """
    n = len(m)
    sign = 1
    prev = 1
    for k in range(ncols_elim):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                raise SingularSystem(f"zero pivot at column {k}")
        for i in range(k + 1, n):
            for j in range(k + 1, len(m[i])):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign


def det_bareiss(m: RatMatrix) -> Fraction:
    """Exact determinant via fraction-free elimination over an integer lift."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    lifted, scale = _integer_lift(m.entries)
    try:
        sign = _bareiss(lifted, n - 1)
    except SingularSystem:
        return Fraction(0)
    return Fraction(sign * lifted[n - 1][n - 1]) / scale


def solve_exact(m: RatMatrix, rhs: Sequence) -> list[Fraction]:
    """Exact solution of m x = rhs for square nonsingular m.

    Raises SingularSystem when the matrix is singular (degenerate fit
    constraints, in the polynomial-fit use).
    """
    if m.rows != m.cols:
        raise ValueError("solve requires a square matrix")
    n = m.rows
    rhs = [Fraction(v) for v in rhs]
    if len(rhs) != n:
        raise ValueError("rhs length mismatch")
    aug = [list(row) + [rhs[i]] for i, row in enumerate(m.entries)]
    lifted, _ = _integer_lift(aug)
    _bareiss(lifted, n - 1)
    if lifted[n - 1][n - 1] == 0:
        raise SingularSystem("matrix is singular")
    # back substitution on the triangularized integer system
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(lifted[i][n])
        for j in range(i + 1, n):
            s -= lifted[i][j] * x[j]
        x[i] = s / lifted[i][i]
    return x


def hankel_matrix(terms: Sequence, shift: int, n: int) -> RatMatrix:
    """The n x n matrix with (i, j) entry terms[i + j + shift]."""
    if len(terms) < 2 * n - 1 + shift:
        raise ValueError("not enough terms for the requested Hankel matrix")
    return RatMatrix.of([[terms[i + j + shift] for j in range(n)] for i in range(n)])
