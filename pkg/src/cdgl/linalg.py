"""Exact rational linear algebra on small dense matrices.

Matrices are lists of rows of Fractions.  Everything here is plain
Gaussian elimination; dimensions in this package stay in the dozens.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = list[Fraction]
Matrix = list[Row]

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = [list(row) for row in matrix]
    if not m:
        return [], []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(matrix)[1])


def row_space_basis(matrix: Sequence[Sequence[Fraction]]) -> Matrix:
    red, pivots = rref(matrix)
    return [red[i] for i in range(len(pivots))]


def nullspace_basis(matrix: Sequence[Sequence[Fraction]]) -> Matrix:
    """Basis of {v : matrix @ v = 0}."""
    if not matrix:
        return []
    red, pivots = rref(matrix)
    cols = len(matrix[0])
    free = [c for c in range(cols) if c not in pivots]
    basis: Matrix = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def in_row_span(matrix: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]) -> bool:
    base = [list(r) for r in matrix]
    r0 = rank(base)
    base.append(list(vector))
    return rank(base) == r0


def complement_indices(matrix: Sequence[Sequence[Fraction]], dim: int) -> list[int]:
    """Indices of standard basis vectors completing the row space of
    `matrix` to all of Q^dim."""
    base = [list(r) for r in matrix]
    out: list[int] = []
    current = rank(base)
    for i in range(dim):
        e = [ZERO] * dim
        e[i] = ONE
        trial = base + [e]
        if rank(trial) > current:
            base = trial
            current += 1
            out.append(i)
    return out


def solve_in_span(matrix: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]) -> list[Fraction] | None:
    """Coefficients x with sum_i x_i * matrix[i] = vector, or None."""
    if not matrix:
        return None if any(vector) else []
    cols = len(matrix[0])
    n = len(matrix)
    aug = [[matrix[i][c] for i in range(n)] + [vector[c]] for c in range(cols)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [ZERO] * n
    for r, pc in enumerate(pivots):
        x[pc] = red[r][n]
    return x
