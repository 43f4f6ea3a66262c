"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries are ints or Fractions and every result
is exact.  Rank uses fraction-free Bareiss elimination on a denominator-
cleared integer copy (intermediate entries are minors of the input, so the
divisions are exact and growth stays polynomial).  Kernels, solving and
inverses go through plain rational Gauss-Jordan, which is a structurally
different elimination and doubles as a cross-check on the Bareiss path.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple[Fraction, ...]
Row = Sequence[Fraction | int]


def _integer_rows(rows: Sequence[Row]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    cleared = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = 1
        for x in fracs:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        cleared.append([int(x * scale) for x in fracs])
    return cleared


def rank(rows: Sequence[Row]) -> int:
    """Rank by fraction-free Bareiss elimination with greedy pivoting."""
    mat = _integer_rows(rows)
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = -1
        for i in range(r, nrows):
            if mat[i][c] != 0 and (
                pivot_row == -1 or abs(mat[i][c]) < abs(mat[pivot_row][c])
            ):
                pivot_row = i
        if pivot_row == -1:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pivot = mat[r][c]
        for i in range(r + 1, nrows):
            head = mat[i][c]
            row_i, row_r = mat[i], mat[r]
            for j in range(c + 1, ncols):
                num = row_i[j] * pivot - head * row_r[j]
                quot, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = quot
            row_i[c] = 0
        prev = pivot
        r += 1
    return r


def rref(rows: Sequence[Row]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and its pivot columns (rational pivoting)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if mat[i][c] != 0), -1)
        if pivot_row == -1:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat, pivots


def kernel_basis(rows: Sequence[Row], ncols: int) -> list[Vector]:
    """Basis of the right kernel {x : A x = 0}, one vector per free column."""
    if not rows:
        return [
            tuple(Fraction(1 if j == f else 0) for j in range(ncols))
            for f in range(ncols)
        ]
    assert all(len(row) == ncols for row in rows)
    reduced, pivots = rref(rows)
    pivot_of_col = {c: r for r, c in enumerate(pivots)}
    basis = []
    for free in range(ncols):
        if free in pivot_of_col:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for c, r in pivot_of_col.items():
            vec[c] = -reduced[r][free]
        basis.append(tuple(vec))
    return basis


def solve(rows: Sequence[Row], rhs: Sequence[Fraction | int]) -> Vector | None:
    """One exact solution of A x = rhs, or None when inconsistent."""
    nrows = len(rows)
    assert nrows == len(rhs)
    ncols = len(rows[0]) if nrows else 0
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        solution[c] = reduced[r][ncols]
    return tuple(solution)


def matmul(a: Sequence[Row], b: Sequence[Row]) -> list[list[Fraction]]:
    assert all(len(row) == len(b) for row in a)
    cols = len(b[0]) if b else 0
    return [
        [sum((Fraction(row[k]) * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(cols)]
        for row in a
    ]


def mat_vec(a: Sequence[Row], v: Sequence[Fraction | int]) -> Vector:
    return tuple(
        sum((Fraction(row[k]) * Fraction(v[k]) for k in range(len(v))), Fraction(0))
        for row in a
    )


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def invert(rows: Sequence[Row]) -> list[list[Fraction]] | None:
    """Exact inverse of a square matrix, or None when singular."""
    n = len(rows)
    assert all(len(row) == n for row in rows)
    augmented = [list(row) + identity(n)[i] for i, row in enumerate(rows)]
    reduced, pivots = rref(augmented)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in reduced]


def row_space_basis(rows: Sequence[Row]) -> list[Vector]:
    """Independent spanning rows in reduced echelon form."""
    reduced, pivots = rref(rows) if rows else ([], [])
    return [tuple(reduced[r]) for r in range(len(pivots))]


def in_span(basis: Sequence[Row], vec: Sequence[Fraction | int]) -> bool:
    """Whether vec lies in the row span of basis."""
    if all(x == 0 for x in vec):
        return True
    if not basis:
        return False
    stacked = [list(row) for row in basis]
    return rank(stacked + [list(vec)]) == rank(stacked)
