"""Superalgebra structure behind a degree-2 codifferential.

A codifferential d on V encodes a bracket on the parity reversion L with
basis x_i mirroring v_i, each x_i of the opposite parity:

    l(x_i, x_j) = (-1)^{|x_i|} d(v_i v_j)    (pulled back along the reversion)

Gradings: every subspace computed here (center, series terms) is graded,
and bidimensions are reported in the codifferential-side grading (v_i for
i <= m even), the one the cohomology tables use.  Flip with Bidim reversal
for the algebra-side reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cochains import Cochain
from .spaces import Bidim, GradedSpace

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class SuperAlgebra:
    """Structure constants table: table[i-1][j-1] = coordinates of l(x_i, x_j)."""

    space: GradedSpace
    table: tuple[tuple[Vector, ...], ...]

    @property
    def dim(self) -> int:
        return self.space.dim

    def algebra_parity(self, index: int) -> int:
        """Parity of x_index in L (opposite of v_index)."""
        return 1 - self.space.parity(index)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.table[i - 1][j - 1]

    def bracket(self, a: Vector, b: Vector) -> Vector:
        """Bilinear extension over scalar coordinates."""
        out = [Fraction(0)] * self.dim
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if not cb:
                    continue
                for k, ck in enumerate(self.table[i][j]):
                    if ck:
                        out[k] += ca * cb * ck
        return tuple(out)


def to_superalgebra(d: Cochain) -> SuperAlgebra:
    """Structure constants of the bracket encoded by a degree-2 codifferential."""
    assert d.degrees() in ([], [2]), "structure conversion expects a degree-2 codifferential"
    space = d.space
    dim = space.dim
    rows = []
    for i in space.indices():
        row = []
        for j in space.indices():
            vec = [Fraction(0)] * dim
            if not (i == j and space.parity(i) == 1):
                if i <= j:
                    mono, sort_sign = (i, j), 1
                else:
                    both_odd = space.parity(i) == 1 and space.parity(j) == 1
                    mono, sort_sign = (j, i), (-1 if both_odd else 1)
                reversion_sign = -1 if space.parity(i) == 0 else 1
                for out, coeff in d.evaluate(mono).items():
                    vec[out - 1] = coeff * sort_sign * reversion_sign
            row.append(tuple(vec))
        rows.append(tuple(row))
    return SuperAlgebra(space, tuple(rows))


def center(algebra: SuperAlgebra) -> tuple[list[Vector], Bidim]:
    """Elements commuting with everything; bidim in codifferential grading."""
    basis: list[Vector] = []
    dims = []
    for parity in (0, 1):
        indices = [i for i in algebra.space.indices() if algebra.space.parity(i) == parity]
        if not indices:
            dims.append(0)
            continue
        rows = []
        for j in algebra.space.indices():
            for k in range(algebra.dim):
                rows.append([algebra.table[i - 1][j - 1][k] for i in indices])
        kernel = linalg.kernel_basis(rows, len(indices))
        dims.append(len(kernel))
        for vec in kernel:
            full = [Fraction(0)] * algebra.dim
            for pos, i in enumerate(indices):
                full[i - 1] = vec[pos]
            basis.append(tuple(full))
    return basis, Bidim(dims[0], dims[1])


@dataclass(frozen=True)
class GradedSubspace:
    """Graded subspace, one reduced row basis per codifferential parity."""

    even_rows: tuple[Vector, ...]
    odd_rows: tuple[Vector, ...]

    @property
    def bidim(self) -> Bidim:
        return Bidim(len(self.even_rows), len(self.odd_rows))

    def vectors(self) -> list[Vector]:
        return list(self.even_rows) + list(self.odd_rows)

    def is_zero(self) -> bool:
        return not self.even_rows and not self.odd_rows


def full_space(algebra: SuperAlgebra) -> GradedSubspace:
    even, odd = [], []
    for i in algebra.space.indices():
        vec = tuple(
            Fraction(1 if j == i else 0) for j in algebra.space.indices()
        )
        (even if algebra.space.parity(i) == 0 else odd).append(vec)
    return GradedSubspace(tuple(even), tuple(odd))


def bracket_span(algebra: SuperAlgebra, left: GradedSubspace, right: GradedSubspace) -> GradedSubspace:
    """Span of all brackets between the two subspaces, split by parity."""
    products: dict[int, list[Vector]] = {0: [], 1: []}
    for a_parity, a_rows in ((0, left.even_rows), (1, left.odd_rows)):
        for b_parity, b_rows in ((0, right.even_rows), (1, right.odd_rows)):
            out_parity = (a_parity + b_parity + 1) % 2
            for a in a_rows:
                for b in b_rows:
                    vec = algebra.bracket(a, b)
                    if any(vec):
                        products[out_parity].append(vec)
    return GradedSubspace(
        tuple(linalg.row_space_basis(products[0])) if products[0] else (),
        tuple(linalg.row_space_basis(products[1])) if products[1] else (),
    )


def derived_series(algebra: SuperAlgebra, max_steps: int = 12) -> list[GradedSubspace]:
    """L, [L,L], [[L,L],[L,L]], ... until stable or zero."""
    chain = [full_space(algebra)]
    for _ in range(max_steps):
        nxt = bracket_span(algebra, chain[-1], chain[-1])
        chain.append(nxt)
        if nxt.is_zero() or nxt.bidim == chain[-2].bidim:
            break
    return chain

def lower_central_series(algebra: SuperAlgebra, max_steps: int = 12) -> list[GradedSubspace]:
    """L, [L,L], [L,[L,L]], ... until stable or zero."""
    whole = full_space(algebra)
    chain = [whole]
    for _ in range(max_steps):
        nxt = bracket_span(algebra, whole, chain[-1])
        chain.append(nxt)
        if nxt.is_zero() or nxt.bidim == chain[-2].bidim:
            break
    return chain


def is_solvable(algebra: SuperAlgebra) -> bool:
    return derived_series(algebra)[-1].is_zero()


def is_nilpotent(algebra: SuperAlgebra) -> bool:
    return lower_central_series(algebra)[-1].is_zero()
