"""Even linear automorphisms acting on codifferentials.

g acts by pushforward: (g . d)(M) = g(d(g^{-1} M)), extended multilinearly
with Koszul resorting.  Only parity-preserving (block-diagonal) g are
allowed, so no signs arise from g itself.  Two codifferentials encode the
same structure exactly when some even automorphism carries one to the
other; search_witness hunts for one with a budgeted, deterministic
heuristic (support-matched permutation/diagonal solving first, then
one-entry unipotent corrections found by exact polynomial interpolation),
and verify_isomorphism replays any claimed witness exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Sequence

from . import linalg
from .cochains import Cochain, TermKey
from .cohomology import cohomology_row
from .spaces import GradedSpace, Monomial, multiply_index
from .structure import (
    center,
    derived_series,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    to_superalgebra,
)

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class EvenAutomorphism:
    """Invertible parity-preserving map; column j holds the image of v_j."""

    space: GradedSpace
    matrix: tuple[tuple[Fraction, ...], ...]
    inverse: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_matrix(cls, space: GradedSpace, matrix: Sequence[Sequence[Fraction | int]]) -> "EvenAutomorphism":
        dim = space.dim
        rows = [[Fraction(x) for x in row] for row in matrix]
        assert len(rows) == dim and all(len(row) == dim for row in rows)
        for i in range(dim):
            for j in range(dim):
                if rows[i][j] != 0 and space.parity(i + 1) != space.parity(j + 1):
                    raise ValueError(f"entry ({i + 1},{j + 1}) mixes parities")
        inverse = linalg.invert(rows)
        if inverse is None:
            raise ValueError("matrix is singular")
        return cls(space, tuple(map(tuple, rows)), tuple(map(tuple, inverse)))

    @classmethod
    def identity(cls, space: GradedSpace) -> "EvenAutomorphism":
        return cls.from_matrix(space, linalg.identity(space.dim))

    @classmethod
    def diagonal(cls, space: GradedSpace, entries: Sequence[Fraction | int]) -> "EvenAutomorphism":
        dim = space.dim
        assert len(entries) == dim
        return cls.from_matrix(
            space,
            [[Fraction(entries[i]) if i == j else Fraction(0) for j in range(dim)] for i in range(dim)],
        )

    @classmethod
    def permutation(cls, space: GradedSpace, images: Sequence[int]) -> "EvenAutomorphism":
        """Permutation sending v_j to v_{images[j-1]} (must preserve parity)."""
        dim = space.dim
        matrix = [[Fraction(0)] * dim for _ in range(dim)]
        for j, target in enumerate(images, start=1):
            matrix[target - 1][j - 1] = Fraction(1)
        return cls.from_matrix(space, matrix)

    def compose(self, other: "EvenAutomorphism") -> "EvenAutomorphism":
        """self after other (matrix product)."""
        return EvenAutomorphism.from_matrix(
            self.space, linalg.matmul(self.matrix, other.matrix)
        )


def _push_monomial(
    space: GradedSpace, matrix: Sequence[Sequence[Fraction]], mono: Monomial
) -> dict[Monomial, Fraction]:
    """Multilinear image of a monomial under a column-image matrix."""
    images: dict[Monomial, Fraction] = {(): Fraction(1)}
    for idx in mono:
        nxt: dict[Monomial, Fraction] = {}
        column = [matrix[i][idx - 1] for i in range(space.dim)]
        for partial, coeff in images.items():
            for target_index, weight in enumerate(column, start=1):
                if weight == 0:
                    continue
                sign, merged = multiply_index(space, partial, target_index)
                if sign == 0:
                    continue
                key = merged
                nxt[key] = nxt.get(key, Fraction(0)) + coeff * weight * sign
        images = {k: v for k, v in nxt.items() if v != 0}
        if not images:
            break
    return images


def apply(g: EvenAutomorphism, d: Cochain) -> Cochain:
    """Pushforward g . d, computed degree by degree on basis monomials."""
    assert g.space == d.space
    space = d.space
    from .spaces import enumerate_monomials

    result: dict[TermKey, Fraction] = {}
    for degree in d.degrees():
        for mono in enumerate_monomials(space, degree):
            pulled = _push_monomial(space, g.inverse, mono)
            out_vec = [Fraction(0)] * space.dim
            for pre_mono, coeff in pulled.items():
                for out, value in d.evaluate(pre_mono).items():
                    out_vec[out - 1] += coeff * value
            for i in range(space.dim):
                if out_vec[i] == 0:
                    continue
                for target in range(space.dim):
                    weight = g.matrix[target][i]
                    if weight != 0:
                        key = (mono, target + 1)
                        result[key] = result.get(key, Fraction(0)) + weight * out_vec[i]
    return Cochain(space, result)


def verify_isomorphism(g: EvenAutomorphism, source: Cochain, target: Cochain) -> bool:
    """Exact check that g carries source to target."""
    return apply(g, source) == target


@dataclass(frozen=True)
class InvariantRecord:
    cohomology: tuple
    center_bidim: tuple
    derived: tuple
    lower_central: tuple
    solvable: bool
    nilpotent: bool


def invariants(d: Cochain) -> InvariantRecord:
    algebra = to_superalgebra(d)
    return InvariantRecord(
        cohomology=tuple(cohomology_row(d)),
        center_bidim=center(algebra)[1],
        derived=tuple(s.bidim for s in derived_series(algebra)),
        lower_central=tuple(s.bidim for s in lower_central_series(algebra)),
        solvable=is_solvable(algebra),
        nilpotent=is_nilpotent(algebra),
    )


def distinguish(d1: Cochain, d2: Cochain) -> str | None:
    """Name of the first invariant separating the two, or None."""
    left, right = invariants(d1), invariants(d2)
    for name in ("cohomology", "center_bidim", "derived", "lower_central", "solvable", "nilpotent"):
        if getattr(left, name) != getattr(right, name):
            return name
    return None


BASE_SCALARS = tuple(
    Fraction(n, d)
    for n, d in (
        (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2),
        (3, 1), (-3, 1), (1, 3), (-1, 3), (3, 2), (-3, 2), (2, 3), (-2, 3),
    )
)


def _parity_permutations(space: GradedSpace) -> Iterator[tuple[int, ...]]:
    evens = list(range(1, space.even + 1))
    odds = list(range(space.even + 1, space.dim + 1))
    for even_perm in permutations(evens):
        for odd_perm in permutations(odds):
            yield tuple(even_perm) + tuple(odd_perm)


def _scalar_pool(d1: Cochain, d2: Cochain, cap: int = 40) -> list[Fraction]:
    pool = list(BASE_SCALARS)
    coeffs1 = sorted({abs(c) for c in d1.terms.values()} | {Fraction(1)})
    coeffs2 = sorted({abs(c) for c in d2.terms.values()} | {Fraction(1)})
    for a in coeffs1:
        for b in coeffs2:
            for ratio in (b / a, a / b):
                for signed in (ratio, -ratio):
                    if signed not in pool:
                        pool.append(signed)
    return pool[:cap]


def _solve_diagonal(
    space: GradedSpace, source: Cochain, target: Cochain, pool: Sequence[Fraction]
) -> Iterator[list[Fraction]]:
    """Diagonal scalings a with (diag(a) . source) = target, by propagation.

    Each matched term yields one multiplicative equation
    a_out / prod(a_in) = target_coeff / source_coeff.  Equations with one
    undetermined unknown are solved (rational roots only); leftover free
    entries range over the pool.
    """
    if set(source.terms) != set(target.terms):
        return
    equations = []
    for key, coeff in source.terms.items():
        mono, out = key
        exponents = [0] * space.dim
        exponents[out - 1] += 1
        for idx in mono:
            exponents[idx - 1] -= 1
        equations.append((exponents, target.terms[key] / coeff))
    assignment: list[Fraction | None] = [None] * space.dim
    pending = list(equations)
    progress = True
    while progress:
        progress = False
        for exponents, ratio in pending:
            unknowns = [i for i in range(space.dim) if exponents[i] != 0 and assignment[i] is None]
            if len(unknowns) != 1:
                continue
            i = unknowns[0]
            known = Fraction(1)
            for j in range(space.dim):
                if j != i and exponents[j] != 0:
                    known *= assignment[j] ** exponents[j]
            residual = ratio / known
            power = exponents[i]
            value = _rational_root(residual, power)
            if value is None:
                return
            assignment[i] = value
            progress = True
    free = [i for i in range(space.dim) if assignment[i] is None]
    options = pool if len(free) <= 2 else pool[:8]
    from itertools import product

    for combo in product(options, repeat=len(free)):
        candidate = list(assignment)
        for i, value in zip(free, combo):
            candidate[i] = value
        if any(v is None or v == 0 for v in candidate):
            continue
        yield [Fraction(v) for v in candidate]


def _rational_root(value: Fraction, power: int) -> Fraction | None:
    """x with x**power == value, exact, or None."""
    if power < 0:
        value, power = 1 / value, -power
    if power == 1:
        return value
    if value == 0:
        return None
    sign = 1
    if value < 0:
        if power % 2 == 0:
            return None
        sign, value = -1, -value
    num = _iroot(value.numerator, power)
    den = _iroot(value.denominator, power)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def _iroot(n: int, k: int) -> int | None:
    root = round(n ** (1.0 / k))
    for candidate in (root - 1, root, root + 1):
        if candidate >= 0 and candidate**k == n:
            return candidate
    return None


def _offdiag_positions(space: GradedSpace) -> list[tuple[int, int]]:
    positions = []
    for i in range(space.dim):
        for j in range(space.dim):
            if i != j and space.parity(i + 1) == space.parity(j + 1):
                positions.append((i, j))
    return positions


def _interpolate_root(samples: list[tuple[Fraction, list[Fraction]]]) -> list[Fraction]:
    """Common rational roots of component polynomials given by samples.

    Each component is a polynomial of degree < len(samples) in t; Lagrange
    interpolation recovers its coefficients exactly, then candidate roots
    of the first nonzero component are tested against all components.
    """
    points = [t for t, _ in samples]
    ncomp = len(samples[0][1])
    polys = []
    for c in range(ncomp):
        values = [vec[c] for _, vec in samples]
        polys.append(_lagrange(points, values))
    lead = next((p for p in polys if any(p)), None)
    if lead is None:
        return [Fraction(0)]
    candidates = _poly_rational_roots(lead)
    return [t for t in candidates if all(_poly_eval(p, t) == 0 for p in polys)]


def _lagrange(points: list[Fraction], values: list[Fraction]) -> list[Fraction]:
    degree = len(points)
    coeffs = [Fraction(0)] * degree
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = _poly_mul(basis, [-xj, Fraction(1)])
            denom *= xi - xj
        scale = yi / denom
        for k in range(len(basis)):
            coeffs[k] += basis[k] * scale
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_eval(poly: list[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for coeff in reversed(poly):
        acc = acc * t + coeff
    return acc


def _poly_rational_roots(poly: list[Fraction]) -> list[Fraction]:
    scale = 1
    for c in poly:
        scale = scale * c.denominator // __import__("math").gcd(scale, c.denominator)
    ints = [int(c * scale) for c in poly]
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) <= 1:
        return []
    if len(ints) == 2:
        return [Fraction(-ints[0], ints[1])]
    roots = []
    lead, const = ints[-1], ints[0]
    if const == 0:
        roots.append(Fraction(0))
        reduced = ints[1:]
        return roots + [r for r in _poly_rational_roots([Fraction(c) for c in reduced]) if r not in roots]
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for candidate in (Fraction(p, q), Fraction(-p, q)):
                if candidate not in roots and _poly_eval([Fraction(c) for c in ints], candidate) == 0:
                    roots.append(candidate)
    return roots


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def search_witness(
    d1: Cochain, d2: Cochain, budget: int = 20000
) -> EvenAutomorphism | None:
    """Budgeted deterministic search for g with g . d1 == d2.

    Stage one tries parity-preserving permutations with solved diagonal
    scalings; stage two follows each near miss with single-entry unipotent
    corrections whose exact residual roots come from polynomial
    interpolation.  Returns a verified witness or None (which is not a
    proof of inequivalence).
    """
    assert d1.space == d2.space
    space = d1.space
    if d1 == d2:
        return EvenAutomorphism.identity(space)
    pool = _scalar_pool(d1, d2)
    spent = 0
    bases: list[EvenAutomorphism] = [EvenAutomorphism.identity(space)]
    for images in _parity_permutations(space):
        perm = EvenAutomorphism.permutation(space, images)
        permuted = apply(perm, d1)
        spent += 1
        for diag in _solve_diagonal(space, permuted, d2, pool):
            spent += 1
            candidate = EvenAutomorphism.diagonal(space, diag).compose(perm)
            if verify_isomorphism(candidate, d1, d2):
                return candidate
            if spent > budget:
                return None
        if spent > budget:
            return None
        bases.append(perm)
    refine_budget = max(60, budget // 20)
    for base in bases:
        witness = _unipotent_refine(base, d1, d2, refine_budget)
        if witness is not None:
            return witness
        spent += refine_budget
        if spent > budget:
            return None
    return None


def _unipotent_refine(
    base: EvenAutomorphism, d1: Cochain, d2: Cochain, budget: int
) -> EvenAutomorphism | None:
    """Greedy sweeps of g <- g (I + t E_ij) with exact per-entry root solving."""
    space = d1.space
    current = base
    residual_size = _residual_size(current, d1, d2)
    if residual_size == 0:
        return current
    positions = _offdiag_positions(space)
    spent = 0
    for _ in range(4):
        improved = False
        for i, j in positions:
            samples = []
            for k in range(6):
                t = Fraction(k)
                g = _with_step(current, i, j, t)
                samples.append((t, _residual_vector(g, d1, d2)))
                spent += 1
            for root in _interpolate_root(samples):
                g = _with_step(current, i, j, root)
                spent += 1
                size = _residual_size(g, d1, d2)
                if size == 0:
                    return g
                if size < residual_size:
                    current, residual_size, improved = g, size, True
                    break
            if spent > budget:
                return None
        if not improved:
            break
    return None


def _with_step(base: EvenAutomorphism, i: int, j: int, t: Fraction) -> EvenAutomorphism:
    """base composed with I + t E_ij on the right (column j += t * column i).

    The determinant is unchanged, so the family never degenerates, and every
    entry of both the matrix and its inverse is affine in t; residual
    components of a degree-2 cochain are then cubics in t, which six sample
    points pin down exactly.
    """
    if t == 0:
        return base
    matrix = [list(row) for row in base.matrix]
    for r in range(len(matrix)):
        matrix[r][j] += t * matrix[r][i]
    return EvenAutomorphism.from_matrix(base.space, matrix)


def _residual_cochain(g: EvenAutomorphism, d1: Cochain, d2: Cochain) -> Cochain:
    return apply(g, d1) - d2


def _residual_size(g: EvenAutomorphism, d1: Cochain, d2: Cochain) -> int:
    return len(_residual_cochain(g, d1, d2).terms)


def _residual_vector(g: EvenAutomorphism, d1: Cochain, d2: Cochain) -> list[Fraction]:
    residual = _residual_cochain(g, d1, d2)
    space = d1.space
    from .cochains import iter_basis

    degrees = sorted(set(d1.degrees()) | set(d2.degrees()))
    basis = [key for degree in degrees for key in iter_basis(space, degree)]
    return [residual.terms.get(key, Fraction(0)) for key in basis]
