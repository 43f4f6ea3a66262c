"""Cochain complex of a codifferential and its cohomology bidimensions.

The coboundary is D = [d, -].  Since d is odd, D swaps the parity blocks
of C^n = Hom(S^n V, V), so each degree carries two independent matrices.
h_n = dim ker(D restricted to C^n) - rank(D arriving from C^{n-1}),
computed per parity block with exact rank only (no representative basis is
needed for the bidimension, which keeps the table sweep cheap).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import linalg
from .cochains import Cochain, TermKey, bracket, iter_basis
from .spaces import Bidim, GradedSpace

BracketFn = Callable[[Cochain, Cochain], Cochain]


@dataclass(frozen=True)
class CoboundaryBlocks:
    """Matrices of [d, -]: C^n -> C^{n+1}, one block per source parity.

    Columns follow the lexicographic basis of the source parity block;
    rows follow the basis of the opposite-parity target block (d is odd).
    """

    degree: int
    source_even: list[TermKey]
    source_odd: list[TermKey]
    target_even: list[TermKey]
    target_odd: list[TermKey]
    from_even: list[list[Fraction]]
    from_odd: list[list[Fraction]]


def coboundary_blocks(d: Cochain, degree: int, bracket_fn: BracketFn = bracket) -> CoboundaryBlocks:
    """Build both parity blocks of [d, -] on degree-n cochains."""
    assert d.parity() in (0, 1) and (d.is_zero() or d.parity() == 1)
    space = d.space
    source_even = list(iter_basis(space, degree, 0))
    source_odd = list(iter_basis(space, degree, 1))
    target_even = list(iter_basis(space, degree + 1, 0))
    target_odd = list(iter_basis(space, degree + 1, 1))
    target_even_pos = {key: i for i, key in enumerate(target_even)}
    target_odd_pos = {key: i for i, key in enumerate(target_odd)}

    def build(source: list[TermKey], target_pos: dict[TermKey, int]) -> list[list[Fraction]]:
        matrix = [[Fraction(0)] * len(source) for _ in target_pos]
        for col, (mono, out) in enumerate(source):
            image = bracket_fn(d, Cochain.single(space, mono, out))
            for key, coeff in image.terms.items():
                assert key in target_pos, f"coboundary left the expected block at {key}"
                matrix[target_pos[key]][col] = coeff
        return matrix

    return CoboundaryBlocks(
        degree=degree,
        source_even=source_even,
        source_odd=source_odd,
        target_even=target_even,
        target_odd=target_odd,
        from_even=build(source_even, target_odd_pos),
        from_odd=build(source_odd, target_even_pos),
    )


def cohomology_bidim(d: Cochain, degree: int, bracket_fn: BracketFn = bracket) -> Bidim:
    """h_n as even|odd, exact."""
    blocks = coboundary_blocks(d, degree, bracket_fn)
    return _bidim_from_blocks(d, degree, blocks, bracket_fn)


def _bidim_from_blocks(
    d: Cochain, degree: int, blocks: CoboundaryBlocks, bracket_fn: BracketFn
) -> Bidim:
    ker_even = len(blocks.source_even) - _rank(blocks.from_even)
    ker_odd = len(blocks.source_odd) - _rank(blocks.from_odd)
    if degree == 0:
        im_even = im_odd = 0
    else:
        below = coboundary_blocks(d, degree - 1, bracket_fn)
        im_even = _rank(below.from_odd)
        im_odd = _rank(below.from_even)
    h_even = ker_even - im_even
    h_odd = ker_odd - im_odd
    assert h_even >= 0 and h_odd >= 0
    return Bidim(h_even, h_odd)


def cohomology_row(
    d: Cochain, max_degree: int = 3, bracket_fn: BracketFn = bracket
) -> tuple[Bidim, ...]:
    """(h_0, ..., h_max) computed with each coboundary built once."""
    blocks = [coboundary_blocks(d, n, bracket_fn) for n in range(max_degree + 1)]
    row = []
    for n in range(max_degree + 1):
        ker_even = len(blocks[n].source_even) - _rank(blocks[n].from_even)
        ker_odd = len(blocks[n].source_odd) - _rank(blocks[n].from_odd)
        im_even = _rank(blocks[n - 1].from_odd) if n else 0
        im_odd = _rank(blocks[n - 1].from_even) if n else 0
        assert ker_even >= im_even and ker_odd >= im_odd
        row.append(Bidim(ker_even - im_even, ker_odd - im_odd))
    return tuple(row)


def representatives(
    d: Cochain, degree: int, parity: int, bracket_fn: BracketFn = bracket
) -> list[Cochain]:
    """Cocycle representatives of one parity block of H^degree.

    Kernel vectors of D are scanned in deterministic order and kept exactly
    when they grow the span of (image of the previous D) + (kept so far).
    """
    space = d.space
    blocks = coboundary_blocks(d, degree, bracket_fn)
    source = blocks.source_even if parity == 0 else blocks.source_odd
    matrix = blocks.from_even if parity == 0 else blocks.from_odd
    kernel = linalg.kernel_basis(matrix, len(source))
    if degree == 0:
        image_rows: list[Sequence[Fraction]] = []
    else:
        below = coboundary_blocks(d, degree - 1, bracket_fn)
        incoming = below.from_odd if parity == 0 else below.from_even
        image_rows = _columns(incoming)
    chosen: list[Cochain] = []
    span = [list(row) for row in image_rows]
    current_rank = linalg.rank(span) if span else 0
    for vec in kernel:
        candidate = span + [list(vec)]
        candidate_rank = linalg.rank(candidate)
        if candidate_rank > current_rank:
            span = candidate
            current_rank = candidate_rank
            chosen.append(
                Cochain(space, {key: c for key, c in zip(source, vec) if c})
            )
    return chosen


def coclass_coordinates(
    d: Cochain, cocycle: Cochain, degree: int, bracket_fn: BracketFn = bracket
) -> tuple[Fraction, ...] | None:
    """Coordinates of a cocycle's class against the chosen representatives.

    Returns None when the element is not a cocycle of homogeneous parity;
    the zero tuple means the class is a coboundary.
    """
    parity = cocycle.parity()
    if parity is None:
        return None
    blocks = coboundary_blocks(d, degree, bracket_fn)
    source = blocks.source_even if parity == 0 else blocks.source_odd
    positions = {key: i for i, key in enumerate(source)}
    vec = [Fraction(0)] * len(source)
    for key, coeff in cocycle.terms.items():
        if key not in positions:
            return None
        vec[positions[key]] = coeff
    matrix = blocks.from_even if parity == 0 else blocks.from_odd
    if any(x != 0 for x in linalg.mat_vec(matrix, vec)):
        return None
    if degree == 0:
        image_cols: list[Sequence[Fraction]] = []
    else:
        below = coboundary_blocks(d, degree - 1, bracket_fn)
        incoming = below.from_odd if parity == 0 else below.from_even
        image_cols = _columns(incoming)
    reps = representatives(d, degree, parity, bracket_fn)
    rep_vecs = []
    for rep in reps:
        rv = [Fraction(0)] * len(source)
        for key, coeff in rep.terms.items():
            rv[positions[key]] = coeff
        rep_vecs.append(rv)
    columns = [list(col) for col in image_cols] + rep_vecs
    if not columns:
        return ()
    solution = linalg.solve([list(row) for row in zip(*columns)], vec)
    assert solution is not None, "cocycle must decompose over image + representatives"
    return tuple(solution[len(image_cols):])


def _columns(matrix: list[list[Fraction]]) -> list[tuple[Fraction, ...]]:
    if not matrix:
        return []
    return [tuple(row[c] for row in matrix) for c in range(len(matrix[0]))]


def _rank(matrix: list[list[Fraction]]) -> int:
    if not matrix or not matrix[0]:
        return 0
    return linalg.rank(matrix)
