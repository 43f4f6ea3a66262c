"""Infinitesimal deformations, obstructions and jump families.

A first-order deformation of a codifferential d is an odd degree-2
cocycle delta; trivial directions are coboundaries, so the directions
form the odd part of the second cohomology.  Extending d + t*delta to
second order requires [delta, delta] (an even 3-cochain) to be a
coboundary of an odd 2-cochain; obstruction_vanishes tests exactly that.

A jump family is a curve d_t with d_0 the base codifferential and d_t
equivalent to a fixed target for every t != 0.  JumpFamily stores the
curve as a cochain with coefficients linear in a parameter, together
with sample parameter values and (optionally) witness matrices, so the
claim can be replayed exactly at each sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import linalg
from .cochains import Cochain, bracket, is_codifferential
from .cohomology import coboundary_blocks, representatives
from .transforms import EvenAutomorphism, search_witness, verify_isomorphism


def deformation_directions(d: Cochain) -> list[Cochain]:
    """Cocycle representatives of the odd part of the second cohomology."""
    return representatives(d, 2, parity=1)


def obstruction_cochain(delta1: Cochain, delta2: Cochain) -> Cochain:
    """The even 3-cochain [delta1, delta2] blocking a second-order extension."""
    return bracket(delta1, delta2)


def obstruction_vanishes(d: Cochain, delta1: Cochain, delta2: Cochain | None = None) -> bool:
    """Whether [delta1, delta2] is the coboundary of some odd 2-cochain."""
    if delta2 is None:
        delta2 = delta1
    obstruction = obstruction_cochain(delta1, delta2)
    if obstruction.is_zero():
        return True
    blocks = coboundary_blocks(d, 2)
    vec = [obstruction.terms.get(key, Fraction(0)) for key in blocks.target_even]
    if any(
        obstruction.terms.get(key, Fraction(0)) != 0
        for key in blocks.target_odd
    ):
        return False
    matrix_rows = blocks.from_odd
    if not matrix_rows or not matrix_rows[0]:
        return all(v == 0 for v in vec)
    solution = linalg.solve([list(row) for row in matrix_rows], vec)
    return solution is not None


@dataclass(frozen=True)
class JumpFamily:
    """A one-parameter curve of cochains, affine in the parameter t."""

    base: Cochain
    direction_terms: Cochain

    def at(self, t: Fraction | int) -> Cochain:
        return self.base + self.direction_terms.scale(Fraction(t))


def check_jump(
    family: JumpFamily,
    source: Cochain,
    target: Cochain,
    samples: Sequence[Fraction | int],
    witnesses: Callable[[Fraction], EvenAutomorphism | None] | None = None,
    budget: int = 20000,
) -> dict:
    """Replay a jump claim: d_0 == source, and d_t ~ target at each sample.

    Returns a report dict; "ok" is True when the base point matches, every
    sampled fibre is a codifferential, and every sampled fibre admits a
    verified witness onto the target (supplied or searched).
    """
    report: dict = {"base_matches": family.at(0) == source, "samples": []}
    ok = report["base_matches"]
    for raw in samples:
        t = Fraction(raw)
        entry: dict = {"t": str(t)}
        fibre = family.at(t)
        entry["codifferential"] = is_codifferential(fibre)
        witness = witnesses(t) if witnesses is not None else None
        if witness is None:
            witness = search_witness(fibre, target, budget=budget)
        entry["witness_found"] = witness is not None
        entry["witness_verified"] = (
            witness is not None and verify_isomorphism(witness, fibre, target)
        )
        if witness is not None:
            entry["witness_matrix"] = [[str(x) for x in row] for row in witness.matrix]
        entry["ok"] = entry["codifferential"] and entry["witness_verified"]
        ok = ok and entry["ok"]
        report["samples"].append(entry)
    report["ok"] = ok
    return report
