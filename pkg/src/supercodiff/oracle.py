"""Brute-force positional composition, kept independent of the fast path.

This route expands a monomial into every distinct ordered arrangement,
applies the inner map to the leading block positionally (sorting the block
back to canonical order with explicit adjacent-transposition signs), glues
the output in front of the sorted remainder, and feeds the result to the
outer map.  Summing over arrangements overcounts each sub-multiset split
by l!(k-1)! / prod(multiplicities!), so the total is rescaled by
prod(mult!) / (l! (k-1)!).  No unshuffle-crossing formulas and no binomial
selection factors appear here, which is the point: agreement with
cochains.compose checks both sign conventions against each other.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations

from .cochains import Cochain
from .spaces import GradedSpace, Monomial, enumerate_monomials


def _bubble_sort_sign(space: GradedSpace, seq: tuple[int, ...]) -> tuple[int, Monomial | None]:
    """Sort by adjacent swaps; -1 per odd-odd swap; None on an odd repeat."""
    items = list(seq)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(items) - 1):
            if items[i] > items[i + 1]:
                if space.parity(items[i]) == 1 and space.parity(items[i + 1]) == 1:
                    sign = -sign
                items[i], items[i + 1] = items[i + 1], items[i]
                changed = True
    for i in range(len(items) - 1):
        if items[i] == items[i + 1] and space.parity(items[i]) == 1:
            return 0, None
    return sign, tuple(items)


def compose_oracle(phi: Cochain, psi: Cochain) -> Cochain:
    """Reference insertion composition via ordered arrangements."""
    assert phi.space == psi.space
    space = phi.space
    acc: dict[tuple[Monomial, int], Fraction] = {}
    degrees_phi = phi.degrees()
    degrees_psi = psi.degrees()
    for deg_phi in degrees_phi:
        if deg_phi == 0:
            continue
        for deg_psi in degrees_psi:
            total_degree = deg_phi + deg_psi - 1
            for mono in enumerate_monomials(space, total_degree):
                image = _compose_on_monomial(phi, psi, mono, deg_phi, deg_psi)
                for out, coeff in image.items():
                    if coeff:
                        key = (mono, out)
                        acc[key] = acc.get(key, Fraction(0)) + coeff
    return Cochain(space, acc)


def _compose_on_monomial(
    phi: Cochain, psi: Cochain, mono: Monomial, deg_phi: int, deg_psi: int
) -> dict[int, Fraction]:
    space = phi.space
    total: dict[int, Fraction] = {}
    arrangements = set(permutations(mono))
    for arrangement in arrangements:
        eps, sorted_back = _bubble_sort_sign(space, arrangement)
        assert sorted_back == mono and eps != 0
        block, rest = arrangement[:deg_psi], arrangement[deg_psi:]
        block_sign, block_mono = _bubble_sort_sign(space, block)
        if block_sign == 0:
            continue
        rest_sign, rest_mono = _bubble_sort_sign(space, rest)
        if rest_sign == 0:
            continue
        for (inputs_b, out_b), coeff_b in psi.terms.items():
            if len(inputs_b) != deg_psi or inputs_b != block_mono:
                continue
            glue_sign, glued = _bubble_sort_sign(space, (out_b,) + rest_mono)
            if glue_sign == 0:
                continue
            for (inputs_a, out_a), coeff_a in phi.terms.items():
                if len(inputs_a) != deg_phi or inputs_a != glued:
                    continue
                contribution = (
                    coeff_a * coeff_b * eps * block_sign * rest_sign * glue_sign
                )
                total[out_a] = total.get(out_a, Fraction(0)) + contribution
    if not total:
        return {}
    mult_correction = Fraction(1)
    for idx in set(mono):
        mult_correction *= math.factorial(mono.count(idx))
    scale = mult_correction / (
        math.factorial(deg_psi) * math.factorial(deg_phi - 1)
    )
    return {out: coeff * scale for out, coeff in total.items()}


def bracket_oracle(phi: Cochain, psi: Cochain) -> Cochain:
    """Graded commutator computed entirely on the positional route."""
    p_phi, p_psi = phi.parity(), psi.parity()
    assert p_phi is not None and p_psi is not None
    sign = -1 if (p_phi * p_psi) % 2 else 1
    return compose_oracle(phi, psi) - compose_oracle(psi, phi).scale(sign)
