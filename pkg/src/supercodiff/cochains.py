"""Sparse cochains S^k(V) -> V and their coderivation bracket.

A cochain is stored as {(inputs, output): coefficient} with inputs a
supersymmetric monomial.  Each term extends uniquely to a coderivation of
the symmetric coalgebra; composition below is the projection of composed
coderivations, written term-by-term:

    (phi o psi)(M) = sum over sub-multisets S of M, |S| = deg(psi), of
                     eps(M, S) * phi(psi(S) * (M \\ S))

with eps the Koszul sign of unshuffling S to the front.  For a pair of
terms phi = (A -> e_a), psi = (B -> e_b) the sum collapses: a monomial M
contributes iff b in A, M = B + (A - b) as multisets, and the coefficient
picks up the number of ways to select B inside M (binomials over even
multiplicities), the unshuffle sign, and the sign of sorting e_b back into
A - b.  The bracket is the graded commutator; an odd bracket-square zero
element of degree 2 is exactly a codifferential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .spaces import (
    GradedSpace,
    Monomial,
    canonical_positions,
    is_valid_monomial,
    merge_monomials,
    monomial_parity,
    multiplicity,
    prepend_sign,
    remove_one,
    unshuffle_sign,
)

TermKey = tuple[Monomial, int]


def term_parity(space: GradedSpace, mono: Monomial, out: int) -> int:
    """Parity of the map v_mono -> e_out: input parity plus output parity."""
    return (monomial_parity(space, mono) + space.parity(out)) % 2


@dataclass(frozen=True)
class Cochain:
    """A finitely supported map from supersymmetric monomials to vectors."""

    space: GradedSpace
    terms: dict[TermKey, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for (mono, out), coeff in self.terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            assert is_valid_monomial(self.space, mono), f"bad monomial {mono}"
            assert 1 <= out <= self.space.dim, f"bad output index {out}"
            clean[(tuple(mono), out)] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, space: GradedSpace) -> "Cochain":
        return cls(space, {})

    @classmethod
    def single(
        cls, space: GradedSpace, mono: Iterable[int], out: int, coeff: Fraction | int = 1
    ) -> "Cochain":
        return cls(space, {(tuple(mono), out): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted({len(mono) for mono, _ in self.terms})

    def parity(self) -> int | None:
        """Common parity of all terms, or None when mixed (0 for the zero map)."""
        parities = {term_parity(self.space, mono, out) for mono, out in self.terms}
        if not parities:
            return 0
        if len(parities) > 1:
            return None
        return parities.pop()

    def sorted_terms(self) -> list[tuple[Monomial, int, Fraction]]:
        keys = sorted(self.terms, key=lambda k: (len(k[0]), k[0], k[1]))
        return [(mono, out, self.terms[(mono, out)]) for mono, out in keys]

    def evaluate(self, mono: Monomial) -> dict[int, Fraction]:
        """Image of a basis monomial as {output index: coefficient}."""
        out = {}
        for (inputs, j), coeff in self.terms.items():
            if inputs == tuple(mono):
                out[j] = coeff
        return out

    def __add__(self, other: "Cochain") -> "Cochain":
        assert self.space == other.space
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return Cochain(self.space, merged)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def scale(self, factor: Fraction | int) -> "Cochain":
        factor = Fraction(factor)
        return Cochain(self.space, {k: c * factor for k, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, out, coeff in self.sorted_terms():
            body = f"ps({','.join(map(str, mono))};{out})"
            if coeff == 1:
                text = body
            elif coeff == -1:
                text = f"-{body}"
            else:
                text = f"{coeff}*{body}"
            if pieces and not text.startswith("-"):
                pieces.append("+" + text)
            else:
                pieces.append(text)
        return "".join(pieces)


def compose(phi: Cochain, psi: Cochain) -> Cochain:
    """Insertion composition phi o psi (psi feeding one argument of phi)."""
    assert phi.space == psi.space
    space = phi.space
    acc: dict[TermKey, Fraction] = {}
    for (inputs_a, out_a), coeff_a in phi.terms.items():
        for (inputs_b, out_b), coeff_b in psi.terms.items():
            if out_b not in inputs_a:
                continue
            rest = remove_one(inputs_a, out_b)
            glue = prepend_sign(space, out_b, rest)
            if glue == 0:
                continue
            merged = merge_monomials(space, inputs_b, rest)
            if merged is None:
                continue
            ways = 1
            for idx in set(inputs_b):
                ways *= math.comb(multiplicity(merged, idx), multiplicity(inputs_b, idx))
            shuffle = unshuffle_sign(space, merged, canonical_positions(merged, inputs_b))
            key = (merged, out_a)
            acc[key] = acc.get(key, Fraction(0)) + coeff_a * coeff_b * ways * shuffle * glue
    return Cochain(space, acc)


def bracket(phi: Cochain, psi: Cochain) -> Cochain:
    """Graded commutator [phi, psi] = phi o psi - (-1)^(|phi||psi|) psi o phi."""
    p_phi, p_psi = phi.parity(), psi.parity()
    assert p_phi is not None and p_psi is not None, "bracket needs homogeneous parity"
    sign = -1 if (p_phi * p_psi) % 2 else 1
    return compose(phi, psi) - compose(psi, phi).scale(sign)


def is_codifferential(d: Cochain) -> bool:
    """Odd and bracket-square zero (the zero cochain counts)."""
    if d.is_zero():
        return True
    return d.parity() == 1 and bracket(d, d).is_zero()


def random_cochain(
    space: GradedSpace,
    degree: int,
    parity: int,
    rng,
    max_terms: int = 4,
    coeff_pool: tuple[int, ...] = (-3, -2, -1, 1, 2, 3),
) -> Cochain:
    """Deterministic (seeded) homogeneous cochain for randomized suites."""
    from .spaces import enumerate_monomials

    candidates = [
        (mono, out)
        for mono in enumerate_monomials(space, degree)
        for out in space.indices()
        if term_parity(space, mono, out) == parity
    ]
    if not candidates:
        return Cochain.zero(space)
    count = rng.randint(1, min(max_terms, len(candidates)))
    picked = rng.sample(candidates, count)
    return Cochain(
        space,
        {key: Fraction(rng.choice(coeff_pool)) for key in picked},
    )


def iter_basis(space: GradedSpace, degree: int, parity: int | None = None) -> Iterator[TermKey]:
    """Basis (monomial, output) pairs of the degree-k cochain space, lex order."""
    from .spaces import enumerate_monomials

    for mono in enumerate_monomials(space, degree):
        for out in space.indices():
            if parity is None or term_parity(space, mono, out) == parity:
                yield (mono, out)
