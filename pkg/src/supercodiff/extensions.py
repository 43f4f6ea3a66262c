"""Splitting a degree-2 codifferential along a direct-sum decomposition.

Fix a subset M of basis indices (the rest is N).  A degree-2 cochain d is
extension-shaped when no term maps into N except the terms supported
entirely on N; it then splits as

    d = mu + delta + lam + psi

with mu the MM -> M part, delta the NN -> N part, lam the MN -> M part
and psi the NN -> M part.  Provided mu and delta square to zero, [d,d]=0
is equivalent to three bracket conditions on the remaining pieces, each
living in its own input block:

    [mu, lam] = 0                                    (MMN -> M)
    [delta, lam] + (1/2)[lam, lam] + [mu, psi] = 0   (MNN -> M)
    [delta + lam, psi] = 0                           (NNN -> M)

A degree-1 even map beta: N -> M replaces lam by lam + [mu, beta] without
changing the isomorphism class; beta_shift applies that move.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cochains import Cochain, TermKey, bracket


@dataclass(frozen=True)
class ExtensionSplit:
    middle: frozenset[int]
    mu: Cochain
    delta: Cochain
    lam: Cochain
    psi: Cochain

    @property
    def space(self):
        return self.mu.space

    def total(self) -> Cochain:
        return self.mu + self.delta + self.lam + self.psi


def split(d: Cochain, middle: frozenset[int] | set[int]) -> ExtensionSplit | None:
    """Split d along M = middle; None when d is not extension-shaped."""
    middle = frozenset(middle)
    space = d.space
    assert all(1 <= i <= space.dim for i in middle)
    parts: dict[str, dict[TermKey, Fraction]] = {"mu": {}, "delta": {}, "lam": {}, "psi": {}}
    for key, coeff in d.terms.items():
        mono, out = key
        if len(mono) != 2:
            return None
        inside = sum(1 for i in mono if i in middle)
        out_inside = out in middle
        if inside == 2 and out_inside:
            name = "mu"
        elif inside == 0 and not out_inside:
            name = "delta"
        elif inside == 1 and out_inside:
            name = "lam"
        elif inside == 0 and out_inside:
            name = "psi"
        else:
            return None
        parts[name][key] = coeff
    return ExtensionSplit(
        middle=middle,
        mu=Cochain(space, parts["mu"]),
        delta=Cochain(space, parts["delta"]),
        lam=Cochain(space, parts["lam"]),
        psi=Cochain(space, parts["psi"]),
    )


def compatibility_conditions(ext: ExtensionSplit) -> dict[str, Cochain]:
    """The three obstruction brackets; the split is consistent iff all vanish."""
    half = Fraction(1, 2)
    return {
        "mu_lam": bracket(ext.mu, ext.lam),
        "maurer_cartan": bracket(ext.delta, ext.lam)
        + bracket(ext.lam, ext.lam).scale(half)
        + bracket(ext.mu, ext.psi),
        "tail": bracket(ext.delta + ext.lam, ext.psi),
    }


def conditions_hold(ext: ExtensionSplit) -> bool:
    return all(c.is_zero() for c in compatibility_conditions(ext).values())


def pieces_square_to_zero(ext: ExtensionSplit) -> bool:
    return bracket(ext.mu, ext.mu).is_zero() and bracket(ext.delta, ext.delta).is_zero()


def beta_shift(ext: ExtensionSplit, beta: Cochain) -> ExtensionSplit:
    """Replace lam by lam + [mu, beta] for an even degree-1 map beta: N -> M."""
    space = ext.space
    assert beta.space == space
    for (mono, out), _ in beta.terms.items():
        assert len(mono) == 1
        assert mono[0] not in ext.middle and out in ext.middle
    assert beta.is_zero() or beta.parity() == 0
    shifted = ext.lam + bracket(ext.mu, beta)
    return ExtensionSplit(ext.middle, ext.mu, ext.delta, shifted, ext.psi)
