"""Extension splitting along a middle subspace and its compatibility laws."""

import random
from fractions import Fraction

import pytest

from supercodiff.cochains import Cochain, bracket, is_codifferential
from supercodiff.extensions import (
    beta_shift,
    compatibility_conditions,
    conditions_hold,
    pieces_square_to_zero,
    split,
)
from supercodiff.literals import instantiate, parse_cochain
from supercodiff.spaces import GradedSpace, enumerate_monomials
from supercodiff.cochains import term_parity


def cochain(text, space_text, **bindings):
    space = GradedSpace.parse(space_text)
    frac = {k: Fraction(v) for k, v in bindings.items()}
    return instantiate(parse_cochain(text), space, frac)


def test_split_classifies_blocks():
    d = cochain("4*ps(1,1;2)+ps(1,3;1)-2*ps(2,3;2)", "1|2")
    ext = split(d, {1, 2})
    assert ext is not None
    assert ext.mu == cochain("4*ps(1,1;2)", "1|2")
    assert ext.lam == cochain("ps(1,3;1)-2*ps(2,3;2)", "1|2")
    assert ext.delta.is_zero() and ext.psi.is_zero()
    assert ext.total() == d


def test_split_rejects_terms_leaving_the_middle():
    # Output outside the middle from inputs inside it is not extension-shaped.
    d = cochain("ps(1,2;3)", "2|1")
    assert split(d, {1, 2}) is None


def test_split_with_all_four_blocks():
    d = cochain("8*ps(1,1;2)+ps(1,4;1)-2*ps(2,4;2)-2*ps(3,4;3)", "1|3")
    ext = split(d, {1, 2})
    assert ext is not None
    assert ext.mu == cochain("8*ps(1,1;2)", "1|3")
    assert ext.lam == cochain("ps(1,4;1)-2*ps(2,4;2)", "1|3")
    assert ext.delta == cochain("-2*ps(3,4;3)", "1|3")
    assert ext.psi.is_zero()


def test_conditions_hold_for_codifferential_split():
    d = cochain("8*ps(1,1;2)+ps(1,4;1)-2*ps(2,4;2)-2*ps(3,4;3)", "1|3")
    ext = split(d, {1, 2})
    assert pieces_square_to_zero(ext)
    assert conditions_hold(ext)
    conditions = compatibility_conditions(ext)
    assert set(conditions) == {"mu_lam", "maurer_cartan", "tail"}
    assert all(value.is_zero() for value in conditions.values())


def block_of(space, middle, mono, out):
    inside = sum(1 for i in mono if i in middle)
    out_in = out in middle
    if inside == 2 and out_in:
        return "mu"
    if inside == 0 and not out_in:
        return "delta"
    if inside == 1 and out_in:
        return "lam"
    if inside == 0 and out_in:
        return "psi"
    return None


def random_extension_shaped(space, middle, rng):
    """Random odd degree-2 cochain supported on the four extension blocks."""
    keys = [
        (mono, out)
        for mono in enumerate_monomials(space, 2)
        for out in space.indices()
        if term_parity(space, mono, out) == 1
        and block_of(space, middle, mono, out) is not None
    ]
    count = rng.randint(1, min(5, len(keys)))
    picked = rng.sample(keys, count)
    return Cochain(space, {key: Fraction(rng.choice([-2, -1, 1, 2])) for key in picked})


@pytest.mark.parametrize("space_text,middle", [("1|2", {1, 2}), ("1|3", {1, 2}), ("2|2", {1, 3})])
def test_codifferential_iff_pieces_and_conditions(space_text, middle):
    # For extension-shaped d: [d,d] = 0 exactly when the pieces square to
    # zero and the three mixed compatibility conditions hold.
    space = GradedSpace.parse(space_text)
    rng = random.Random(hash(space_text) & 0xFFFF)
    for _ in range(120):
        d = random_extension_shaped(space, middle, rng)
        ext = split(d, middle)
        assert ext is not None
        composite = pieces_square_to_zero(ext) and conditions_hold(ext)
        assert is_codifferential(d) == composite


def test_beta_shift_moves_lambda_only():
    d = cochain("8*ps(1,1;2)+ps(1,4;1)-2*ps(2,4;2)-2*ps(3,4;3)", "1|3")
    ext = split(d, {1, 2})
    beta = Cochain.single(d.space, (4,), 2, Fraction(3))
    shifted = beta_shift(ext, beta)
    assert shifted.mu == ext.mu
    assert shifted.delta == ext.delta
    assert shifted.psi == ext.psi
    assert shifted.lam == ext.lam + bracket(ext.mu, beta)


def test_beta_shift_preserves_first_condition():
    # [mu, lam + [mu, beta]] = [mu, lam] because mu squares to zero.
    d = cochain("8*ps(1,1;2)+ps(1,4;1)-2*ps(2,4;2)-2*ps(3,4;3)", "1|3")
    ext = split(d, {1, 2})
    for coeff in (1, -2, Fraction(1, 2)):
        beta = Cochain.single(d.space, (3,), 2, Fraction(coeff))
        shifted = beta_shift(ext, beta)
        assert compatibility_conditions(shifted)["mu_lam"].is_zero()


def test_beta_shift_rejects_wrong_shape():
    d = cochain("8*ps(1,1;2)+ps(1,4;1)-2*ps(2,4;2)-2*ps(3,4;3)", "1|3")
    ext = split(d, {1, 2})
    inside_only = Cochain.single(d.space, (2,), 2)  # M -> M, not N -> M
    with pytest.raises(AssertionError):
        beta_shift(ext, inside_only)
