"""Composition and bracket against the slow reference implementation."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercodiff.cochains import (
    Cochain,
    bracket,
    compose,
    is_codifferential,
    iter_basis,
    random_cochain,
    term_parity,
)
from supercodiff.oracle import bracket_oracle, compose_oracle
from supercodiff.spaces import GradedSpace

SMALL = [GradedSpace.parse(s) for s in ("1|1", "2|1", "1|2")]
MEDIUM = SMALL + [GradedSpace.parse(s) for s in ("2|2", "1|3", "3|1")]


def basis_cochains(space, degree):
    return [Cochain.single(space, mono, out) for mono, out in iter_basis(space, degree)]


@pytest.mark.parametrize("space", SMALL)
@pytest.mark.parametrize("degrees", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_compose_matches_oracle_exhaustively(space, degrees):
    lhs_deg, rhs_deg = degrees
    for phi in basis_cochains(space, lhs_deg):
        for psi in basis_cochains(space, rhs_deg):
            assert compose(phi, psi) == compose_oracle(phi, psi)


def test_compose_insertion_example():
    space = GradedSpace.parse("1|1")
    phi = Cochain.single(space, (1, 2), 1)
    psi = Cochain.single(space, (1, 1), 2)
    result = compose(phi, psi)
    assert result.terms[((1, 1, 1), 1)] == 3


def test_bracket_of_odd_pair_is_symmetric():
    space = GradedSpace.parse("1|2")
    phi = Cochain.single(space, (1, 3), 1, 2)
    psi = Cochain.single(space, (1, 1), 2, -1)
    assert bracket(phi, psi) == bracket(psi, phi)
    assert bracket(phi, psi) == compose(phi, psi) + compose(psi, phi)


def test_square_zero_grid():
    # a*ps(1,2;1) + b*ps(1,1;2) squares to zero exactly when ab = 0.
    space = GradedSpace.parse("1|1")
    for a in range(-2, 3):
        for b in range(-2, 3):
            d = Cochain(space, {((1, 2), 1): Fraction(a), ((1, 1), 2): Fraction(b)})
            assert is_codifferential(d) == (a * b == 0)


def test_known_codifferential_squares_to_zero():
    space = GradedSpace.parse("2|1")
    d = Cochain(
        space,
        {((1, 3), 1): Fraction(1), ((2, 3), 1): Fraction(1), ((2, 3), 2): Fraction(1)},
    )
    assert is_codifferential(d)


def test_zero_cochain_is_codifferential():
    space = GradedSpace.parse("2|1")
    assert is_codifferential(Cochain.zero(space))


def test_parity_of_mixed_cochain_is_none():
    space = GradedSpace.parse("1|1")
    mixed = Cochain(space, {((1, 2), 1): Fraction(1), ((1, 2), 2): Fraction(1)})
    assert mixed.parity() is None


def test_evaluate_distributes_coefficients():
    space = GradedSpace.parse("1|1")
    d = Cochain(space, {((1, 2), 1): Fraction(2), ((1, 2), 2): Fraction(-3)})
    image = d.evaluate((1, 2))
    assert image == {1: Fraction(2), 2: Fraction(-3)}


def test_arithmetic_and_scaling():
    space = GradedSpace.parse("1|1")
    a = Cochain.single(space, (1, 2), 1, 2)
    b = Cochain.single(space, (1, 2), 1, -2)
    assert (a + b).is_zero()
    assert a.scale(Fraction(1, 2)) == Cochain.single(space, (1, 2), 1, 1)
    assert (a - a).is_zero()


CASE_SPACES = [GradedSpace.parse(s) for s in ("1|1", "2|1", "1|2", "2|2")]


def seeded_cases(count, seed=31415):
    rng = random.Random(seed)
    for _ in range(count):
        space = rng.choice(CASE_SPACES)
        deg1 = rng.randint(1, 2)
        deg2 = rng.randint(1, 2)
        par1 = rng.randint(0, 1)
        par2 = rng.randint(0, 1)
        phi = random_cochain(space, deg1, par1, rng, max_terms=3)
        psi = random_cochain(space, deg2, par2, rng, max_terms=3)
        yield space, phi, psi


def test_randomized_compose_agrees_with_oracle():
    for _, phi, psi in seeded_cases(250):
        assert compose(phi, psi) == compose_oracle(phi, psi)


def test_randomized_bracket_antisymmetry():
    # [phi,psi] = -(-1)^{|phi||psi|} [psi,phi] on homogeneous cochains.
    for _, phi, psi in seeded_cases(200, seed=999):
        p1, p2 = phi.parity(), psi.parity()
        lhs = bracket(phi, psi)
        rhs = bracket(psi, phi).scale(-((-1) ** (p1 * p2)))
        assert lhs == rhs


def test_randomized_bracket_jacobi():
    # [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]].
    rng = random.Random(2718)
    for _ in range(120):
        space = rng.choice(CASE_SPACES)
        a = random_cochain(space, rng.randint(1, 2), rng.randint(0, 1), rng, max_terms=2)
        b = random_cochain(space, rng.randint(1, 2), rng.randint(0, 1), rng, max_terms=2)
        c = random_cochain(space, rng.randint(1, 2), rng.randint(0, 1), rng, max_terms=2)
        pa, pb = a.parity(), b.parity()
        lhs = bracket(a, bracket(b, c))
        rhs = bracket(bracket(a, b), c) + bracket(b, bracket(a, c)).scale(
            (-1) ** (pa * pb)
        )
        assert lhs == rhs


def test_compose_parity_is_additive():
    for _, phi, psi in seeded_cases(150, seed=555):
        result = compose(phi, psi)
        if result.is_zero():
            continue
        assert result.parity() == (phi.parity() + psi.parity()) % 2


def test_compose_degree_shift():
    # Inserting a degree-l map into a degree-k map yields degree k+l-1.
    for _, phi, psi in seeded_cases(150, seed=777):
        result = compose(phi, psi)
        if result.is_zero():
            continue
        (k,) = phi.degrees()
        (l,) = psi.degrees()
        assert result.degrees() == [k + l - 1]


@given(st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_bracket_matches_oracle_on_random_pairs(seed):
    rng = random.Random(seed)
    space = rng.choice(CASE_SPACES)
    phi = random_cochain(space, rng.randint(1, 2), rng.randint(0, 1), rng, max_terms=3)
    psi = random_cochain(space, rng.randint(1, 2), rng.randint(0, 1), rng, max_terms=3)
    assert bracket(phi, psi) == bracket_oracle(phi, psi)


def test_iter_basis_parities_partition_the_basis():
    for space in MEDIUM:
        for degree in (1, 2):
            full = list(iter_basis(space, degree))
            even = list(iter_basis(space, degree, parity=0))
            odd = list(iter_basis(space, degree, parity=1))
            assert len(full) == len(even) + len(odd)
            assert set(full) == set(even) | set(odd)
            for mono, out in even:
                assert term_parity(space, mono, out) == 0
