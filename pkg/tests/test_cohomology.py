"""Cohomology bidimensions: anchors, complex property, representatives."""

import random
from fractions import Fraction

import pytest

from supercodiff.cochains import Cochain, bracket, is_codifferential
from supercodiff.cohomology import (
    coboundary_blocks,
    coclass_coordinates,
    cohomology_bidim,
    cohomology_row,
    representatives,
)
from supercodiff.linalg import matmul
from supercodiff.literals import instantiate, parse_cochain
from supercodiff.oracle import bracket_oracle
from supercodiff.spaces import Bidim, GradedSpace


def cochain(text, space_text, **bindings):
    space = GradedSpace.parse(space_text)
    frac = {k: Fraction(v) for k, v in bindings.items()}
    return instantiate(parse_cochain(text), space, frac)


def row_of(text, space_text, **bindings):
    return cohomology_row(cochain(text, space_text, **bindings), 3)


def parse_row(text):
    return tuple(Bidim.parse(h) for h in text.split())


def test_smallest_space_anchor_rows():
    assert row_of("ps(1,2;1)", "1|1") == parse_row("0|0 0|0 0|0 0|0")
    assert row_of("ps(1,1;2)", "1|1") == parse_row("0|1 1|0 0|0 0|0")


def test_rigid_row_with_full_support():
    assert row_of("4*ps(1,1;2)+ps(1,3;1)-2*ps(2,3;2)", "1|2") == parse_row(
        "0|0 0|0 0|0 0|0"
    )


def test_family_rows_depend_on_the_point():
    expr = "p*ps(1,3;1)+q*ps(2,3;2)"
    assert row_of(expr, "1|2", p=5, q=7) == parse_row("0|0 1|0 0|1 0|0")
    assert row_of(expr, "1|2", p=1, q=-2) == parse_row("0|0 1|0 0|2 1|0")
    assert row_of(expr, "1|2", p=1, q=0) == parse_row("0|1 2|0 0|1 0|0")


def test_zero_codifferential_cohomology_is_whole_cochain_space():
    # With d = 0 every cochain is a cocycle and none is a coboundary.
    assert row_of("0*ps(1,3;1)", "1|2") == parse_row("1|2 5|4 6|6 6|6")
    assert row_of("0*ps(1,4;1)", "1|3") == parse_row("1|3 10|6 13|15 16|16")


def test_high_degree_row_values():
    assert row_of("ps(1,4;1)+ps(2,4;2)+ps(3,4;3)", "3|1") == parse_row(
        "0|0 8|0 0|8 0|0"
    )


@pytest.mark.parametrize(
    "expr,space_text",
    [
        ("4*ps(1,1;2)", "1|2"),
        ("ps(1,3;1)+ps(2,3;2)", "2|1"),
        ("8*ps(1,1;2)+ps(1,4;1)-2*ps(2,4;2)-2*ps(3,4;3)", "1|3"),
        ("4*ps(1,1;3)+ps(1,4;1)+ps(2,4;2)-2*ps(3,4;3)", "2|2"),
    ],
)
def test_coboundary_squares_to_zero(expr, space_text):
    d = cochain(expr, space_text)
    assert is_codifferential(d)
    for n in range(3):
        lower = coboundary_blocks(d, n)
        upper = coboundary_blocks(d, n + 1)
        # D is parity-swapping, so D.D chains the two blocks.
        if lower.from_even and upper.from_odd:
            product = matmul(upper.from_odd, lower.from_even)
            assert all(x == 0 for row in product for x in row)
        if lower.from_odd and upper.from_even:
            product = matmul(upper.from_even, lower.from_odd)
            assert all(x == 0 for row in product for x in row)


def test_blocks_agree_between_fast_and_reference_bracket():
    d = cochain("ps(1,3;1)+ps(2,3;2)", "2|1")
    fast = coboundary_blocks(d, 2)
    slow = coboundary_blocks(d, 2, bracket_oracle)
    assert fast.from_even == slow.from_even
    assert fast.from_odd == slow.from_odd


def test_row_agrees_with_reference_bracket():
    d = cochain("p*ps(1,3;1)+ps(2,3;1)+q*ps(2,3;2)", "2|1", p=1, q=2)
    assert cohomology_row(d, 3) == cohomology_row(d, 3, bracket_oracle)


def test_cohomology_bidim_matches_row():
    d = cochain("4*ps(1,1;2)", "1|2")
    row = cohomology_row(d, 3)
    for n in range(4):
        assert cohomology_bidim(d, n) == row[n]


def test_representatives_are_cocycles_and_count_matches():
    d = cochain("4*ps(1,1;2)", "1|2")
    for degree in (1, 2):
        h = cohomology_bidim(d, degree)
        for parity, expected in ((0, h.even), (1, h.odd)):
            reps = representatives(d, degree, parity)
            assert len(reps) == expected
            for rep in reps:
                assert bracket(d, rep).is_zero()
                assert rep.parity() in (parity, 0)


def test_representative_classes_are_independent():
    d = cochain("4*ps(1,1;2)", "1|2")
    reps = representatives(d, 1, 0)
    for i, rep in enumerate(reps):
        coords = coclass_coordinates(d, rep, 1)
        expected = tuple(
            Fraction(1 if j == i else 0) for j in range(len(reps))
        )
        assert coords == expected


def test_coboundary_class_is_zero():
    d = cochain("4*ps(1,1;2)", "1|2")
    # Push a degree-1 cochain through D and test its class in degree 2.
    source = Cochain.single(d.space, (2,), 1)
    image = bracket(d, source)
    assert not image.is_zero()
    coords = coclass_coordinates(d, image, 2)
    assert coords is not None
    assert all(x == 0 for x in coords)


def test_non_cocycle_has_no_class():
    d = cochain("4*ps(1,1;2)", "1|2")
    not_cocycle = Cochain.single(d.space, (1, 2), 1)
    assert bracket(d, not_cocycle).is_zero() is False
    assert coclass_coordinates(d, not_cocycle, 2) is None


def test_center_column_equals_h0():
    from supercodiff.structure import center, to_superalgebra

    for expr, space_text, bindings in [
        ("ps(1,1;2)", "1|1", {}),
        ("4*ps(1,1;2)", "1|2", {}),
        ("p*ps(1,3;1)+q*ps(2,3;2)", "1|2", {"p": 1, "q": 0}),
        ("ps(1,2;3)+2*ps(1,1;3)", "2|1", {}),
    ]:
        d = cochain(expr, space_text, **bindings)
        assert center(to_superalgebra(d))[1] == cohomology_bidim(d, 0)
