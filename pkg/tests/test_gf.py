from __future__ import annotations

import itertools

import pytest

from qchull.gf import (
    DEFAULT_MODULI,
    FieldError,
    FieldMismatchError,
    field_make,
    format_field,
    frobenius_sqrt_q,
    inv,
    parse_field,
    sqrt_of_minus_one,
)

DEFAULT_UP_TO_49 = [(p, k) for (p, k) in sorted(DEFAULT_MODULI) if p**k <= 49]


def test_prime_field_needs_no_modulus():
    F = field_make(2)
    assert F.q == 2 and F.is_prime_field
    assert [int(e.value) for e in F.elements()] == [0, 1]


def test_gf4_with_explicit_modulus_matches_default():
    F = field_make(2, 2, (1, 1, 1))
    assert F == field_make(2, 2)
    a = F.gen
    assert a * a * a == F.one  # multiplicative group of order 3
    assert a * (a * a) == F.one


@pytest.mark.parametrize(
    "p, k, modulus",
    [(2, 2, (1, 0, 1)), (3, 2, (2, 0, 1)), (2, 2, (1, 1, 2)), (2, 2, (1, 1, 0))],
)
def test_bad_moduli_rejected(p, k, modulus):
    with pytest.raises(FieldError):
        field_make(p, k, modulus)


def test_non_prime_and_missing_default_rejected():
    with pytest.raises(FieldError):
        field_make(4)
    with pytest.raises(FieldError):
        field_make(11, 2)
    assert field_make(11, 2, (1, 0, 1)).q == 121  # -1 is a non-square mod 11


def test_gf5_two_squared_is_minus_one(gf5):
    two = gf5(2)
    assert two * two == gf5(4) == -gf5.one


@pytest.mark.parametrize("p, k", DEFAULT_UP_TO_49)
def test_field_axioms_exhaustive(p, k):
    F = field_make(p, k)
    els = F.elements()
    zero, one = F.zero, F.one
    for a in els:
        assert a + (-a) == zero
        assert a * one == a
        if a:
            assert a * inv(a) == one
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_inverse_of_zero(gf4):
    with pytest.raises(ZeroDivisionError):
        inv(gf4.zero)


def test_mixed_fields_rejected(gf2, gf4):
    with pytest.raises(FieldMismatchError):
        gf2.one + gf4.one
    assert gf2.one != gf4.one


def test_integer_coercion(gf5):
    assert gf5(3) + 4 == gf5(2)
    assert 1 - gf5(3) == gf5(3)
    assert gf5(2) ** -1 == gf5(3)


def test_frobenius_gf4(gf4):
    a = gf4.gen
    assert frobenius_sqrt_q(a) == a * a
    assert frobenius_sqrt_q(gf4.one) == gf4.one


@pytest.mark.parametrize("q", ["4", "9", "16", "25", "49"])
def test_frobenius_is_an_involutive_automorphism(q):
    F = parse_field(q)
    els = F.elements()
    for a in els:
        assert frobenius_sqrt_q(frobenius_sqrt_q(a)) == a
    for a, b in itertools.product(els, repeat=2):
        assert frobenius_sqrt_q(a + b) == frobenius_sqrt_q(a) + frobenius_sqrt_q(b)
        assert frobenius_sqrt_q(a * b) == frobenius_sqrt_q(a) * frobenius_sqrt_q(b)


def test_gf9_frobenius_is_cube():
    F = parse_field("9")
    for a in F.elements():
        assert frobenius_sqrt_q(a) == a**3


def test_frobenius_needs_square_order(gf2, gf5):
    with pytest.raises(FieldError):
        frobenius_sqrt_q(gf5(2))
    with pytest.raises(FieldError):
        frobenius_sqrt_q(field_make(2, 3).gen)


def test_sqrt_of_minus_one_examples(gf2, gf3, gf5):
    assert sqrt_of_minus_one(gf5) == gf5(2)
    assert sqrt_of_minus_one(gf2) == gf2.one
    assert sqrt_of_minus_one(gf3) is None


@pytest.mark.parametrize("p, k", DEFAULT_UP_TO_49)
def test_sqrt_of_minus_one_exists_unless_3_mod_4(p, k):
    F = field_make(p, k)
    alpha = sqrt_of_minus_one(F)
    if F.q % 4 == 3:
        assert alpha is None
        assert all(a * a != -F.one for a in F.elements())
    else:
        assert alpha is not None and alpha * alpha == -F.one


def test_element_printing_and_parsing(gf4):
    a = gf4.gen
    assert str(a) == "a"
    assert str(a * a) == "a+1"
    assert gf4("a+1") == a * a
    F27 = field_make(3, 3)
    b = F27("2a^2+1")
    assert str(b) == "2a^2+1"
    assert str(field_make(5)(3)) == "3"


def test_field_notation_round_trip():
    assert parse_field("q=4:modulus=x^2+x+1") == field_make(2, 2)
    assert parse_field("2^2") == field_make(2, 2)
    assert parse_field(7).q == 7
    F = field_make(3, 2, (1, 0, 1))
    assert F != parse_field("9")
    assert parse_field(format_field(F)) == F
    assert format_field(parse_field("4")) == "4"
    with pytest.raises(FieldError):
        parse_field("6")
    with pytest.raises(FieldError):
        parse_field("q=four")


def test_rep_round_trip():
    F = field_make(5, 2)
    for e in F.elements():
        assert F.from_rep(e.rep) == e
        assert all(0 <= c < 5 for c in e.rep) and len(e.rep) == 2
