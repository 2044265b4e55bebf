from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qchull._syntax import ParseError
from qchull.gf import field_make, parse_field
from qchull.poly import (
    Poly,
    PolyError,
    RingElement,
    conj_in_ring,
    cyclotomic_cosets,
    divisors_of_xm_minus_1,
    factor_xm_minus_1,
    is_irreducible,
    is_self_reciprocal,
    poly_divmod,
    poly_gcd,
    reciprocal,
)

from conftest import random_ring


def P(field, text):
    return Poly.parse(field, text)


def random_poly(rng, field, deg):
    return Poly.from_ints(field, [rng.randrange(field.q) for _ in range(deg + 1)])


# --- parsing and printing ------------------------------------------------------------


def test_parse_print_round_trip(gf3, gf4):
    assert str(P(gf3, "x^3+2x+2")) == "x^3+2x+2"
    assert str(P(gf3, " 2 + x^3 +2*x ")) == "x^3+2x+2"
    assert str(P(gf3, "x^2 - x")) == "x^2+2x"
    f = P(gf4, "(a^2+1)x^3 + a")
    assert str(f) == "ax^3+a"  # a^2+1 = a in GF(4)
    g = P(gf4, "(a+1)x^8+(a+1)x^7+x+1")
    assert str(g) == "(a+1)x^8+(a+1)x^7+x+1"
    assert P(gf4, str(g)) == g
    assert str(Poly(gf3)) == "0"


@pytest.mark.parametrize("bad", ["x^", "x^-1", "2x+", "(x+1", "y+1", "x^2x^", ""])
def test_parse_errors(gf3, bad):
    with pytest.raises((ParseError, PolyError)):
        P(gf3, bad)


def test_zero_degree_is_minus_infinity(gf2):
    z = Poly(gf2)
    assert z.is_zero and z.degree == -math.inf
    assert P(gf2, "1").degree == 0


# --- arithmetic ----------------------------------------------------------------------


def test_gcd_examples(gf2, gf3):
    assert poly_gcd(P(gf2, "x^2+x"), P(gf2, "x^2+1")) == P(gf2, "x+1")
    f = P(gf3, "2x^2+x")
    assert poly_gcd(f, Poly(gf3)) == f.monic() == P(gf3, "x^2+2x")
    assert poly_gcd(Poly(gf3), Poly(gf3)).is_zero
    assert P(gf3, "x+2") * P(gf3, "x+1") == P(gf3, "x^2+2")


def test_divmod_by_zero(gf3):
    with pytest.raises(ZeroDivisionError):
        poly_divmod(P(gf3, "x"), Poly(gf3))


@pytest.mark.parametrize("q", ["2", "3", "4", "5", "9"])
def test_division_identity_random(q):
    F = parse_field(q)
    rng = random.Random(q)
    for _ in range(200):
        f = random_poly(rng, F, rng.randrange(0, 12))
        g = random_poly(rng, F, rng.randrange(0, 6))
        if g.is_zero:
            continue
        quo, rem = poly_divmod(f, g)
        assert quo * g + rem == f
        assert rem.degree < g.degree
        d = poly_gcd(f, g)
        assert d.divides(f) and d.divides(g)


def test_evaluation(gf5):
    f = P(gf5, "x^2+x+1")
    assert f(gf5(2)) == gf5(7 % 5)
    assert f(0) == gf5.one


# --- reciprocals ---------------------------------------------------------------------


def test_reciprocal_examples(gf2, gf4, gf5):
    assert reciprocal(P(gf2, "x+1")) == P(gf2, "x+1")
    assert reciprocal(P(gf4, "x+a")) == P(gf4, "x+a+1")
    assert reciprocal(P(gf5, "x+2")) == P(gf5, "x+3")
    with pytest.raises(PolyError):
        reciprocal(P(gf5, "x^2+x"))
    with pytest.raises(PolyError):
        reciprocal(Poly(gf5))


@pytest.mark.parametrize("q", ["2", "3", "4", "5"])
def test_reciprocal_involution_and_multiplicative(q):
    F = parse_field(q)
    rng = random.Random(7 * int(q))
    done = 0
    while done < 1000:
        f = random_poly(rng, F, rng.randrange(0, 7)).monic()
        g = random_poly(rng, F, rng.randrange(0, 7)).monic()
        if f.is_zero or g.is_zero or f.coeff(0) == 0 or g.coeff(0) == 0:
            continue
        assert reciprocal(reciprocal(f)) == f
        assert reciprocal(f * g) == reciprocal(f) * reciprocal(g)
        done += 1


# --- the ring R_m --------------------------------------------------------------------


def test_ring_requires_coprime_m(gf2):
    with pytest.raises(PolyError):
        RingElement.parse(gf2, 4, "x+1")
    with pytest.raises(PolyError):
        RingElement.parse(gf2, 0, "1")


def test_ring_reduction(gf2):
    r = RingElement.parse(gf2, 3, "x^4+x^3")
    assert r == RingElement.parse(gf2, 3, "x+1")
    assert RingElement.parse(gf2, 3, "x") * RingElement.parse(gf2, 3, "x^2+x") == RingElement.parse(gf2, 3, "x^2+1")


def test_conj_examples(gf2, gf5):
    assert conj_in_ring(RingElement.parse(gf2, 3, "x^2+x")) == RingElement.parse(gf2, 3, "x^2+x")
    assert conj_in_ring(RingElement.parse(gf5, 7, "x^2")) == RingElement.parse(gf5, 7, "x^5")
    assert conj_in_ring(RingElement.parse(gf5, 6, "3")) == RingElement.parse(gf5, 6, "3")


@pytest.mark.parametrize("q", ["2", "3", "4", "5"])
def test_conj_is_involutive_ring_homomorphism(q):
    F = parse_field(q)
    rng = random.Random(q)
    for m in [m for m in range(1, 13) if math.gcd(m, F.q) == 1]:
        for _ in range(20):
            a, b = random_ring(rng, F, m), random_ring(rng, F, m)
            assert (a * b).conj() == a.conj() * b.conj()
            assert (a + b).conj() == a.conj() + b.conj()
            assert a.conj().conj() == a


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=11), st.lists(st.integers(0, 2), min_size=1, max_size=11))
def test_ring_multiplication_matches_polynomial_reduction(u, v):
    F = field_make(3)
    m = 11
    a, b = RingElement.from_ints(F, m, u), RingElement.from_ints(F, m, v)
    prod = (Poly.from_ints(F, u) * Poly.from_ints(F, v)) % Poly.x_m_minus_1(F, m)
    assert (a * b).lift() == prod


# --- factorisation of x^m - 1 --------------------------------------------------------


def test_factor_gf5_m8(gf5):
    fc = factor_xm_minus_1(8, gf5)
    assert [str(f) for f in fc.self_reciprocal] == ["x+1", "x+4"]
    assert [(str(h), str(hs)) for h, hs in fc.reciprocal_pairs] == [("x+2", "x+3"), ("x^2+2", "x^2+3")]
    assert [str(f) for f in fc.factors()] == ["x+1", "x+2", "x+3", "x+4", "x^2+2", "x^2+3"]


def test_factor_gf4_m9(gf4):
    fc = factor_xm_minus_1(9, gf4)
    a, a2 = "a", "a+1"  # alpha and alpha^2 under x^2+x+1
    assert [str(f) for f in fc.self_reciprocal] == ["x+1"]
    assert [(str(h), str(hs)) for h, hs in fc.reciprocal_pairs] == [
        (f"x+{a}", f"x+{a2}"),
        (f"x^3+{a}", f"x^3+{a2}"),
    ]


def test_factor_gf2_m3(gf2):
    fc = factor_xm_minus_1(3, gf2)
    assert [str(f) for f in fc.self_reciprocal] == ["x+1", "x^2+x+1"]
    assert fc.reciprocal_pairs == ()


def test_factor_rejects_non_coprime(gf2):
    with pytest.raises(PolyError):
        factor_xm_minus_1(4, gf2)


@pytest.mark.parametrize("q", ["2", "3", "4", "5"])
def test_factorisation_invariants(q):
    F = parse_field(q)
    for m in [m for m in range(1, 31) if math.gcd(m, F.q) == 1]:
        fc = factor_xm_minus_1(m, F)
        assert fc.product() == Poly.x_m_minus_1(F, m)
        facs = fc.factors()
        assert len(set(facs)) == len(facs)
        for f in facs:
            assert f.lead == 1
            assert is_irreducible(f)
        for g in fc.self_reciprocal:
            assert is_self_reciprocal(g)
            if g.degree > 1:
                assert g.degree % 2 == 0
        for h, hs in fc.reciprocal_pairs:
            assert reciprocal(h) == hs and h != hs
        assert len(facs) == len(cyclotomic_cosets(F.q, m))


def test_cyclotomic_cosets():
    assert cyclotomic_cosets(2, 7) == [(0,), (1, 2, 4), (3, 5, 6)]


def test_divisors_count(gf2, gf3):
    assert len(divisors_of_xm_minus_1(7, gf2)) == 8
    assert len(divisors_of_xm_minus_1(8, gf3)) == 2 ** len(factor_xm_minus_1(8, gf3).factors())
    assert all(d.divides(Poly.x_m_minus_1(gf2, 15)) for d in divisors_of_xm_minus_1(15, gf2))


def test_irreducibility(gf2, gf3):
    assert is_irreducible(P(gf2, "x^3+x+1"))
    assert not is_irreducible(P(gf2, "x^4+x^2+1"))  # (x^2+x+1)^2
    assert is_irreducible(P(gf3, "x^2+1"))
    assert not is_irreducible(P(gf3, "x^2+2"))
