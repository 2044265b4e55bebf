from __future__ import annotations

import random

import pytest

from qchull.code import hull_dim_oracle, is_lcp_oracle, min_distance
from qchull.fc import (
    FcError,
    FourCirculantSpec,
    fc_build_code,
    fc_generator_matrix,
    fc_hull_dim_formula,
    fc_hull_poly,
    fc_hull_sum,
    fc_is_lcd,
    fc_lcp,
    fc_lcp_sum,
)
from qchull.gf import field_make, parse_field
from qchull.linalg import Matrix, mat_mul, rank, transpose, vstack
from qchull.poly import PolyError, RingElement, is_self_reciprocal

from conftest import coprime_ms, random_ring


def spec(F, m, a1, a2):
    return FourCirculantSpec.parse(F, m, a1, a2)


def test_zero_spec(gf3):
    s = spec(gf3, 4, "0", "0")
    C = fc_build_code(s)
    assert (C.n, C.k) == (16, 8)
    assert fc_hull_dim_formula(s) == 0 == hull_dim_oracle(C)


def test_table_rows(gf2, gf3):
    C = fc_build_code(spec(gf2, 5, "x^2", "x^2+x+1"))
    assert (C.n, C.k, min_distance(C)) == (20, 10, 5)
    C = fc_build_code(spec(gf3, 5, "x^4+2x^2+x+2", "2x^4+2x^2+1"))
    assert (C.n, C.k, min_distance(C)) == (20, 10, 7)
    assert fc_hull_dim_formula(spec(gf2, 3, "x+1", "x^2+x")) == 0


def test_hand_computed_hull(gf2):
    s = spec(gf2, 3, "1", "x")
    assert fc_hull_sum(s) == RingElement.parse(gf2, 3, "1")
    assert fc_hull_dim_formula(s) == 0 == hull_dim_oracle(fc_build_code(s))


def test_lcd_examples(gf3):
    assert fc_is_lcd(spec(gf3, 7, "1", "0"))
    assert fc_hull_sum(spec(gf3, 7, "1", "0")) == RingElement.parse(gf3, 7, "2")


def test_generator_orientation(gf5):
    """Rows of the two blocks are mutually orthogonal only with the pinned sign/order."""
    rng = random.Random(1)
    for _ in range(20):
        a1, a2 = random_ring(rng, gf5, 6), random_ring(rng, gf5, 6)
        G = fc_generator_matrix(FourCirculantSpec(6, a1, a2))
        top, bottom = G.data[:6], G.data[6:]
        cross = mat_mul(Matrix(gf5, top), transpose(Matrix(gf5, bottom)))
        assert not cross.data.any()


@pytest.mark.parametrize("q", ["2", "3", "4", "5"])
def test_formula_oracle_and_parity(q):
    F = parse_field(q)
    rng = random.Random(q)
    for _ in range(120):
        m = rng.choice(coprime_ms(F.q))
        s = FourCirculantSpec(m, random_ring(rng, F, m), random_ring(rng, F, m))
        C = fc_build_code(s)
        h = fc_hull_dim_formula(s)
        assert C.k == 2 * m
        assert h == hull_dim_oracle(C)
        assert h % 2 == 0
        assert is_self_reciprocal(fc_hull_poly(s))


def test_hull_sum_is_conjugation_fixed(gf5):
    rng = random.Random(2)
    for m in (3, 4, 6, 7, 8):
        for _ in range(30):
            s = FourCirculantSpec(m, random_ring(rng, gf5, m), random_ring(rng, gf5, m))
            A = fc_hull_sum(s)
            assert A.conj() == A


def test_zero_sum_gives_full_hull():
    # over GF(3): 1 + 1 + 1 = 0, so A = 0 and the hull is the whole code
    F = field_make(3)
    s = spec(F, 4, "1", "1")
    assert fc_hull_sum(s).is_zero
    assert fc_hull_dim_formula(s) == 8 == hull_dim_oracle(fc_build_code(s))


# --- LCP -----------------------------------------------------------------------------


def test_lcp_examples(gf3):
    c = spec(gf3, 4, "2x^3+2x^2+x", "x^2+1")
    assert not fc_lcp(c, c)
    d = spec(gf3, 4, "2x^3+2x^2+x+1", "x^2+1")
    assert fc_lcp(c, d)
    assert is_lcp_oracle(fc_build_code(c), fc_build_code(d))


def test_lcp_fails_when_x_minus_1_divides_differences(gf5):
    rng = random.Random(4)
    xm1 = RingElement.parse(gf5, 6, "x-1")
    for _ in range(50):
        c = FourCirculantSpec(6, random_ring(rng, gf5, 6), random_ring(rng, gf5, 6))
        d = FourCirculantSpec(6, c.a1 + xm1 * random_ring(rng, gf5, 6), c.a2 + xm1 * random_ring(rng, gf5, 6))
        total = fc_lcp_sum(c, d).lift()
        assert total(gf5.one) == gf5.zero
        assert not fc_lcp(c, d)
        assert not is_lcp_oracle(fc_build_code(c), fc_build_code(d))


@pytest.mark.parametrize("q", ["2", "3", "4", "5"])
def test_lcp_formula_matches_stacked_rank(q):
    F = parse_field(q)
    rng = random.Random(q)
    for _ in range(100):
        m = rng.choice(coprime_ms(F.q))
        c = FourCirculantSpec(m, random_ring(rng, F, m), random_ring(rng, F, m))
        d = FourCirculantSpec(m, random_ring(rng, F, m), random_ring(rng, F, m))
        C, D = fc_build_code(c), fc_build_code(d)
        assert fc_lcp(c, d) == (rank(vstack(C.gen, D.gen)) == 4 * m)


def test_lcp_mismatch_errors(gf2, gf3):
    with pytest.raises(FcError):
        fc_lcp(spec(gf2, 3, "1", "0"), spec(gf2, 5, "1", "0"))
    with pytest.raises(FcError):
        fc_lcp(spec(gf2, 5, "1", "0"), spec(field_make(2, 2), 5, "1", "0"))


def test_spec_validation(gf2, gf3):
    with pytest.raises(PolyError):
        spec(gf3, 6, "1", "x")
    with pytest.raises(FcError):
        FourCirculantSpec(3, RingElement.parse(gf2, 3, "1"), RingElement.parse(gf2, 5, "1"))
    with pytest.raises(FcError):
        FourCirculantSpec(5, RingElement.parse(gf2, 5, "1"), RingElement.parse(gf3, 5, "1"))
