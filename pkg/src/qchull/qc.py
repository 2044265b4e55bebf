"""One-generator quasi-cyclic codes and double circulant codes.

A one-generator code of index ``ell`` and co-index ``m`` is the
``R_m``-submodule of ``R_m^ell`` spanned by ``(a_1, ..., a_ell)``; as a
linear code it is the row space of ``[circ(a_1) | ... | circ(a_ell)]``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .code import LinearCode, code_from_rows
from .gf import FieldError, FieldSpec, sqrt_of_minus_one
from .linalg import circulant, hstack
from .poly import Poly, RingElement, check_coprime, is_self_reciprocal, poly_gcd

DEFAULT_EXHAUSTION_BUDGET = 10**7


class QcError(ValueError):
    pass


@dataclass(frozen=True)
class QcOneGenSpec:
    m: int
    gens: tuple[RingElement, ...]
    field: FieldSpec

    def __post_init__(self) -> None:
        check_coprime(self.m, self.field)
        if not self.gens:
            raise QcError("a one-generator QC code needs at least one polynomial")
        for a in self.gens:
            if a.m != self.m or a.field != self.field:
                raise QcError("all generator polynomials must share m and the field")

    @classmethod
    def parse(cls, field: FieldSpec, m: int, gens: list[str] | tuple[str, ...]) -> QcOneGenSpec:
        return cls(m, tuple(RingElement.parse(field, m, g) for g in gens), field)

    @property
    def ell(self) -> int:
        return len(self.gens)

    def to_dict(self) -> dict:
        return {
            "family": "qc1gen",
            "q": str(self.field),
            "m": self.m,
            "generators": [str(a) for a in self.gens],
        }


@dataclass(frozen=True)
class DcSpec:
    """Double circulant code ``<(1, a(x))>``."""

    m: int
    a: RingElement

    def __post_init__(self) -> None:
        if self.a.m != self.m:
            raise QcError(f"a(x) lives in R_{self.a.m}, expected R_{self.m}")

    @classmethod
    def parse(cls, field: FieldSpec, m: int, a: str) -> DcSpec:
        return cls(m, RingElement.parse(field, m, a))

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    def as_qc(self) -> QcOneGenSpec:
        one = RingElement(Poly(self.field, (1,)), self.m)
        return QcOneGenSpec(self.m, (one, self.a), self.field)

    def to_dict(self) -> dict:
        return {"family": "dc", "q": str(self.field), "m": self.m, "a": str(self.a)}


def _as_qc(spec: QcOneGenSpec | DcSpec) -> QcOneGenSpec:
    return spec.as_qc() if isinstance(spec, DcSpec) else spec


def qc_generator_poly(spec: QcOneGenSpec | DcSpec) -> Poly:
    """``gcd(a_1, ..., a_ell, x^m - 1)``, monic."""
    spec = _as_qc(spec)
    xm1 = Poly.x_m_minus_1(spec.field, spec.m)
    return poly_gcd(*(a.lift() for a in spec.gens), xm1)


def qc_parity_check_poly(spec: QcOneGenSpec | DcSpec) -> Poly:
    spec = _as_qc(spec)
    return Poly.x_m_minus_1(spec.field, spec.m) // qc_generator_poly(spec)


def qc_dimension(spec: QcOneGenSpec | DcSpec) -> int:
    return int(qc_parity_check_poly(spec).degree)


def qc_is_maximal(spec: QcOneGenSpec | DcSpec) -> bool:
    return qc_generator_poly(spec).degree == 0


def qc_build_code(spec: QcOneGenSpec | DcSpec) -> LinearCode:
    spec = _as_qc(spec)
    return code_from_rows(hstack(*(circulant(a) for a in spec.gens)))


def qc_hull_sum(spec: QcOneGenSpec | DcSpec) -> RingElement:
    """``sum_r a_r(x) a_r(x^(m-1))`` in ``R_m``."""
    spec = _as_qc(spec)
    acc = RingElement(Poly(spec.field), spec.m)
    for a in spec.gens:
        acc = acc + a * a.conj()
    return acc


def qc_hull_poly(spec: QcOneGenSpec | DcSpec) -> Poly:
    """``u(x) = gcd(sum_r a_r a_r(x^(m-1)), h(x))``; a zero sum gives ``u = h``."""
    return poly_gcd(qc_hull_sum(spec).lift(), qc_parity_check_poly(spec))


def qc_hull_dim_formula(spec: QcOneGenSpec | DcSpec) -> int:
    return int(qc_hull_poly(spec).degree)


def qc_is_lcd(spec: QcOneGenSpec | DcSpec) -> bool:
    """LCD iff the hull polynomial is 1 (the zero code counts as LCD)."""
    return qc_hull_dim_formula(spec) == 0


def qc_lcd_necessary_selfreciprocal(spec: QcOneGenSpec | DcSpec) -> bool:
    """Whether ``g(x)`` is self-reciprocal; every LCD one-generator code has this."""
    return is_self_reciprocal(qc_generator_poly(spec))


def qc_lcp_maximal_2qc(spec_c: QcOneGenSpec | DcSpec, spec_d: QcOneGenSpec | DcSpec) -> bool:
    """LCP test for two maximal index-2 one-generator codes.

    ``(C, D)`` is LCP iff ``gcd(a_1 b_2 - a_2 b_1, x^m - 1) = 1``.  A pair of
    one-generator codes can only be complementary when both have index 2 and
    dimension m, so other inputs are rejected.
    """
    c, d = _as_qc(spec_c), _as_qc(spec_d)
    if c.m != d.m or c.field != d.field:
        raise QcError("LCP needs codes with equal m over the same field")
    if c.ell != 2 or d.ell != 2:
        raise QcError("complementary one-generator QC pairs must have index 2")
    if not (qc_is_maximal(c) and qc_is_maximal(d)):
        raise QcError("complementary one-generator QC pairs must both be maximal (dimension m)")
    a1, a2 = c.gens
    b1, b2 = d.gens
    det = a1 * b2 - a2 * b1
    return poly_gcd(det.lift(), Poly.x_m_minus_1(c.field, c.m)).degree == 0


def dc_hull_dim(spec: DcSpec) -> int:
    """``deg gcd(1 + a(x) a(x^(m-1)), x^m - 1)``."""
    v = 1 + spec.a * spec.a.conj()
    return int(poly_gcd(v.lift(), Poly.x_m_minus_1(spec.field, spec.m)).degree)


def dc_construct_hull_one(m: int, field: FieldSpec) -> DcSpec:
    """A double circulant code with one-dimensional hull.

    Odd q = 1 mod 4: ``a = x - (alpha + 1)`` with ``alpha^2 = -1``.
    Even q: ``a = u + (beta + 1)`` where ``u = (x^m - 1)/(x - 1)`` and
    ``beta = u(1)``.  No such code exists when q = 3 mod 4.
    """
    check_coprime(m, field)
    q = field.q
    if q % 2 == 0:
        u = Poly(field, (1,) * m)
        beta = u(field.one)
        a = u + (beta + 1)
    elif q % 4 == 1:
        alpha = sqrt_of_minus_one(field)
        assert alpha is not None
        a = Poly(field, (0, 1)) - (alpha + 1)
    else:
        raise QcError(f"no double circulant code of hull dimension 1 exists over GF({q}) (q = 3 mod 4)")
    return DcSpec(m, RingElement.reduce(a, m))


def _all_ring_elements(field: FieldSpec, m: int, budget: int):
    q = field.q
    if q**m > budget:
        raise QcError(f"exhausting R_{m} over GF({q}) needs {q**m} candidates, budget is {budget}")
    for coeffs in itertools.product(range(q), repeat=m):
        yield RingElement.from_ints(field, m, coeffs[::-1])


def dc_hull_spectrum(field: FieldSpec, m: int, budget: int = DEFAULT_EXHAUSTION_BUDGET) -> Counter:
    """Histogram of hull dimensions over every double circulant code in ``R_m``."""
    check_coprime(m, field)
    return Counter(dc_hull_dim(DcSpec(m, a)) for a in _all_ring_elements(field, m, budget))


def dc_no_odd_hull_check(field: FieldSpec, m: int, budget: int = DEFAULT_EXHAUSTION_BUDGET) -> bool:
    """Exhaustively confirm that no DC code over ``field`` has odd hull dimension."""
    if field.q % 4 != 3:
        raise FieldError(f"the odd-hull exhaustion applies to q = 3 mod 4, got q = {field.q}")
    return not any(h % 2 for h in dc_hull_spectrum(field, m, budget))
