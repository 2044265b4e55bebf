"""Four-circulant codes ``<(1, 0, a1, a2), (0, 1, -a2(x^(m-1)), a1(x^(m-1)))>``."""

from __future__ import annotations

from dataclasses import dataclass

from .code import LinearCode, code_from_rows
from .gf import FieldSpec
from .linalg import Matrix, circulant, hstack, negate, vstack
from .poly import Poly, RingElement, check_coprime, poly_gcd


class FcError(ValueError):
    pass


@dataclass(frozen=True)
class FourCirculantSpec:
    m: int
    a1: RingElement
    a2: RingElement

    def __post_init__(self) -> None:
        check_coprime(self.m, self.a1.field)
        if self.a1.m != self.m or self.a2.m != self.m:
            raise FcError("a1 and a2 must both live in R_m")
        if self.a1.field != self.a2.field:
            raise FcError("a1 and a2 must share a field")

    @classmethod
    def parse(cls, field: FieldSpec, m: int, a1: str, a2: str) -> FourCirculantSpec:
        return cls(m, RingElement.parse(field, m, a1), RingElement.parse(field, m, a2))

    @property
    def field(self) -> FieldSpec:
        return self.a1.field

    def to_dict(self) -> dict:
        return {"family": "fc", "q": str(self.field), "m": self.m, "a1": str(self.a1), "a2": str(self.a2)}


def fc_generator_matrix(spec: FourCirculantSpec) -> Matrix:
    """The ``2m x 4m`` matrix ``[[I, 0, A1, A2], [0, I, -A2^c, A1^c]]``.

    ``X^c`` is the circulant of ``x(x^(m-1))``; block order and the sign sit
    here and nowhere else.
    """
    fld, m = spec.field, spec.m
    eye, zero = Matrix.identity(fld, m), Matrix.zeros(fld, m, m)
    top = hstack(eye, zero, circulant(spec.a1), circulant(spec.a2))
    bottom = hstack(zero, eye, negate(circulant(spec.a2.conj())), circulant(spec.a1.conj()))
    return vstack(top, bottom)


def fc_build_code(spec: FourCirculantSpec) -> LinearCode:
    return code_from_rows(fc_generator_matrix(spec))


def fc_hull_sum(spec: FourCirculantSpec) -> RingElement:
    """``A(x) = 1 + a1 a1(x^(m-1)) + a2 a2(x^(m-1))`` in ``R_m``."""
    return 1 + spec.a1 * spec.a1.conj() + spec.a2 * spec.a2.conj()


def fc_hull_poly(spec: FourCirculantSpec) -> Poly:
    return poly_gcd(fc_hull_sum(spec).lift(), Poly.x_m_minus_1(spec.field, spec.m))


def fc_hull_dim_formula(spec: FourCirculantSpec) -> int:
    """``2 deg gcd(A(x), x^m - 1)``; always even."""
    return 2 * int(fc_hull_poly(spec).degree)


def fc_is_lcd(spec: FourCirculantSpec) -> bool:
    return fc_hull_poly(spec).degree == 0


def fc_lcp_sum(spec_c: FourCirculantSpec, spec_d: FourCirculantSpec) -> RingElement:
    """``sum_t (a_t - b_t)(a_t - b_t)(x^(m-1))``."""
    if spec_c.m != spec_d.m or spec_c.field != spec_d.field:
        raise FcError("LCP needs FC codes with equal m over the same field")
    acc = RingElement(Poly(spec_c.field), spec_c.m)
    for a, b in ((spec_c.a1, spec_d.a1), (spec_c.a2, spec_d.a2)):
        diff = a - b
        acc = acc + diff * diff.conj()
    return acc


def fc_lcp(spec_c: FourCirculantSpec, spec_d: FourCirculantSpec) -> bool:
    s = fc_lcp_sum(spec_c, spec_d)
    return poly_gcd(s.lift(), Poly.x_m_minus_1(spec_c.field, spec_c.m)).degree == 0
