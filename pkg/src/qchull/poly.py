"""Polynomials over GF(q), the ring GF(q)[x]/(x^m - 1), and factoring x^m - 1.

Coefficients are stored as field-encoded integers (see :mod:`qchull.gf`) in
ascending order with no trailing zeros, so the zero polynomial is ``()``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field as dc_field

from ._syntax import ParseError, parse_terms
from .gf import FieldElement, FieldError, FieldMismatchError, FieldSpec, is_prime

Coeffs = tuple[int, ...]

# Cap on [GF(q^e) : GF(q)] for the splitting field used by factor_xm_minus_1.
MAX_SPLITTING_DEGREE = 64


class PolyError(ValueError):
    pass


# --- raw coefficient-tuple kernels ---------------------------------------------


def _trim(c: list[int]) -> Coeffs:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _add(f: Coeffs, g: Coeffs, addl: list[list[int]]) -> Coeffs:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = addl[out[i]][c]
    return _trim(out)


def _sub(f: Coeffs, g: Coeffs, subl: list[list[int]]) -> Coeffs:
    n = max(len(f), len(g))
    out = [0] * n
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = subl[a][b]
    return _trim(out)


def _mul(f: Coeffs, g: Coeffs, addl: list[list[int]], mull: list[list[int]]) -> Coeffs:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        row = mull[a]
        for j, b in enumerate(g):
            if b:
                out[i + j] = addl[out[i + j]][row[b]]
    return _trim(out)


def _scale(f: Coeffs, c: int, mull: list[list[int]]) -> Coeffs:
    if c == 0:
        return ()
    row = mull[c]
    return tuple(row[a] for a in f)


def _divmod(f: Coeffs, g: Coeffs, t) -> tuple[Coeffs, Coeffs]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return (), f
    rem = list(f)
    inv_lead = t.invl[g[-1]]
    dg = len(g) - 1
    quo = [0] * (len(f) - dg)
    subl, mull = t.subl, t.mull
    for shift in range(len(f) - len(g), -1, -1):
        c = rem[shift + dg]
        if c:
            c = mull[c][inv_lead]
            quo[shift] = c
            row = mull[c]
            for i, b in enumerate(g):
                if b:
                    rem[shift + i] = subl[rem[shift + i]][row[b]]
    return _trim(quo), _trim(rem[:dg])


def _monic(f: Coeffs, t) -> Coeffs:
    if not f or f[-1] == 1:
        return f
    return _scale(f, t.invl[f[-1]], t.mull)


def _gcd(f: Coeffs, g: Coeffs, t) -> Coeffs:
    while g:
        f, g = g, _divmod(f, g, t)[1]
    return _monic(f, t)


# --- Poly -----------------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial over a finite field."""

    field: FieldSpec
    coeffs: Coeffs = ()

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            object.__setattr__(self, "coeffs", _trim(list(self.coeffs)))

    # construction
    @classmethod
    def from_ints(cls, field: FieldSpec, coeffs) -> Poly:
        """Ascending coefficients given as encoded field values (or ints mod p for prime fields)."""
        q = field.q
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                vals.append(field(c).value)
            else:
                c = int(c)
                if field.k == 1:
                    c %= field.p
                elif not 0 <= c < q:
                    raise FieldError(f"encoded value {c} out of range for GF({q})")
                vals.append(c)
        return cls(field, _trim(vals))

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> Poly:
        try:
            terms = parse_terms(text)
        except ParseError as exc:
            raise PolyError(str(exc)) from None
        by_exp: dict[int, dict[int, int]] = {}
        for (ex, ea), c in terms.items():
            by_exp.setdefault(ex, {})
            by_exp[ex][ea] = by_exp[ex].get(ea, 0) + c
        deg = max(by_exp, default=-1)
        out = [0] * (deg + 1)
        for ex, inner in by_exp.items():
            out[ex] = field.value_from_terms(inner)
        return cls(field, _trim(out))

    @classmethod
    def monomial(cls, field: FieldSpec, e: int, c: int = 1) -> Poly:
        return cls(field, (0,) * e + (c,)) if c else cls(field)

    @classmethod
    def x_m_minus_1(cls, field: FieldSpec, m: int) -> Poly:
        return cls(field, (field.tables.negl[1],) + (0,) * (m - 1) + (1,))

    # inspection
    @property
    def degree(self) -> int | float:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def coefficients(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> Poly:
        return Poly(self.field, _monic(self.coeffs, self.field.tables))

    def __call__(self, x: FieldElement | int) -> FieldElement:
        xv = self.field(x).value
        t = self.field.tables
        acc = 0
        for c in reversed(self.coeffs):
            acc = t.addl[t.mull[acc][xv]][c]
        return FieldElement(self.field, acc)

    # arithmetic
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError(f"polynomials over {self.field} and {other.field}")
            return other
        if isinstance(other, (FieldElement, int)):
            return Poly(self.field, _trim([self.field(other).value]))
        return NotImplemented

    def __add__(self, other) -> Poly:
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        return Poly(self.field, _add(self.coeffs, g.coeffs, self.field.tables.addl))

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        return Poly(self.field, _sub(self.coeffs, g.coeffs, self.field.tables.subl))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __neg__(self) -> Poly:
        negl = self.field.tables.negl
        return Poly(self.field, tuple(negl[c] for c in self.coeffs))

    def __mul__(self, other) -> Poly:
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        t = self.field.tables
        return Poly(self.field, _mul(self.coeffs, g.coeffs, t.addl, t.mull))

    __rmul__ = __mul__

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        g = self._coerce(other)
        quo, rem = _divmod(self.coeffs, g.coeffs, self.field.tables)
        return Poly(self.field, quo), Poly(self.field, rem)

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> Poly:
        out = Poly(self.field, (1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self}, GF({self.field.q}))"

    def sort_key(self) -> tuple:
        return (len(self.coeffs), tuple(reversed(self.coeffs)))


def format_poly(f: Poly, var: str = "x") -> str:
    """Canonical descending-exponent string, e.g. ``x^3+2x+2`` or ``(a+1)x^2+a``."""
    if f.is_zero:
        return "0"
    fld = f.field
    parts = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if not c:
            continue
        cs = fld.format_value(c)
        if e == 0:
            parts.append(cs)
            continue
        mono = var if e == 1 else f"{var}^{e}"
        if c == 1:
            parts.append(mono)
        elif "+" in cs:
            parts.append(f"({cs}){mono}")
        else:
            parts.append(f"{cs}{mono}")
    return "+".join(parts)


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return divmod(a, b)


def poly_gcd(*polys: Poly) -> Poly:
    """Monic gcd of any number of polynomials; ``gcd(0, 0) = 0``."""
    if not polys:
        raise PolyError("poly_gcd needs at least one argument")
    fld = polys[0].field
    t = fld.tables
    acc: Coeffs = ()
    for f in polys:
        if f.field != fld:
            raise FieldMismatchError("gcd of polynomials over different fields")
        acc = _gcd(acc, f.coeffs, t)
    return Poly(fld, _monic(acc, t))


def reciprocal(f: Poly) -> Poly:
    """``f(0)^-1 * x^deg(f) * f(1/x)``; needs a nonzero constant term."""
    if f.is_zero:
        raise PolyError("the zero polynomial has no reciprocal")
    if f.coeffs[0] == 0:
        raise PolyError(f"reciprocal needs a nonzero constant term, got {f}")
    t = f.field.tables
    return Poly(f.field, _scale(tuple(reversed(f.coeffs)), t.invl[f.coeffs[0]], t.mull))


def is_self_reciprocal(f: Poly) -> bool:
    return reciprocal(f) == f


def is_irreducible(f: Poly) -> bool:
    """Rabin's test over GF(q)."""
    n = len(f.coeffs) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    fld = f.field
    q = fld.q
    fm = f.monic()
    x = Poly(fld, (0, 1))

    def frob_power(i: int) -> Poly:
        out = x
        for _ in range(i):
            out = powmod(out, q, fm)
        return out

    if frob_power(n) != x % fm:
        return False
    for r in (r for r in range(2, n + 1) if n % r == 0 and is_prime(r)):
        if poly_gcd(fm, frob_power(n // r) - x).degree > 0:
            return False
    return True


def powmod(base: Poly, e: int, mod: Poly) -> Poly:
    t = base.field.tables
    out: Coeffs = (1,)
    b = _divmod(base.coeffs, mod.coeffs, t)[1]
    while e:
        if e & 1:
            out = _divmod(_mul(out, b, t.addl, t.mull), mod.coeffs, t)[1]
        b = _divmod(_mul(b, b, t.addl, t.mull), mod.coeffs, t)[1]
        e >>= 1
    return Poly(base.field, _divmod(out, mod.coeffs, t)[1])


# --- the ring R_m = GF(q)[x]/(x^m - 1) ---------------------------------------------


def check_coprime(m: int, field: FieldSpec) -> None:
    if m < 1:
        raise PolyError(f"co-index must be positive, got {m}")
    if math.gcd(m, field.q) != 1:
        raise PolyError(f"gcd(m, q) = gcd({m}, {field.q}) != 1")


@dataclass(frozen=True)
class RingElement:
    """Residue class of a polynomial modulo ``x^m - 1`` (stored with degree < m)."""

    poly: Poly
    m: int

    def __post_init__(self) -> None:
        check_coprime(self.m, self.poly.field)
        if len(self.poly.coeffs) > self.m:
            raise PolyError(f"representative {self.poly} has degree >= m = {self.m}; use RingElement.reduce")

    @classmethod
    def reduce(cls, f: Poly, m: int) -> RingElement:
        check_coprime(m, f.field)
        t = f.field.tables
        out = [0] * m
        for i, c in enumerate(f.coeffs):
            if c:
                out[i % m] = t.addl[out[i % m]][c]
        return cls(Poly(f.field, _trim(out)), m)

    @classmethod
    def parse(cls, field: FieldSpec, m: int, text: str) -> RingElement:
        return cls.reduce(Poly.parse(field, text), m)

    @classmethod
    def from_ints(cls, field: FieldSpec, m: int, coeffs) -> RingElement:
        return cls.reduce(Poly.from_ints(field, coeffs), m)

    @property
    def field(self) -> FieldSpec:
        return self.poly.field

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def vector(self) -> list[int]:
        """Length-m coefficient vector (encoded values)."""
        c = self.poly.coeffs
        return list(c) + [0] * (self.m - len(c))

    def lift(self) -> Poly:
        return self.poly

    def _check(self, other) -> RingElement:
        if isinstance(other, (int, FieldElement)):
            return RingElement(Poly(self.field, _trim([self.field(other).value])), self.m)
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.m != self.m or other.field != self.field:
            raise FieldMismatchError(f"ring elements of R_{self.m} and R_{other.m} over different data")
        return other

    def __add__(self, other) -> RingElement:
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.poly + o.poly, self.m)

    __radd__ = __add__

    def __sub__(self, other) -> RingElement:
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.poly - o.poly, self.m)

    def __rsub__(self, other) -> RingElement:
        return self._check(other) - self

    def __neg__(self) -> RingElement:
        return RingElement(-self.poly, self.m)

    def __mul__(self, other) -> RingElement:
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        t = self.field.tables
        addl, mull = t.addl, t.mull
        m = self.m
        out = [0] * m
        g = o.poly.coeffs
        for i, a in enumerate(self.poly.coeffs):
            if not a:
                continue
            row = mull[a]
            for j, b in enumerate(g):
                if b:
                    k = i + j
                    if k >= m:
                        k -= m
                    out[k] = addl[out[k]][row[b]]
        return RingElement(Poly(self.field, _trim(out)), m)

    __rmul__ = __mul__

    def conj(self) -> RingElement:
        return conj_in_ring(self)

    def __str__(self) -> str:
        return str(self.poly)


def conj_in_ring(a: RingElement) -> RingElement:
    """Substitute ``x -> x^(m-1)``: coefficient ``c_i`` moves to exponent ``(m - i) mod m``."""
    m = a.m
    out = [0] * m
    for i, c in enumerate(a.poly.coeffs):
        out[(m - i) % m] = c
    return RingElement(Poly(a.field, _trim(out)), m)


# --- factoring x^m - 1 -------------------------------------------------------------


def cyclotomic_cosets(q: int, m: int) -> list[tuple[int, ...]]:
    """q-cyclotomic cosets modulo m, each sorted, ordered by smallest member."""
    seen: set[int] = set()
    out = []
    for s in range(m):
        if s in seen:
            continue
        coset = []
        j = s
        while j not in coset:
            coset.append(j)
            j = j * q % m
        seen.update(coset)
        out.append(tuple(sorted(coset)))
    return out


def multiplicative_order(q: int, m: int) -> int:
    if m == 1:
        return 1
    e, v = 1, q % m
    while v != 1:
        v = v * q % m
        e += 1
    return e


@dataclass(frozen=True)
class FactorClassification:
    """x^m - 1 split into self-reciprocal irreducibles and reciprocal pairs."""

    m: int
    field: FieldSpec
    self_reciprocal: tuple[Poly, ...]
    reciprocal_pairs: tuple[tuple[Poly, Poly], ...]
    cosets: dict[Poly, tuple[int, ...]] = dc_field(default_factory=dict, compare=False, repr=False)

    def factors(self) -> list[Poly]:
        out = list(self.self_reciprocal)
        for h, hs in self.reciprocal_pairs:
            out += [h, hs]
        return sorted(out, key=Poly.sort_key)

    def product(self) -> Poly:
        acc = Poly(self.field, (1,))
        for f in self.factors():
            acc = acc * f
        return acc

    def as_dict(self) -> dict:
        return {
            "q": str(self.field),
            "m": self.m,
            "factors": [str(f) for f in self.factors()],
            "self_reciprocal": [str(f) for f in self.self_reciprocal],
            "reciprocal_pairs": [[str(h), str(hs)] for h, hs in self.reciprocal_pairs],
        }


class _Extension:
    """GF(q^e) as GF(q)[y]/(f(y)), elements as coefficient tuples over GF(q)."""

    def __init__(self, field: FieldSpec, e: int):
        self.field = field
        self.t = field.tables
        self.e = e
        self.mod = self._find_irreducible()

    def _find_irreducible(self) -> Coeffs:
        fld, e, q = self.field, self.e, self.field.q
        if e == 1:
            return (0, 1)
        for n in range(q**e):
            low = []
            for _ in range(e):
                n, c = divmod(n, q)
                low.append(c)
            if low[0] == 0:
                continue
            cand = Poly(fld, tuple(low) + (1,))
            if is_irreducible(cand):
                return cand.coeffs
        raise PolyError(f"no irreducible polynomial of degree {e} found")  # unreachable

    def mul(self, a: Coeffs, b: Coeffs) -> Coeffs:
        return _divmod(_mul(a, b, self.t.addl, self.t.mull), self.mod, self.t)[1]

    def pow(self, a: Coeffs, n: int) -> Coeffs:
        out: Coeffs = (1,)
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def element_of_order(self, m: int) -> Coeffs:
        q, e = self.field.q, self.e
        order = q**e - 1
        if order % m:
            raise PolyError(f"{m} does not divide q^e - 1")
        primes = [r for r in range(2, m + 1) if m % r == 0 and is_prime(r)]
        for n in range(1, q**e):
            c, low = n, []
            for _ in range(e):
                c, d = divmod(c, q)
                low.append(d)
            cand = _trim(low)
            xi = self.pow(cand, order // m)
            if all(self.pow(xi, m // r) != (1,) for r in primes):
                return xi
        raise PolyError(f"no element of order {m}")  # unreachable


@functools.lru_cache(maxsize=256)
def factor_xm_minus_1(m: int, field: FieldSpec) -> FactorClassification:
    """Classified factorisation of ``x^m - 1`` over ``field`` via cyclotomic cosets.

    Each q-cyclotomic coset ``C`` mod m gives the irreducible factor
    ``prod_{i in C} (x - xi^i)`` for a primitive m-th root of unity ``xi``
    in GF(q^e); the factor is self-reciprocal iff ``-C == C``.
    """
    check_coprime(m, field)
    q = field.q
    e = multiplicative_order(q, m)
    if e > MAX_SPLITTING_DEGREE:
        raise PolyError(f"splitting field degree {e} exceeds {MAX_SPLITTING_DEGREE}")
    ext = _Extension(field, e)
    t = field.tables
    xi = ext.element_of_order(m)
    powers: list[Coeffs] = [(1,)]
    for _ in range(m - 1):
        powers.append(ext.mul(powers[-1], xi))

    def min_poly(coset: tuple[int, ...]) -> Poly:
        # coefficients of prod (x - r), each an extension element
        acc: list[Coeffs] = [(1,)]
        for i in coset:
            negr = tuple(t.negl[c] for c in powers[i])
            nxt: list[Coeffs] = [()] * (len(acc) + 1)
            for j, c in enumerate(acc):
                nxt[j + 1] = _add(nxt[j + 1], c, t.addl)
                nxt[j] = _add(nxt[j], ext.mul(c, negr), t.addl)
            acc = nxt
        if any(len(c) > 1 for c in acc):
            raise PolyError("minimal polynomial does not descend to the base field")  # unreachable
        return Poly(field, _trim([c[0] if c else 0 for c in acc]))

    cosets = cyclotomic_cosets(q, m)
    by_set = {frozenset(c): c for c in cosets}
    self_rec: list[Poly] = []
    pairs: list[tuple[Poly, Poly]] = []
    coset_of: dict[Poly, tuple[int, ...]] = {}
    done: set[frozenset] = set()
    for c in cosets:
        key = frozenset(c)
        if key in done:
            continue
        neg_key = frozenset((-i) % m for i in c)
        f = min_poly(c)
        coset_of[f] = c
        done.add(key)
        if neg_key == key:
            self_rec.append(f)
        else:
            fs = min_poly(by_set[neg_key])
            coset_of[fs] = by_set[neg_key]
            done.add(neg_key)
            pairs.append(tuple(sorted((f, fs), key=Poly.sort_key)))  # type: ignore[arg-type]
    self_rec.sort(key=Poly.sort_key)
    pairs.sort(key=lambda pr: pr[0].sort_key())
    return FactorClassification(m, field, tuple(self_rec), tuple(pairs), coset_of)


def divisors_of_xm_minus_1(m: int, field: FieldSpec) -> list[Poly]:
    """All monic divisors of ``x^m - 1`` (products of subsets of its irreducible factors)."""
    factors = factor_xm_minus_1(m, field).factors()
    out = [Poly(field, (1,))]
    for f in factors:
        out += [g * f for g in out]
    return out
