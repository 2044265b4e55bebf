"""Arithmetic in small finite fields GF(p^k).

Elements are encoded as integers ``0 <= v < q``: the coefficient vector
``(c_0, ..., c_{k-1})`` over GF(p) (ascending powers of the generator ``a``)
maps to ``sum(c_i * p**i)``.  All heavy lifting goes through precomputed
``q x q`` tables, which are shared between equal :class:`FieldSpec` values and
also exposed as numpy arrays for the vectorised kernels in :mod:`qchull.linalg`.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass

import numpy as np

from ._syntax import ParseError, parse_terms

# Conway polynomials, ascending coefficients.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}

MAX_TABLE_ORDER = 2401


class FieldError(ValueError):
    """Invalid field description or element."""


class FieldMismatchError(FieldError):
    """Arithmetic between elements of different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


# --- dense polynomials over GF(p), used only to validate moduli -------------


def _ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _ptrim([c % p for c in f])
    inv_lead = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = f[-1] * inv_lead % p
        shift = len(f) - len(g)
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _ptrim(f)
    return f


def _pmulmod(f: list[int], g: list[int], mod: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fc in enumerate(f):
        if fc:
            for j, gc in enumerate(g):
                out[i + j] += fc * gc
    return _pmod(out, mod, p)


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _ptrim([c % p for c in f]), _ptrim([c % p for c in g])
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _irreducible_over_prime(mod: tuple[int, ...], p: int) -> bool:
    """Rabin-style check: no factor of degree <= k/2, via gcd with x^(p^i) - x."""
    f = list(mod)
    k = len(f) - 1
    if k == 1:
        return True
    xp = [0, 1]
    for _ in range(k // 2):
        # xp <- xp^p mod f
        acc, base, e = [1], xp, p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        xp = acc
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, diff, p)) > 1:
            return False
    return True


# --- field description --------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k) presented as GF(p)[a] / (modulus(a))."""

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    @property
    def is_square(self) -> bool:
        return self.k % 2 == 0

    @property
    def tables(self) -> _Tables:
        return _tables(self.p, self.k, self.modulus)

    def __call__(self, value: int | str | FieldElement) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, str):
            return FieldElement(self, self.parse_value(value))
        return FieldElement(self, int(value) % self.p)

    def __str__(self) -> str:
        return format_field(self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The class of ``a`` modulo the defining polynomial."""
        if self.k == 1:
            raise FieldError("prime fields have no extension generator")
        return FieldElement(self, self.p)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def from_rep(self, rep: tuple[int, ...] | list[int]) -> FieldElement:
        if len(rep) > self.k or any(not 0 <= c < self.p for c in rep):
            raise FieldError(f"bad coefficient vector {rep!r} for {self}")
        return FieldElement(self, sum(c * self.p**i for i, c in enumerate(rep)))

    def rep(self, value: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            value, c = divmod(value, self.p)
            out.append(c)
        return tuple(out)

    def value_from_terms(self, terms: dict[int, int]) -> int:
        """Evaluate ``sum(c * a**e)`` for a dict ``{e: c}`` of integer coefficients."""
        t = self.tables
        acc = 0
        for e, c in terms.items():
            c %= self.p
            if not c:
                continue
            if e and self.k == 1:
                raise FieldError(f"generator 'a' is not defined in the prime field {self}")
            term = t.mull[c][t.pow(self.p, e)] if e else c
            acc = t.addl[acc][term]
        return acc

    def parse_value(self, text: str) -> int:
        try:
            terms = parse_terms(text)
        except ParseError as exc:
            raise FieldError(str(exc)) from None
        if any(ex for ex, _ in terms):
            raise FieldError(f"field element {text!r} must not contain 'x'")
        return self.value_from_terms({ea: c for (_, ea), c in terms.items()})

    def format_value(self, value: int) -> str:
        if self.k == 1:
            return str(value)
        rep = self.rep(value)
        parts = []
        for e in range(self.k - 1, -1, -1):
            c = rep[e]
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mono = "a" if e == 1 else f"a^{e}"
                parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts) if parts else "0"


def field_make(p: int, k: int = 1, modulus: tuple[int, ...] | list[int] | None = None) -> FieldSpec:
    """Validate and build a :class:`FieldSpec`.

    ``modulus`` is an ascending coefficient list of a monic irreducible
    polynomial of degree ``k`` over GF(p).  When omitted, a Conway polynomial
    from :data:`DEFAULT_MODULI` is used (prime fields need none).
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    if modulus is None:
        if k == 1:
            modulus = (0, 1)
        elif (p, k) in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[(p, k)]
        else:
            raise FieldError(f"no default modulus for GF({p}^{k}); pass one explicitly")
    mod = list(modulus)
    while mod and mod[-1] == 0:
        mod.pop()
    if any(not 0 <= c < p for c in mod):
        raise FieldError(f"modulus coefficients must lie in [0, {p})")
    if len(mod) - 1 != k:
        raise FieldError(f"modulus has degree {len(mod) - 1}, expected {k}")
    if mod[-1] != 1:
        raise FieldError("modulus must be monic")
    if not _irreducible_over_prime(tuple(mod), p):
        raise FieldError(f"modulus {mod} is reducible over GF({p})")
    if p**k > MAX_TABLE_ORDER:
        raise FieldError(f"GF({p}^{k}) is larger than the supported {MAX_TABLE_ORDER}")
    return FieldSpec(p, k, tuple(mod))


def _split_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1 or not is_prime(p):
                break
            return p, k
    raise FieldError(f"{q} is not a prime power")


_FIELD_RE = re.compile(r"^\s*(?:q\s*=\s*)?(\d+)(?:\s*\^\s*(\d+))?\s*(?::\s*modulus\s*=\s*(.+))?$")


def parse_field(text: str | int) -> FieldSpec:
    """Parse ``q=p^k[:modulus=<poly>]`` notation, e.g. ``"4:modulus=x^2+x+1"`` or ``"5"``."""
    if isinstance(text, int):
        text = str(text)
    mt = _FIELD_RE.match(text)
    if not mt:
        raise FieldError(f"cannot parse field description {text!r}")
    base, exp, modtext = mt.groups()
    if exp is not None:
        p, k = int(base), int(exp)
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
    else:
        p, k = _split_prime_power(int(base))
    modulus = None
    if modtext is not None:
        try:
            terms = parse_terms(modtext)
        except ParseError as exc:
            raise FieldError(str(exc)) from None
        if any(ea for _, ea in terms):
            raise FieldError("a modulus is written in x only")
        deg = max((ex for ex, _ in terms), default=0)
        coeffs = [0] * (deg + 1)
        for (ex, _), c in terms.items():
            coeffs[ex] = c % p
        modulus = tuple(coeffs)
    return field_make(p, k, modulus)


def format_field(field: FieldSpec) -> str:
    """Inverse of :func:`parse_field`; the modulus is only spelled out when non-default."""
    if field.k == 1 or DEFAULT_MODULI.get((field.p, field.k)) == field.modulus:
        return str(field.q)
    terms = []
    for e in range(field.k, -1, -1):
        c = field.modulus[e]
        if not c:
            continue
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        if e == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return f"{field.q}:modulus={'+'.join(terms)}"


# --- tables ---------------------------------------------------------------------


class _Tables:
    """Addition/multiplication tables plus exp/log for one field."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        q = p**k
        self.p, self.k, self.q = p, k, q
        digits = np.zeros((q, k), dtype=np.int64)
        v = np.arange(q)
        for i in range(k):
            digits[:, i] = v % p
            v = v // p
        weights = p ** np.arange(k, dtype=np.int64)

        def encode(d: np.ndarray) -> np.ndarray:
            return (d % p) @ weights

        add = encode(digits[:, None, :] + digits[None, :, :])
        neg = encode(-digits)

        # reduction of x^i, i < 2k-1, modulo the modulus
        red = np.zeros((2 * k - 1, k), dtype=np.int64)
        for i in range(2 * k - 1):
            r = _pmod([0] * i + [1], list(modulus), p)
            red[i, : len(r)] = r
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            conv = np.zeros((q, 2 * k - 1), dtype=np.int64)
            for i in range(k):
                if digits[a, i]:
                    conv[:, i : i + k] += digits[a, i] * digits
            mul[a] = encode(conv @ red)

        # generator of the multiplicative group
        order = q - 1
        primes = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
        exp = None
        for g in range(1, q):
            seq = [1]
            for _ in range(order - 1):
                seq.append(int(mul[seq[-1], g]))
            if order == 1 or all(seq[order // r] != 1 for r in primes):
                exp = seq
                break
        assert exp is not None
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = exp[(-log[a]) % order]

        self.add = add
        self.neg = neg
        self.sub = add[:, neg]
        self.mul = mul
        self.inv = inv
        self.exp = exp
        self.log = log
        self.primitive = exp[1] if q > 2 else 1
        if k % 2 == 0:
            half = p ** (k // 2)
            frob = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                frob[a] = exp[(log[a] * half) % order]
            self.frob: np.ndarray | None = frob
        else:
            self.frob = None
        # plain-list mirrors: scalar indexing into numpy is slow in hot loops
        self.addl = add.tolist()
        self.subl = self.sub.tolist()
        self.mull = mul.tolist()
        self.negl = neg.tolist()
        self.invl = inv.tolist()

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]


@functools.lru_cache(maxsize=None)
def _tables(p: int, k: int, modulus: tuple[int, ...]) -> _Tables:
    return _Tables(p, k, modulus)


# --- elements ------------------------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def rep(self) -> tuple[int, ...]:
        return self.field.rep(self.value)

    def _other(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: FieldElement | int) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.tables.addl[self.value][b])

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.tables.subl[self.value][b])

    def __rsub__(self, other: int) -> FieldElement:
        return self.field(other) - self

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.tables.mull[self.value][b])

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.tables.negl[self.value])

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return FieldElement(self.field, self.field.tables.invl[self.value])

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return self * self.field(other).inverse()

    def __rtruediv__(self, other: int) -> FieldElement:
        return self.field(other) * self.inverse()

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.tables.pow(self.value, e))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.format_value(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self}, GF({self.field.q}))"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def frobenius_sqrt_q(a: FieldElement) -> FieldElement:
    """Return ``a ** sqrt(q)``, the involution behind Hermitian inner products."""
    frob = a.field.tables.frob
    if frob is None:
        raise FieldError(f"GF({a.field.q}) has no square-root-order subfield automorphism")
    return FieldElement(a.field, int(frob[a.value]))


def sqrt_of_minus_one(field: FieldSpec) -> FieldElement | None:
    """Least-encoded nonzero ``alpha`` with ``alpha**2 == -1``, or ``None``."""
    t = field.tables
    minus_one = t.negl[1]
    for v in range(1, field.q):
        if t.mull[v][v] == minus_one:
            return FieldElement(field, v)
    return None
