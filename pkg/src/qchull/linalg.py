"""Exact dense matrices over GF(q), backed by numpy arrays of encoded field values."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldError, FieldMismatchError, FieldSpec
from .poly import RingElement


class MatrixError(ValueError):
    pass


class Matrix:
    """Immutable ``rows x cols`` matrix over a finite field.

    ``data`` holds encoded field values (see :mod:`qchull.gf`) and is made
    read-only on construction.
    """

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data) -> None:
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2:
            if arr.size == 0:
                arr = arr.reshape(0, 0)
            else:
                raise MatrixError(f"matrix data must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise FieldError(f"matrix entries out of range for GF({field.q})")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def _wrap(cls, field: FieldSpec, arr: np.ndarray) -> Matrix:
        out = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.int64)
        arr.setflags(write=False)
        out.field = field
        out.data = arr
        return out

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> Matrix:
        return cls._wrap(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls._wrap(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.field, self.data.shape, self.data.tobytes()))

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    @property
    def T(self) -> Matrix:
        return transpose(self)

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def __str__(self) -> str:
        fmt = self.field.format_value
        return "\n".join("[" + " ".join(fmt(int(v)) for v in row) + "]" for row in self.data)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, GF({self.field.q}))"


def _same_field(a: Matrix, b: Matrix) -> FieldSpec:
    if a.field != b.field:
        raise FieldMismatchError(f"matrices over GF({a.field.q}) and GF({b.field.q})")
    return a.field


def matmul_values(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of encoded-value arrays ``a @ b`` over ``field``."""
    if field.k == 1:
        return (a @ b) % field.p
    t = field.tables
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[1]):
        out = t.add[out, t.mul[a[:, i, None], b[None, i, :]]]
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    fld = _same_field(a, b)
    if a.cols != b.rows:
        raise MatrixError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return Matrix._wrap(fld, matmul_values(fld, a.data, b.data))


def transpose(a: Matrix) -> Matrix:
    return Matrix._wrap(a.field, a.data.T)


def conjugate(a: Matrix) -> Matrix:
    """Entrywise ``v -> v^sqrt(q)``."""
    frob = a.field.tables.frob
    if frob is None:
        raise FieldError(f"conjugation needs a square field order, got q = {a.field.q}")
    return Matrix._wrap(a.field, frob[a.data])


def conjugate_transpose(a: Matrix) -> Matrix:
    return transpose(conjugate(a))


def hstack(*blocks: Matrix) -> Matrix:
    fld = blocks[0].field
    for b in blocks[1:]:
        _same_field(blocks[0], b)
    return Matrix._wrap(fld, np.hstack([b.data for b in blocks]))


def vstack(*blocks: Matrix) -> Matrix:
    fld = blocks[0].field
    for b in blocks[1:]:
        _same_field(blocks[0], b)
    return Matrix._wrap(fld, np.vstack([b.data for b in blocks]))


def negate(a: Matrix) -> Matrix:
    return Matrix._wrap(a.field, a.field.tables.neg[a.data])


@dataclass(frozen=True)
class RrefResult:
    matrix: Matrix
    rank: int
    pivot_cols: tuple[int, ...]

    def __iter__(self):
        return iter((self.matrix, self.rank, self.pivot_cols))


def rref_values(field: FieldSpec, data: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination on an encoded-value array.

    Pivot choice is the first nonzero row at or below the current one in the
    leftmost remaining column, so the output is deterministic.
    """
    M = np.array(data, dtype=np.int64, copy=True)
    rows, cols = M.shape
    t = field.tables
    prime = field.k == 1
    p = field.p
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        lead = int(M[r, c])
        if lead != 1:
            M[r] = t.mul[t.inv[lead], M[r]]
        factors = M[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            if prime:
                M[hit] = (M[hit] - np.outer(factors[hit], M[r])) % p
            else:
                M[hit] = t.sub[M[hit], t.mul[factors[hit, None], M[r][None, :]]]
        pivots.append(c)
        r += 1
    return M, pivots


def rref(a: Matrix) -> RrefResult:
    M, pivots = rref_values(a.field, a.data)
    return RrefResult(Matrix._wrap(a.field, M), len(pivots), tuple(pivots))


def rank(a: Matrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    return len(rref_values(a.field, a.data)[1])


def circulant(a: RingElement) -> Matrix:
    """``m x m`` matrix whose row ``i`` holds the coefficients of ``x^i * a(x) mod x^m - 1``."""
    v = np.array(a.vector(), dtype=np.int64)
    m = a.m
    idx = (np.arange(m)[None, :] - np.arange(m)[:, None]) % m
    return Matrix._wrap(a.field, v[idx])
