"""Generic linear codes: canonical bases, duals, hulls, and minimum distance.

Everything here works on explicit generator matrices and is deliberately
independent of the polynomial formulas in :mod:`qchull.qc` and
:mod:`qchull.fc`, which it is used to check.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np

from .gf import FieldSpec
from .linalg import (
    Matrix,
    conjugate_transpose,
    mat_mul,
    rank,
    rref_values,
    transpose,
    vstack,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 15


class CodeError(ValueError):
    pass


class DistanceBudgetExceeded(RuntimeError):
    """Raised when distance enumeration would exceed its budget.

    ``upper_bound`` is the least weight seen so far and ``lower_bound`` the
    proven bound at the point of abort.
    """

    def __init__(self, upper_bound: int, lower_bound: int, examined: int, budget: int):
        super().__init__(
            f"distance budget {budget} exceeded after {examined} codewords; "
            f"{lower_bound} <= d <= {upper_bound}"
        )
        self.upper_bound = upper_bound
        self.lower_bound = lower_bound
        self.examined = examined
        self.budget = budget


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Linear ``[n, k]`` code given by its generator matrix in RREF."""

    gen: Matrix
    pivots: tuple[int, ...]

    @property
    def field(self) -> FieldSpec:
        return self.gen.field

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}], GF({self.field.q}))"


def code_from_rows(rows: Matrix) -> LinearCode:
    """Row space of ``rows`` (rank-deficient input is fine)."""
    if rows.cols == 0:
        raise CodeError("cannot build a code of length 0")
    M, pivots = rref_values(rows.field, rows.data)
    return LinearCode(Matrix._wrap(rows.field, M[: len(pivots)]), tuple(pivots))


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(Matrix.zeros(field, 0, n), ())


def dual(C: LinearCode) -> LinearCode:
    """Euclidean dual, read off the RREF basis: one vector per non-pivot column."""
    n, fld = C.n, C.field
    neg = fld.tables.neg
    free = [j for j in range(n) if j not in set(C.pivots)]
    H = np.zeros((len(free), n), dtype=np.int64)
    G = C.gen.data
    for r, j in enumerate(free):
        H[r, j] = 1
        for i, pc in enumerate(C.pivots):
            H[r, pc] = neg[G[i, j]]
    if not free:
        return zero_code(fld, n)
    return code_from_rows(Matrix._wrap(fld, H))


def hull_dim_oracle(C: LinearCode) -> int:
    """``k - rank(G G^T)``."""
    if C.k == 0:
        return 0
    return C.k - rank(mat_mul(C.gen, transpose(C.gen)))


def hull_dim_intersection(C: LinearCode) -> int:
    """``dim(C cap C^perp)`` from the stacked bases: ``k + (n - k) - rank``."""
    D = dual(C)
    if C.k == 0 or D.k == 0:
        return 0
    return C.k + D.k - rank(vstack(C.gen, D.gen))


def hermitian_hull_dim_oracle(C: LinearCode) -> int:
    """``k - rank(G conj(G)^T)``; needs a square field order."""
    herm = conjugate_transpose(C.gen)  # raises for non-square q
    if C.k == 0:
        return 0
    return C.k - rank(mat_mul(C.gen, herm))


def is_lcp_oracle(C: LinearCode, D: LinearCode) -> bool:
    """``C (+) D = F_q^n``: complementary dimensions and full stacked rank."""
    if C.n != D.n or C.field != D.field:
        raise CodeError("LCP needs codes of equal length over one field")
    if C.k + D.k != C.n:
        return False
    return rank(vstack(C.gen, D.gen)) == C.n


# --- minimum distance --------------------------------------------------------------


def _information_sets(C: LinearCode) -> list[tuple[np.ndarray, int]]:
    """Generator matrices systematic on pairwise disjoint column sets.

    Returns ``(G_j, defect_j)`` where ``G_j`` has ``k - defect_j`` of its
    pivot columns in a block disjoint from all earlier blocks.  The first
    entry is the RREF basis itself (defect 0).
    """
    fld = C.field
    G = C.gen.data
    out = [(G, 0)]
    used = set(C.pivots)
    while len(used) < C.n:
        fresh = [j for j in range(C.n) if j not in used]
        order = fresh + sorted(used)
        M, piv = rref_values(fld, G[:, order])
        new = [order[c] for c in piv if order[c] not in used]
        if not new:
            break
        out.append((M[:, np.argsort(order)], C.k - len(new)))
        used.update(new)
    return out


def _supports_and_values(k: int, w: int, q: int):
    sup = np.array(list(itertools.combinations(range(k), w)), dtype=np.int64).reshape(-1, w)
    tails = list(itertools.product(range(1, q), repeat=w - 1))
    vals = np.ones((len(tails), w), dtype=np.int64)
    if w > 1:
        vals[:, 1:] = np.array(tails, dtype=np.int64)
    return sup, vals


def _weight_w_min(field: FieldSpec, G: np.ndarray, w: int) -> tuple[int, int]:
    """Least weight over messages of weight exactly ``w`` (one per scalar class).

    Returns ``(min_weight, count)``; codewords are built as sums of scaled rows.
    """
    t = field.tables
    k, n = G.shape
    q = field.q
    sup, vals = _supports_and_values(k, w, q)
    nv = len(vals)
    best = n + 1
    per_chunk = max(1, _CHUNK // max(1, nv))
    vchunk = min(nv, _CHUNK)
    prime = field.k == 1
    for s0 in range(0, len(sup), per_chunk):
        S = sup[s0 : s0 + per_chunk]
        for v0 in range(0, nv, vchunk):
            V = vals[v0 : v0 + vchunk]
            acc = np.zeros((len(S), len(V), n), dtype=np.int64)
            for j in range(w):
                rows = G[S[:, j]]  # (s, n)
                if prime:
                    acc += V[None, :, j, None] * rows[:, None, :]
                else:
                    acc = t.add[acc, t.mul[V[None, :, j, None], rows[:, None, :]]]
            if prime:
                acc %= field.p
            wt = int(np.count_nonzero(acc, axis=2).min())
            best = min(best, wt)
    count = len(sup) * nv
    return best, count


def min_distance(
    C: LinearCode,
    budget: int = DEFAULT_BUDGET,
    method: str = "infoset",
    stop_below: int | None = None,
) -> int:
    """Exact minimum Hamming weight of a nonzero codeword.

    Messages are enumerated by increasing weight, one per scalar class
    (first nonzero entry equal to 1).  ``method="enumerate"`` walks the whole
    message space on the RREF basis.  ``method="infoset"`` repeats the walk
    on generator matrices that are systematic on disjoint column blocks and
    stops as soon as no unseen codeword can be lighter than the best found:
    after message weight ``w`` on a block of defect ``e``, every unseen
    codeword has at least ``w + 1 - e`` nonzeros inside that block.

    With ``stop_below=t`` the search returns as soon as a codeword of weight
    below ``t`` turns up; results ``>= t`` are still exact.
    """
    if C.k == 0:
        raise CodeError("minimum distance of the zero code is undefined")
    if method not in ("infoset", "enumerate"):
        raise ValueError(f"unknown method {method!r}")
    fld = C.field
    k = C.k
    sets = _information_sets(C) if method == "infoset" else [(C.gen.data, 0)]
    defects = [e for _, e in sets]

    def contribution(e: int, w: int) -> int:
        return max(0, w + 1 - e)

    best = C.n + 1
    examined = 0
    for w in range(1, k + 1):
        for j, (G, e) in enumerate(sets):
            if j and contribution(e, w) == 0:
                continue
            lower = sum(contribution(d, w) for d in defects[:j]) + sum(
                contribution(d, w - 1) for d in defects[j:]
            )
            if method == "infoset" and best <= lower:
                return best
            size = math.comb(k, w) * (fld.q - 1) ** (w - 1)
            if examined + size > budget:
                raise DistanceBudgetExceeded(min(best, C.n), min(best, lower), examined, budget)
            wt, cnt = _weight_w_min(fld, G, w)
            examined += cnt
            best = min(best, wt)
            if stop_below is not None and best < stop_below:
                return best
        if method == "infoset" and best <= sum(contribution(d, w) for d in defects):
            log.debug("d = %d settled at message weight %d (%d blocks)", best, w, len(sets))
            return best
    return best


def security_parameter(C: LinearCode, D: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """``min(d(C), d(D^perp))`` for a pair of codes."""
    return min(min_distance(C, budget), min_distance(dual(D), budget))
