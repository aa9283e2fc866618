"""Deciding whether two order matrices define the same monomial order.

If ``B = L A`` with ``L`` lower triangular and positive on the diagonal,
``A`` and ``B`` define the same order.  Nothing guarantees the converse,
so when no factor exists the best we can do is a bounded search for a
pair of monomials the two orders rank differently.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exactlin import DimensionError, ExactMatrix, solve_row_combination
from .orders import Cmp, Monomial, MonomialOrder, compare, first_disagreement, iter_by_degree

__all__ = [
    "Equivalent", "Distinct", "UndeterminedUpTo", "Verdict",
    "lower_factor", "same_order_bounded", "distinguishing_pair", "equivalent",
    "default_degree_bound", "invert_lower",
]


@dataclass(frozen=True)
class Equivalent:
    certificate: ExactMatrix  # L with L @ A == B

    name = "EQUIVALENT"


@dataclass(frozen=True)
class Distinct:
    witness: tuple[Monomial, Monomial]
    cmp_a: Cmp
    cmp_b: Cmp

    name = "DISTINCT"


@dataclass(frozen=True)
class UndeterminedUpTo:
    degree: int

    name = "UNDETERMINED"


Verdict = Union[Equivalent, Distinct, UndeterminedUpTo]


def default_degree_bound(n: int) -> int:
    """8 up to five variables, 5 beyond; keeps brute force near 10^7 comparisons."""
    return 8 if n <= 5 else 5


def _same_nvars(a: MonomialOrder, b: MonomialOrder):
    if a.nvars != b.nvars:
        raise DimensionError(f"orders on {a.nvars} and {b.nvars} variables")


def lower_factor(a: MonomialOrder, b: MonomialOrder) -> ExactMatrix | None:
    """Lower triangular ``L`` with positive diagonal and ``L @ A == B``, or None.

    Row ``k`` of ``B`` is solved against rows ``1..k`` of ``A``.  If row
    ``k`` of ``A`` is independent of the rows above it, its coefficient is
    forced; otherwise it is free and is fixed to 1.  Either way None means
    no such ``L`` exists.
    """
    _same_nvars(a, b)
    A, B = a.matrix, b.matrix
    if A.shape != B.shape:
        return None
    m = A.nrows
    rows = []
    for k in range(m):
        above = A.entries[:k]
        if solve_row_combination(above, A.row(k)) is None:
            c = solve_row_combination(A.entries[:k + 1], B.row(k))
            if c is None or c[k] <= 0:
                return None
        else:
            c = solve_row_combination(above, [x - y for x, y in zip(B.row(k), A.row(k))])
            if c is None:
                return None
            c = c + (Fraction(1),)
        rows.append(list(c) + [Fraction(0)] * (m - k - 1))
    L = ExactMatrix.from_rows(rows)
    assert L @ A == B
    return L


def invert_lower(L: ExactMatrix) -> ExactMatrix:
    """Inverse of a lower triangular matrix with nonzero diagonal, by forward substitution."""
    n = L.nrows
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for i in range(j, n):
            s = Fraction(int(i == j)) - sum((L[i, k] * inv[k][j] for k in range(j, i)), Fraction(0))
            inv[i][j] = s / L[i, i]
    return ExactMatrix.from_rows(inv)


def same_order_bounded(a: MonomialOrder, b: MonomialOrder, d: int) -> tuple[Monomial, Monomial] | None:
    """Brute force over all pairs of distinct monomials of degree <= d.

    Returns None if the orders agree on every pair, else the first
    disagreeing pair (by larger degree, then enumeration order).
    """
    _same_nvars(a, b)
    ms = iter_by_degree(a.nvars, d)
    hit = first_disagreement(a.key, b.key, ms)
    return None if hit is None else (ms[hit[0]], ms[hit[1]])


def distinguishing_pair(a: MonomialOrder, b: MonomialOrder, d: int) -> tuple[Monomial, Monomial] | None:
    pair = same_order_bounded(a, b, d)
    if pair is not None:
        ca, cb = compare(a, *pair), compare(b, *pair)
        assert ca != Cmp.EQUAL and ca == -cb, pair
    return pair


def equivalent(a: MonomialOrder, b: MonomialOrder, d: int | None = None) -> Verdict:
    """Certificate if one exists in either direction, else a witness, else undetermined."""
    _same_nvars(a, b)
    if d is None:
        d = default_degree_bound(a.nvars)
    L = lower_factor(a, b)
    if L is not None:
        return Equivalent(L)
    L = lower_factor(b, a)
    if L is not None:
        return Equivalent(invert_lower(L))
    pair = distinguishing_pair(a, b, d)
    if pair is not None:
        return Distinct(pair, compare(a, *pair), compare(b, *pair))
    return UndeterminedUpTo(d)
