"""Induced orderings: restricting an order to the monomials free of one variable.

For a square order matrix the restriction to ``x_i = 0`` is represented
by deleting column ``i`` and then the first row that is a linear
combination of the rows above it.  The literature states this step as
deleting the first *independent* row; that reading fails already on the
identity matrix, and :func:`restriction_agreement` (a brute-force check
against the definition) confirms the dependent-row reading.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactlin import DimensionError, first_dependent_row
from .orders import (MonomialOrder, Monomial, OrderError, first_disagreement,
                     iter_by_degree, validate)

__all__ = ["InducedResult", "InducedError", "NoDependentRow", "InvalidResult",
           "induced_matrix", "drop_coordinate", "insert_zero", "restriction_agreement"]


class InducedError(ValueError):
    pass


class NoDependentRow(InducedError):
    pass


class InvalidResult(InducedError):
    pass


@dataclass(frozen=True)
class InducedResult:
    parent: MonomialOrder
    removed_variable: int  # 1-based
    order: MonomialOrder
    deleted_row: int  # 1-based

    @property
    def matrix(self):
        return self.order.matrix


def drop_coordinate(m: Monomial, i: int) -> Monomial:
    """Remove the 1-based coordinate ``i``."""
    return tuple(m[:i - 1]) + tuple(m[i:])


def insert_zero(m: Monomial, i: int) -> Monomial:
    """Inverse of :func:`drop_coordinate` on vectors with a zero at ``i``."""
    return tuple(m[:i - 1]) + (0,) + tuple(m[i - 1:])


def _check_index(o: MonomialOrder, i: int):
    n = o.nvars
    if n < 2:
        raise DimensionError("induced orderings need at least two variables")
    if not 1 <= i <= n:
        raise DimensionError(f"variable index {i} outside 1..{n}")


def induced_matrix(o: MonomialOrder, i: int) -> InducedResult:
    _check_index(o, i)
    a = o.matrix
    if not a.is_square:
        raise DimensionError(f"induced_matrix needs a square order matrix, got {a.nrows}x{a.ncols}")
    reduced = a.delete_column(i - 1)
    r = first_dependent_row(reduced)
    if r is None:
        # n rows in n-1 columns are always dependent
        raise NoDependentRow(f"no dependent row after deleting column {i}")
    try:
        order = validate(reduced.delete_row(r - 1))
    except OrderError as exc:
        raise InvalidResult(f"induced matrix for variable {i} is not an order: {exc}") from exc
    return InducedResult(parent=o, removed_variable=i, order=order, deleted_row=r)


def restriction_agreement(o: MonomialOrder, i: int, d: int,
                          induced: MonomialOrder | None = None) -> tuple[Monomial, Monomial] | None:
    """Check the induced matrix against the parent order on ``x_i = 0``.

    Every pair of monomials with zero ``i``-th exponent and degree at most
    ``d`` is compared under the parent order and, with coordinate ``i``
    dropped, under the induced order (``induced`` if given, otherwise
    :func:`induced_matrix`).  Returns None when all pairs agree, else the
    first disagreeing pair as full ``n``-variable exponent vectors.
    """
    _check_index(o, i)
    if induced is None:
        induced = induced_matrix(o, i).order
    small = iter_by_degree(o.nvars - 1, d)
    hit = first_disagreement(lambda m: o.key(insert_zero(m, i)), induced.key, small)
    if hit is None:
        return None
    p, q = hit
    return insert_zero(small[p], i), insert_zero(small[q], i)
