"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`; there are no
tolerances anywhere.  Matrices are small and dense, stored row-major as
tuples of tuples so they can be hashed and shared freely.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

__all__ = [
    "DimensionError",
    "ExactMatrix",
    "as_fraction",
    "mat_vec",
    "determinant",
    "det_cofactor",
    "det_gauss",
    "rank",
    "first_dependent_row",
    "solve_row_combination",
]


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        # floats are refused: they would smuggle rounding in
        raise TypeError(f"expected int, str or Fraction, got {type(x).__name__}")
    return Fraction(x)


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise DimensionError("a matrix needs at least one row and one column")
        width = len(self.entries[0])
        for k, row in enumerate(self.entries, 1):
            if len(row) != width:
                raise DimensionError(f"row {k} has {len(row)} entries, expected {width}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "ExactMatrix":
        return cls(tuple(tuple(as_fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i][j]

    def row(self, k: int) -> tuple[Fraction, ...]:
        """Row ``k`` (0-based)."""
        return self.entries[k]

    def column(self, k: int) -> tuple[Fraction, ...]:
        return tuple(row[k] for row in self.entries)

    def delete_column(self, k: int) -> "ExactMatrix":
        """Copy with 0-based column ``k`` removed."""
        return ExactMatrix(tuple(row[:k] + row[k + 1:] for row in self.entries))

    def delete_row(self, k: int) -> "ExactMatrix":
        """Copy with 0-based row ``k`` removed."""
        return ExactMatrix(self.entries[:k] + self.entries[k + 1:])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.entries)))

    def scale(self, c) -> "ExactMatrix":
        c = as_fraction(c)
        return ExactMatrix(tuple(tuple(c * x for x in row) for row in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries))
        return ExactMatrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.entries
        ))

    def is_lower_triangular(self) -> bool:
        return all(self.entries[i][j] == 0
                   for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        w = max(len(c) for row in cells for c in row)
        return "\n".join("[" + " ".join(c.rjust(w) for c in row) + "]" for row in cells)


def mat_vec(a: ExactMatrix, v: Sequence[int]) -> tuple[Fraction, ...]:
    """Exact product ``a @ v`` for an integer (or rational) column vector."""
    if len(v) != a.ncols:
        raise DimensionError(f"vector of length {len(v)} against {a.ncols} columns")
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a.entries)


def _require_square(a: ExactMatrix):
    if not a.is_square:
        raise DimensionError(f"determinant of a non-square {a.nrows}x{a.ncols} matrix")


def determinant(a: ExactMatrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Rows are first cleared of denominators so the elimination runs on
    Python integers; every Bareiss division is exact.
    """
    _require_square(a)
    n = a.nrows
    scale = 1
    m = []
    for row in a.entries:
        d = lcm(*(x.denominator for x in row))
        scale *= d
        m.append([int(x * d) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1], scale)


def det_cofactor(a: ExactMatrix) -> Fraction:
    """Determinant by Laplace expansion along successive rows.

    Minors are memoised on the set of surviving columns, which keeps the
    expansion at O(n 2^n) and usable as an oracle up to n of about 16.
    """
    _require_square(a)
    n = a.nrows
    rows = a.entries

    @lru_cache(maxsize=None)
    def minor(r: int, cols: int) -> Fraction:
        # cols: bitmask of columns still available for rows r..n-1
        if r == n:
            return Fraction(1)
        total = Fraction(0)
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                x = rows[r][j]
                if x:
                    total += sign * x * minor(r + 1, cols & ~(1 << j))
                sign = -sign
        return total

    return minor(0, (1 << n) - 1)


def det_gauss(a: ExactMatrix) -> Fraction:
    """Determinant by plain Gaussian elimination over the rationals."""
    _require_square(a)
    m = a.tolist()
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        p = next((r for r in range(k, n) if m[r][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        det *= m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[r][j] -= f * m[k][j]
    return det


class _Echelon:
    """Incrementally maintained row-echelon basis (first-nonzero pivoting)."""

    def __init__(self):
        self.rows: list[tuple[int, list[Fraction]]] = []  # (pivot column, row)

    def reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        v = [as_fraction(x) for x in v]
        for piv, row in self.rows:
            c = v[piv]
            if c:
                f = c / row[piv]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, v: Sequence[Fraction]) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        r = self.reduce(v)
        piv = next((j for j, x in enumerate(r) if x), None)
        if piv is None:
            return False
        self.rows.append((piv, r))
        return True


def rank(a: ExactMatrix) -> int:
    ech = _Echelon()
    return sum(ech.add(row) for row in a.entries)


def first_dependent_row(a: ExactMatrix) -> int | None:
    """1-based index of the first row lying in the span of the rows above it.

    A zero row counts as dependent, including a zero first row.  Returns
    None when all rows are linearly independent.
    """
    ech = _Echelon()
    for k, row in enumerate(a.entries, 1):
        if not ech.add(row):
            return k
    return None


def solve_row_combination(basis, target: Sequence) -> tuple[Fraction, ...] | None:
    """Coefficients ``c`` with ``sum(c[k] * basis[k]) == target``.

    ``basis`` is an :class:`ExactMatrix` or any sequence of rows (possibly
    empty).  Returns None when ``target`` is outside the row span.  If the
    basis rows are dependent the solution is not unique; free coefficients
    are set to zero.
    """
    rows = list(basis.entries) if isinstance(basis, ExactMatrix) else [tuple(r) for r in basis]
    target = [as_fraction(x) for x in target]
    k = len(rows)
    if any(len(r) != len(target) for r in rows):
        raise DimensionError("basis rows and target differ in length")
    if k == 0:
        return () if not any(target) else None

    # Augmented system  basis^T c = target : one equation per coordinate.
    m = [[as_fraction(rows[j][i]) for j in range(k)] + [target[i]] for i in range(len(target))]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    if any(m[i][k] != 0 for i in range(r, len(m))):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = m[i][k]
    return tuple(sol)
