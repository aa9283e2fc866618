"""Monomial orders defined by rational matrices.

A monomial is an exponent vector, kept as a plain tuple of nonnegative
ints.  A matrix ``A`` with full column rank whose columns each start
(from the top) with a positive entry defines the order

    a < b  iff  A a  precedes  A b  lexicographically.
"""
from __future__ import annotations

import enum
from math import lcm
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .exactlin import DimensionError, ExactMatrix, rank

__all__ = [
    "Monomial",
    "Cmp",
    "OrderError",
    "RankDeficient",
    "BadColumnSign",
    "MonomialOrder",
    "monomial",
    "degree",
    "validate",
    "classic",
    "CLASSIC_NAMES",
    "compare",
    "enumerate_monomials",
    "iter_by_degree",
    "sort_monomials",
    "first_disagreement",
]

Monomial = tuple[int, ...]

CLASSIC_NAMES = ("lex", "deglex", "revlex")


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def token(self) -> str:
        return {-1: "LT", 0: "EQ", 1: "GT"}[self.value]


class OrderError(ValueError):
    """The matrix does not define a monomial order."""

    condition = "invalid"


class RankDeficient(OrderError):
    condition = "RankDeficient"

    def __init__(self, rank: int, ncols: int):
        self.rank = rank
        self.ncols = ncols
        super().__init__(
            f"RankDeficient: rank {rank} < {ncols} columns, so the kernel contains nonzero integer vectors")


class BadColumnSign(OrderError):
    condition = "BadColumnSign"

    def __init__(self, column: int):
        self.column = column  # 1-based
        super().__init__(f"BadColumnSign({column}): first nonzero entry of column {column} is not positive")


def monomial(exps: Iterable[int]) -> Monomial:
    """Check and normalise an exponent vector."""
    m = tuple(exps)
    if not m:
        raise ValueError("a monomial needs at least one exponent")
    for x in m:
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or x < 0:
            raise ValueError(f"exponents must be nonnegative integers, got {x!r}")
    return tuple(int(x) for x in m)


def degree(m: Monomial) -> int:
    return sum(m)


class MonomialOrder:
    """A validated order matrix.  Build one with :func:`validate` or :func:`classic`."""

    __slots__ = ("matrix", "_rows")

    def __init__(self, matrix: ExactMatrix, _checked: bool = False):
        if not _checked:
            _check(matrix)
        self.matrix = matrix
        # Each row scaled by the lcm of its denominators: a positive factor per
        # coordinate leaves every lex comparison unchanged, and ints are fast.
        self._rows = tuple(
            tuple(int(x * lcm(*(y.denominator for y in row))) for x in row)
            for row in matrix.entries)

    @property
    def nvars(self) -> int:
        return self.matrix.ncols

    def key(self, m: Sequence[int]) -> tuple:
        """Sort key: ``A m`` with each coordinate scaled by a positive integer.

        Tuple comparison of keys is lex comparison of the images.  Use
        :func:`~matorder.exactlin.mat_vec` for the unscaled product.
        """
        if len(m) != self.nvars:
            raise DimensionError(f"monomial {tuple(m)} has {len(m)} exponents, order has {self.nvars} variables")
        return tuple(sum(x * y for x, y in zip(row, m)) for row in self._rows)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"MonomialOrder({self.matrix.tolist()!r})"


def _check(a: ExactMatrix):
    r = rank(a)
    if r < a.ncols:
        raise RankDeficient(r, a.ncols)
    for j in range(a.ncols):
        first = next(x for x in a.column(j) if x != 0)  # exists: full column rank
        if first < 0:
            raise BadColumnSign(j + 1)


def validate(a: ExactMatrix) -> MonomialOrder:
    """Return the order defined by ``a`` or raise :class:`OrderError`.

    Rank is checked before column signs, so a zero column reports
    RankDeficient.
    """
    if not isinstance(a, ExactMatrix):
        a = ExactMatrix.from_rows(a)
    _check(a)
    return MonomialOrder(a, _checked=True)


def classic(name: str, n: int) -> MonomialOrder:
    """Matrix of the lex, deglex or revlex order on ``n`` variables.

    lex is the identity; deglex is an all-ones row over e_1, ..., e_{n-1};
    revlex is an all-ones row over -e_n, -e_{n-1}, ..., -e_2.
    """
    if n < 1:
        raise DimensionError("need at least one variable")
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    if name == "lex":
        rows = eye
    elif name == "deglex":
        rows = [[1] * n] + eye[:n - 1]
    elif name == "revlex":
        rows = [[1] * n] + [[-x for x in eye[j]] for j in range(n - 1, 0, -1)]
    else:
        raise ValueError(f"unknown classic order {name!r}; expected one of {CLASSIC_NAMES}")
    return MonomialOrder(ExactMatrix.from_rows(rows), _checked=True)


def compare(o: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> Cmp:
    if len(a) != len(b):
        raise DimensionError(f"monomials of different arity: {len(a)} and {len(b)}")
    ka, kb = o.key(a), o.key(b)
    if ka < kb:
        return Cmp.LESS
    if ka > kb:
        return Cmp.GREATER
    if tuple(a) != tuple(b):
        raise AssertionError(f"distinct monomials {tuple(a)} and {tuple(b)} have equal images; matrix is not full rank")
    return Cmp.EQUAL


def _compositions(n: int, d: int) -> Iterator[Monomial]:
    """Exponent vectors of length n and degree d, tuple-lexicographic ascending."""
    if n == 1:
        yield (d,)
        return
    for x in range(d + 1):
        for rest in _compositions(n - 1, d - x):
            yield (x,) + rest


def enumerate_monomials(n: int, d: int, mode: str = "exactly") -> list[Monomial]:
    """All monomials in ``n`` variables of degree ``d`` (``exactly``) or at most ``d`` (``upto``).

    Output is sorted as tuples, so ``upto`` interleaves degrees.
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if mode == "exactly":
        return list(_compositions(n, d))
    if mode == "upto":
        return sorted(m for k in range(d + 1) for m in _compositions(n, k))
    raise ValueError(f"mode must be 'exactly' or 'upto', not {mode!r}")


def iter_by_degree(n: int, d: int) -> list[Monomial]:
    """Monomials of degree <= d ordered by degree, then tuple-lexicographically.

    This is the search order for witnesses and counterexamples.
    """
    return [m for k in range(d + 1) for m in _compositions(n, k)]


def sort_monomials(o: MonomialOrder, ms: Iterable[Sequence[int]]) -> list[Monomial]:
    ms = [tuple(m) for m in ms]
    for m in ms:
        if len(m) != o.nvars:
            raise DimensionError(f"monomial {m} does not have {o.nvars} exponents")
    return sorted(ms, key=o.key)


def _ranks(keys: list) -> np.ndarray:
    order = sorted(range(len(keys)), key=keys.__getitem__)
    r = np.empty(len(keys), dtype=np.int64)
    r[order] = np.arange(len(keys))
    return r


def first_disagreement(key_a: Callable, key_b: Callable,
                       ms: Sequence) -> tuple[int, int] | None:
    """Earliest pair of positions ``(i, j)``, ``i < j``, ordered oppositely by two keys.

    Pairs are scanned by ``j`` first, then ``i``, so with ``ms`` from
    :func:`iter_by_degree` the result has the smallest possible larger
    degree.  Both keys must be injective on ``ms``; then every pair is
    strictly ordered and a disagreement is exactly an inversion between
    the two induced rankings.
    """
    ra = _ranks([key_a(m) for m in ms])
    rb = _ranks([key_b(m) for m in ms])
    if np.array_equal(ra, rb):
        return None
    for j in range(1, len(ms)):
        bad = (ra[:j] < ra[j]) != (rb[:j] < rb[j])
        if bad.any():
            return int(np.argmax(bad)), j
    raise AssertionError("rankings differ but no inverted pair found")
