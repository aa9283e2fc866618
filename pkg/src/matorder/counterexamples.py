"""Two distinct monomial orders with identical induced orderings.

For n >= 4 the matrices C_n and D_n below agree in every row except one
weight row.  They define different orders on n variables, yet after
deleting any one variable the two induced matrices differ by a lower
triangular factor with positive diagonal, so every induced ordering
coincides.

This module builds the two families, checks each of those claims by
exact computation, tabulates all relevant determinants against their
published closed forms, and replays the comparison chains used to show
that lex and revlex *are* determined by their induced orderings.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .equivalence import Equivalent, Verdict, distinguishing_pair, equivalent
from .exactlin import DimensionError, ExactMatrix, determinant, mat_vec
from .induced import drop_coordinate, induced_matrix
from .orders import Cmp, Monomial, MonomialOrder, classic, compare, enumerate_monomials, validate

__all__ = [
    "FAMILIES", "family_matrix", "build_family", "closed_form", "published_witness",
    "WitnessEvidence", "InducedCheck", "MainTheoremReport", "verify_theorem_main",
    "DetEntry", "det_report", "Link", "ChainFailure", "ChainReport",
    "CHAIN_CASES", "lexprop_chain_check",
]

FAMILIES = ("C", "D")


def _check_n(n: int):
    if n < 4:
        raise DimensionError(f"the C/D construction needs n >= 4, got {n}")


def family_matrix(family: str, n: int) -> ExactMatrix:
    """The raw n x n matrix C_n or D_n.

    Rows: all ones; rows with 1 in columns 1 and j for j = 2..n-2; the
    weight row; e_n.  The C weight row is ((n^2+n+2)/2, n-1, ..., 2, 1).
    The D weight row starts with (n^2-n)/2 and has the entries in columns
    n-2 and n-1 swapped.
    """
    _check_n(n)
    if family not in FAMILIES:
        raise ValueError(f"family must be 'C' or 'D', not {family!r}")
    rows = [[1] * n]
    for j in range(2, n - 1):
        r = [0] * n
        r[0] = 1
        r[j - 1] = 1
        rows.append(r)
    weight = list(range(n - 1, 0, -1))
    if family == "C":
        weight = [(n * n + n + 2) // 2] + weight
    else:
        weight = [(n * n - n) // 2] + weight
        weight[n - 3], weight[n - 2] = weight[n - 2], weight[n - 3]
    rows.append(weight)
    rows.append([0] * (n - 1) + [1])
    return ExactMatrix.from_rows(rows)


def build_family(family: str, n: int) -> MonomialOrder:
    return validate(family_matrix(family, n))


def closed_form(family: str, n: int, i: int | None = None) -> tuple[str, int]:
    """Published closed form for det of the family matrix (``i`` None) or its i-th minor.

    The i-th minor deletes column ``i`` and row ``n``.  Returns a label for
    the case and its value.
    """
    two = 1 if family == "C" else 2
    if i is None:
        return (f"det({family}_n)", 4 - 3 * n if family == "C" else 5 - 2 * n)
    if i == 1:
        return (f"det({family}_{{n,1}})", two * (-1) ** n)
    if 2 <= i <= n - 2:
        return (f"det({family}_{{n,i}})", two * (-1) ** (n + i - 2))
    if i == n - 1:
        return (f"det({family}_{{n,n-1}})", -2 * n if family == "C" else -1 - 2 * n)
    if i == n:
        return (f"det({family}_{{n,n}})", 4 - 3 * n if family == "C" else 5 - 2 * n)
    raise ValueError(f"index {i} outside 1..{n}")


def published_witness(n: int) -> tuple[Monomial, Monomial]:
    """The pair printed as separating C_n from D_n: (2,0,..,0,n,n^2,2) and (4,0,..,0,n^2,n,1).

    Both C_n and D_n start with an all-ones row and these two have
    different degrees, so both orders rank them the same way.  Kept for
    the report; the shipped witness comes from search.
    """
    _check_n(n)
    zeros = (0,) * (n - 4)
    return (2,) + zeros + (n, n * n, 2), (4,) + zeros + (n * n, n, 1)


@dataclass(frozen=True)
class WitnessEvidence:
    pair: tuple[Monomial, Monomial]
    c_images: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]
    d_images: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]
    cmp_c: Cmp
    cmp_d: Cmp

    @property
    def separates(self) -> bool:
        return self.cmp_c != Cmp.EQUAL and self.cmp_c == -self.cmp_d

    @classmethod
    def evaluate(cls, c: MonomialOrder, d: MonomialOrder, pair) -> "WitnessEvidence":
        a, b = pair
        ca, cb = mat_vec(c.matrix, a), mat_vec(c.matrix, b)
        da, db = mat_vec(d.matrix, a), mat_vec(d.matrix, b)
        # recomputed from the raw products, independent of MonomialOrder.key
        def lexcmp(x, y):
            return Cmp.LESS if x < y else Cmp.GREATER if x > y else Cmp.EQUAL
        return cls(pair, (ca, cb), (da, db), lexcmp(ca, cb), lexcmp(da, db))


@dataclass(frozen=True)
class InducedCheck:
    i: int
    deleted_row_c: int
    deleted_row_d: int
    det_c: Fraction
    det_d: Fraction
    closed_c: int
    closed_d: int
    verdict: Verdict

    @property
    def det_c_match(self) -> bool:
        return self.det_c == self.closed_c

    @property
    def det_d_match(self) -> bool:
        return self.det_d == self.closed_d

    @property
    def cramer_ratio(self) -> Fraction:
        return self.det_d / self.det_c

    @property
    def certificate_ok(self) -> bool:
        """Certificate has the shape [[I, 0], [row]] and last diagonal det(D_i)/det(C_i)."""
        if not isinstance(self.verdict, Equivalent):
            return False
        L = self.verdict.certificate
        m = L.nrows
        eye = ExactMatrix.identity(m - 1)
        top_ok = all(L[r, c] == eye[r, c] for r in range(m - 1) for c in range(m - 1)) \
            and all(L[r, m - 1] == 0 for r in range(m - 1))
        return top_ok and L[m - 1, m - 1] > 0 and L[m - 1, m - 1] == self.cramer_ratio


@dataclass
class MainTheoremReport:
    n: int
    degree_bound: int
    witness_bound: int
    c_matrix: ExactMatrix
    d_matrix: ExactMatrix
    valid_c: bool
    valid_d: bool
    det_c: Fraction
    det_d: Fraction
    witness: WitnessEvidence | None
    printed_witness: WitnessEvidence
    induced: list[InducedCheck] = field(default_factory=list)

    @property
    def det_c_closed(self) -> int:
        return closed_form("C", self.n)[1]

    @property
    def det_d_closed(self) -> int:
        return closed_form("D", self.n)[1]

    @property
    def distinct(self) -> bool:
        return self.witness is not None and self.witness.separates

    @property
    def all_induced_equivalent(self) -> bool:
        return len(self.induced) == self.n and all(
            isinstance(c.verdict, Equivalent) and c.certificate_ok for c in self.induced)

    @property
    def certified(self) -> bool:
        return self.valid_c and self.valid_d and self.distinct and self.all_induced_equivalent


def verify_theorem_main(n: int, d: int = 6, witness_bound: int | None = None) -> MainTheoremReport:
    """Machine-check the C_n / D_n counterexample.

    ``d`` bounds the brute-force fallback of each induced equivalence test
    and, unless ``witness_bound`` is given, the search for a pair separating
    C_n from D_n.  The first separating pair has degree 4, 5, 7, 8 for
    n = 4..7 and grows further with n, so large n needs a larger
    ``witness_bound``.
    """
    _check_n(n)
    c, dd = build_family("C", n), build_family("D", n)
    wb = d if witness_bound is None else witness_bound
    pair = distinguishing_pair(c, dd, wb)
    report = MainTheoremReport(
        n=n, degree_bound=d, witness_bound=wb,
        c_matrix=c.matrix, d_matrix=dd.matrix, valid_c=True, valid_d=True,
        det_c=determinant(c.matrix), det_d=determinant(dd.matrix),
        witness=None if pair is None else WitnessEvidence.evaluate(c, dd, pair),
        printed_witness=WitnessEvidence.evaluate(c, dd, published_witness(n)),
    )
    for i in range(1, n + 1):
        ic, id_ = induced_matrix(c, i), induced_matrix(dd, i)
        report.induced.append(InducedCheck(
            i=i, deleted_row_c=ic.deleted_row, deleted_row_d=id_.deleted_row,
            det_c=determinant(ic.matrix), det_d=determinant(id_.matrix),
            closed_c=closed_form("C", n, i)[1], closed_d=closed_form("D", n, i)[1],
            verdict=equivalent(ic.order, id_.order, d),
        ))
    return report


@dataclass(frozen=True)
class DetEntry:
    n: int
    family: str
    i: int | None  # None for the full matrix
    label: str
    value: Fraction
    closed_form: int

    @property
    def match(self) -> bool:
        return self.value == self.closed_form

    @property
    def nonzero(self) -> bool:
        return self.value != 0


def det_report(n_min: int, n_max: int) -> list[DetEntry]:
    """Every determinant the construction relies on, for n_min <= n <= n_max.

    Minors are taken literally (column ``i`` and row ``n`` deleted), not
    through :func:`induced_matrix`, so this table is an independent check
    of the induced construction.
    """
    _check_n(n_min)
    if n_max < n_min:
        raise ValueError("empty range")
    out = []
    for n in range(n_min, n_max + 1):
        for fam in FAMILIES:
            m = family_matrix(fam, n)
            label, cf = closed_form(fam, n)
            out.append(DetEntry(n, fam, None, label, determinant(m), cf))
            rows = range(n - 1)
            for i in range(1, n + 1):
                minor = m.submatrix(rows, [j for j in range(n) if j != i - 1])
                label, cf = closed_form(fam, n, i)
                out.append(DetEntry(n, fam, i, label, determinant(minor), cf))
    return out


# --- chains from the proof that lex / revlex are determined by induced orders ---

@dataclass(frozen=True)
class Link:
    left: Monomial
    right: Monomial
    strict: bool
    index: int  # 1-based variable whose induced order justifies the link


@dataclass(frozen=True)
class ChainFailure:
    case: str
    alpha: Monomial
    beta: Monomial
    link: int | None  # 0-based link position, None when the conclusion itself failed
    reason: str


@dataclass
class ChainReport:
    n: int
    d: int
    counts: dict[str, int]
    failure: ChainFailure | None

    @property
    def passed(self) -> bool:
        return self.failure is None and all(self.counts.values())


def _e(n: int, k: int, c: int) -> Monomial:
    v = [0] * n
    v[k - 1] = c
    return tuple(v)


def _lex_chain(alpha, beta):
    n = len(alpha)
    k = next(j for j in range(n) if alpha[j] != beta[j]) + 1
    if k > 1:
        zero = (0,) * (k - 1)
        return "lex k>1", [Link(zero + alpha[k - 1:], zero + beta[k - 1:], True, 1)]
    mid1 = (alpha[0], sum(alpha[1:])) + (0,) * (n - 2)
    mid2 = (beta[0],) + (0,) * (n - 1)
    return "lex k=1", [Link(alpha, mid1, False, 1), Link(mid1, mid2, True, n), Link(mid2, beta, False, 1)]


def _revlex_chain(alpha, beta):
    # alpha, beta: equal degree, complementary supports, alpha_n != 0
    n = len(alpha)
    d = sum(alpha)
    k = max(j for j in range(1, n + 1) if beta[j - 1])
    top = _e(n, n - 1, d)
    if k < n - 1:
        return "revlex case 1", [Link(alpha, top, True, k), Link(top, _e(n, k, d), True, n),
                                 Link(_e(n, k, d), beta, False, n)]
    head = alpha[:n - 2]
    if all(head):
        moved = list(alpha)
        moved[0] += moved[n - 3]
        moved[n - 3] = 0
        moved = tuple(moved)
        return "revlex case 2", [Link(alpha, moved, True, n - 1), Link(moved, top, True, n - 2)]
    if not any(head):
        return "revlex case 3", [Link(_e(n, n, d), top, True, 1), Link(top, beta, True, n)]
    if alpha[n - 3] == 0:
        return "revlex case 4", [Link(alpha, top, True, n - 2), Link(top, beta, True, n)]
    l = next(j for j in range(1, n - 2) if alpha[j - 1] == 0)
    return "revlex case 5", [Link(alpha, top, True, l), Link(top, beta, True, n)]


CHAIN_CASES = ("lex k>1", "lex k=1") + tuple(f"revlex case {c}" for c in range(1, 6))


def _positive_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cut in combinations(range(1, total), parts - 1):
        b = (0,) + cut + (total,)
        yield tuple(b[t + 1] - b[t] for t in range(parts))


def _revlex_instances(n: int, d: int):
    """All (alpha, beta) of equal degree <= d with complementary supports and alpha_n > 0."""
    for k in range(1, d + 1):
        yield from _revlex_instances_exact(n, k)


def _revlex_instances_exact(n: int, d: int):
    for size in range(1, n):
        for S in combinations(range(n - 1), size):
            T = [j for j in range(n) if j not in S]
            for bs in _positive_compositions(d, len(S)):
                for as_ in _positive_compositions(d, len(T)):
                    a, b = [0] * n, [0] * n
                    for j, x in zip(T, as_):
                        a[j] = x
                    for j, x in zip(S, bs):
                        b[j] = x
                    yield tuple(a), tuple(b)


def _lex_instances(n: int, d: int):
    ms = enumerate_monomials(n, d, "upto")  # tuple order is lex order
    for p in range(len(ms)):
        for q in range(p + 1, len(ms)):
            yield ms[p], ms[q]


@lru_cache(maxsize=None)
def _induced_classic(name: str, n: int, i: int) -> MonomialOrder:
    return induced_matrix(classic(name, n), i).order


def _check_chain(name, n, case, alpha, beta, links) -> ChainFailure | None:
    full = classic(name, n)
    for pos, link in enumerate(links):
        if link.left[link.index - 1] != link.right[link.index - 1]:
            return ChainFailure(case, alpha, beta, pos, f"exponent {link.index} differs across the link")
        sub = _induced_classic(name, n, link.index)
        got = compare(sub, drop_coordinate(link.left, link.index), drop_coordinate(link.right, link.index))
        ok = got == Cmp.LESS or (not link.strict and got == Cmp.EQUAL)
        if not ok:
            return ChainFailure(case, alpha, beta, pos, f"induced order {link.index} gives {got.token}")
        if compare(full, link.left, link.right) != got:
            return ChainFailure(case, alpha, beta, pos, "full order disagrees with its induced order")
    if compare(full, alpha, beta) != Cmp.LESS:
        return ChainFailure(case, alpha, beta, None, f"{name} does not put alpha below beta")
    return None


def lexprop_chain_check(n: int, d: int, samples: int = 100, seed: int = 0) -> ChainReport:
    """Replay every displayed chain for lex (two cases) and revlex (five cases).

    Instances: lex uses all pairs alpha <lex beta of degree <= d; revlex
    uses all equal-degree pairs of degree <= d with complementary supports and alpha_n > 0.
    Each case is checked on every instance when there are at most
    ``samples`` of them, otherwise on a seeded random sample of that size.
    A link holds if both sides share the exponent of its variable and the
    induced classic order (built by :func:`induced_matrix`) and the full
    order both give the displayed relation.
    """
    if n < 4 or d < 1:
        raise ValueError("need n >= 4 and d >= 1")
    pools: dict[str, list] = {c: [] for c in CHAIN_CASES}
    for name, gen, chain in (("lex", _lex_instances, _lex_chain),
                             ("revlex", _revlex_instances, _revlex_chain)):
        for alpha, beta in gen(n, d):
            case, links = chain(alpha, beta)
            pools[case].append((name, alpha, beta, links))
    rng = random.Random(seed)
    counts = {}
    for case in CHAIN_CASES:
        pool = pools[case]
        chosen = pool if len(pool) <= samples else rng.sample(pool, samples)
        counts[case] = len(chosen)
        for name, alpha, beta, links in chosen:
            fail = _check_chain(name, n, case, alpha, beta, links)
            if fail is not None:
                return ChainReport(n, d, counts, fail)
    return ChainReport(n, d, counts, None)
