"""Exact monomial orders given by rational matrices."""
from .exactlin import (DimensionError, ExactMatrix, det_cofactor, determinant,
                       first_dependent_row, mat_vec, rank, solve_row_combination)
from .orders import (BadColumnSign, Cmp, MonomialOrder, OrderError, RankDeficient, classic,
                     compare, enumerate_monomials, sort_monomials, validate)
from .induced import InducedResult, induced_matrix, restriction_agreement
from .equivalence import (Distinct, Equivalent, UndeterminedUpTo, distinguishing_pair,
                          equivalent, lower_factor, same_order_bounded)
from .counterexamples import (build_family, det_report, family_matrix, lexprop_chain_check,
                              verify_theorem_main)

__version__ = "0.1.0"
