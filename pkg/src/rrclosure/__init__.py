"""Ratliff-Rush closures of ideal powers with respect to monomial modules."""

from .ass import (
    ass_cyclic,
    ass_ideal_subquotient,
    ass_module_quotient,
    ass_power_sequence,
    ass_rr_sequence,
    ass_successive_rr,
    brodmann_inclusion,
    corollary25_check,
    eventual_equality_check,
    grade_positive,
    regular_monomial,
)
from .closure import ClosureResult, chain_term, lemma21_check, rr_closure_general, rr_ideal, rr_power
from .errors import DegenerateInput, DimensionMismatch, ExponentOverflow, ParseError, RRError
from .instance import Instance, format_instance, gen_random, parse_instance
from .module import ModuleElement, MonomialSubmodule, QuotientPresentation
from .monomial import MonomialIdeal, MonomialPrime, ideal
from .oracle import cross_check, oracle_eval, truncate
from .reductions import ReductionVerdict, is_rr_reduction, thm28_suite, uniform_reduction_index
