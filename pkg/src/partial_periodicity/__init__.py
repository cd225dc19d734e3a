"""Optimal thresholds for the periodicity lemma on partial words."""

from .closedform import (
    LinearForm,
    Piece,
    PiecewiseThreshold,
    eval_piecewise,
    g_tilde_piecewise,
    l_d_piecewise,
    l_piecewise,
    special_points,
)
from .errors import ArithmeticOverflowError, BudgetExceededError, TrivialInstanceError
from .oracle import PQGraph, h_oracle, h_oracle_exhaustive, l_oracle, min_vertex_separator
from .rationals import (
    ContinuedFraction,
    Fraction,
    best_approximations,
    cf_expand,
    cf_value,
    farey_pairs_slow,
    left_k,
    right_k,
    semiconvergents,
)
from .sturmian import DirectiveSequence, SturmianWord, l_d_via_sturmian, st_pq
from .thresholds import (
    g,
    g_tilde,
    h_d_direct,
    h_full,
    h_s,
    l_d_fast,
    l_d_linear,
    l_full,
    l_s,
    l_two,
)
from .words import PartialWord, extremal_word_s, fine_wilf_word, has_strong_period, special_word, w_word

__all__ = [name for name in dir() if not name.startswith("_")]
