"""Truncated-sum evaluation with heuristic tail estimates."""

from .polylog import eval_f, eval_li
from .quadrature import (
    quadrature_f11_check,
    quadrature_lemma_check,
    term_integration_check,
)
from .result import EvalResult, PolylogPoint
from .zeta import (
    ConeEvaluator,
    decay_ceiling,
    eval_combo,
    eval_depth1,
    eval_depth2,
    eval_double_zeta,
    eval_mzv,
    eval_mzv_direct,
    eval_symbol,
    evaluate_many,
    evaluate_symbols,
    fit_decay_exponent,
    tail_estimate,
)

__all__ = [
    "ConeEvaluator",
    "EvalResult",
    "PolylogPoint",
    "decay_ceiling",
    "eval_combo",
    "eval_depth1",
    "eval_depth2",
    "eval_double_zeta",
    "eval_f",
    "eval_li",
    "eval_mzv",
    "eval_mzv_direct",
    "eval_symbol",
    "evaluate_many",
    "evaluate_symbols",
    "fit_decay_exponent",
    "quadrature_f11_check",
    "quadrature_lemma_check",
    "tail_estimate",
    "term_integration_check",
]
