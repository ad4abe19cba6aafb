"""Multiple Dedekind zeta values of quadratic fields and their double-shuffle relations."""

from .cone import RealCone, Truncation, UpperCone, enumerate_domain, make_real_cone
from .field import FieldElement, FieldSpec, Signature, make_field, parse_element
from .identity import (
    Relation,
    VerificationReport,
    compare_with_printed,
    derive_mzv_relation,
    derive_relation,
    verify_numeric,
)
from .numeric import EvalResult, PolylogPoint, eval_combo, eval_f, eval_mzv, eval_symbol
from .symbolic import (
    LinearCombo,
    integral_shuffle,
    lemma_rewrite,
    mzv,
    parse_combo,
    parse_symbol,
    stuffle,
)

__version__ = "0.1.0"

__all__ = [
    "EvalResult",
    "FieldElement",
    "FieldSpec",
    "LinearCombo",
    "PolylogPoint",
    "RealCone",
    "Relation",
    "Signature",
    "Truncation",
    "UpperCone",
    "VerificationReport",
    "compare_with_printed",
    "derive_mzv_relation",
    "derive_relation",
    "enumerate_domain",
    "eval_combo",
    "eval_f",
    "eval_mzv",
    "eval_symbol",
    "integral_shuffle",
    "lemma_rewrite",
    "make_field",
    "make_real_cone",
    "mzv",
    "parse_combo",
    "parse_element",
    "parse_symbol",
    "stuffle",
    "verify_numeric",
]
