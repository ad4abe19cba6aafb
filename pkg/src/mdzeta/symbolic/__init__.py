"""Exact combinatorics: symbols, rational combinations, shuffle and stuffle."""

from .combo import LinearCombo, combo_algebra, parse_combo
from .shuffle import (
    ShuffleDiagram,
    Slot,
    axis_scan,
    diagram_count,
    diagram_term,
    diagram_to_symbol,
    integral_shuffle,
    integrator,
    interleavings,
    mzv_shuffle,
    shuffle_diagrams,
    source,
)
from .stuffle import (
    lemma_rewrite,
    mzv_stuffle,
    quasi_shuffle,
    stuffle,
    stuffle_imaginary,
    stuffle_real,
)
from .symbols import (
    MdzvSymbol,
    MzvSymbol,
    Symbol,
    Variant,
    add_exponents,
    mzv,
    parse_symbol,
    plain,
    sub,
    sup1,
    suprho,
)

__all__ = [
    "LinearCombo",
    "MdzvSymbol",
    "MzvSymbol",
    "ShuffleDiagram",
    "Slot",
    "Symbol",
    "Variant",
    "add_exponents",
    "axis_scan",
    "combo_algebra",
    "diagram_count",
    "diagram_term",
    "diagram_to_symbol",
    "integral_shuffle",
    "integrator",
    "interleavings",
    "lemma_rewrite",
    "mzv",
    "mzv_shuffle",
    "mzv_stuffle",
    "parse_combo",
    "parse_symbol",
    "plain",
    "quasi_shuffle",
    "shuffle_diagrams",
    "source",
    "stuffle",
    "stuffle_imaginary",
    "stuffle_real",
    "sub",
    "sup1",
    "suprho",
]
