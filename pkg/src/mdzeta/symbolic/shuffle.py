"""Integral shuffle: interleaving integration variables axis by axis.

A product of two iterated integrals over membranes is a sum over all ways of
interleaving the integration variables of the factors, independently on each
axis.  Each interleaving (a *diagram*) is one iterated integral whose value
is read off by :func:`axis_scan`: walking the variables from the outermost
(largest) inwards, a ``Source`` slot switches on the exponential of its
generator and every slot integrates once, dividing by the sum of the
generators switched on so far.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import MalformedDiagram
from .combo import LinearCombo
from .symbols import MdzvSymbol, MzvSymbol, Variant

ALPHA = "alpha"
BETA = "beta"

SRC = "src"
INT = "int"


@dataclass(frozen=True)
class Slot:
    """One integration variable: a 2-form carrying ``f0`` (source) or a bare ``dt``."""

    kind: str
    gen: str
    label: str = ""

    @property
    def is_source(self) -> bool:
        return self.kind == SRC

    def __str__(self) -> str:
        return self.label or (f"S[{self.gen}]" if self.is_source else f"I[{self.gen}]")


def source(gen: str, label: str = "") -> Slot:
    return Slot(SRC, gen, label)


def integrator(gen: str, label: str = "") -> Slot:
    return Slot(INT, gen, label)


@dataclass(frozen=True)
class ShuffleDiagram:
    axis1: tuple[Slot, ...]
    axis2: tuple[Slot, ...]


def interleavings(p: int, q: int) -> list[tuple[int, ...]]:
    """All order-preserving merges of words of lengths ``p`` and ``q``.

    A pattern lists, slot by slot, which word (0 or 1) the slot comes from.
    Patterns are ordered by the positions of the first word's slots,
    lexicographically.
    """
    if p < 0 or q < 0:
        raise ValueError("word lengths must be non-negative")
    out = []
    for pos in itertools.combinations(range(p + q), p):
        chosen = set(pos)
        out.append(tuple(0 if i in chosen else 1 for i in range(p + q)))
    return out


def merge(w0, w1, pattern) -> tuple:
    it = (iter(w0), iter(w1))
    return tuple(next(it[k]) for k in pattern)


def axis_scan(slots) -> list[tuple[tuple[str, ...], int]]:
    """Denominator factors ``(linear form, exponent)`` of one axis.

    >>> axis_scan([source("a"), integrator("a"), source("b"), integrator("b")])
    [(('a',), 2), (('a', 'b'), 2)]
    """
    active: list[str] = []
    factors: list[list] = []
    for slot in slots:
        if slot.is_source:
            if slot.gen not in active:
                active.append(slot.gen)
        elif not active:
            raise MalformedDiagram("integration before any source diverges at infinity")
        form = tuple(sorted(active))
        if factors and factors[-1][0] == form:
            factors[-1][1] += 1
        else:
            factors.append([form, 1])
    return [(f, e) for f, e in factors]


def _read_axis(slots) -> tuple[str, int, int]:
    factors = axis_scan(slots)
    if len(factors) != 2 or len(factors[0][0]) != 1 or len(factors[1][0]) != 2:
        raise MalformedDiagram(f"expected lone generator then pair sum, got {factors}")
    (lone,), x = factors[0]
    return lone, x, factors[1][1]


def diagram_to_symbol(d: ShuffleDiagram) -> MdzvSymbol:
    """Map a two-generator diagram to its canonical zeta symbol.

    When both axes switch on the same generator first the term is
    ``z1``; otherwise it is ``zr``, named so that the lone generator of the
    second axis is ``alpha``.  Renaming is harmless because the pair sum is
    symmetric in its two summation variables.
    """
    lone1, a, b = _read_axis(d.axis1)
    lone2, c, dd = _read_axis(d.axis2)
    variant = Variant.SUP1 if lone1 == lone2 else Variant.SUPRHO
    return MdzvSymbol(variant, (a, b), (c, dd))


def _factor_word(gen: str, weight: int, labels=None) -> tuple[Slot, ...]:
    labels = labels or [""] * weight
    return (source(gen, labels[0]),) + tuple(integrator(gen, lab) for lab in labels[1:])


_TABLE_LABELS = {ALPHA: ("t", "u"), BETA: ("v", "w")}


def shuffle_diagrams(e1: tuple[int, int], e2: tuple[int, int]) -> list[tuple[ShuffleDiagram, MdzvSymbol]]:
    """Every diagram of ``z(a;c) * z(b;d)`` with its symbol, in enumeration order.

    ``e1 = (a, c)`` belongs to ``alpha``, ``e2 = (b, d)`` to ``beta``.  Axis-1
    patterns vary fastest.
    """
    (a, c), (b, d) = e1, e2
    for e in (a, b, c, d):
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"integral shuffle needs positive integer exponents, got {e!r}")

    def labels(gen, weight, axis):
        if weight == 2:
            return [f"{lab}{axis}" for lab in _TABLE_LABELS[gen]]
        return [f"{gen[0]}{k}_{axis}" for k in range(weight)]

    x1 = _factor_word(ALPHA, a, labels(ALPHA, a, 1))
    y1 = _factor_word(BETA, b, labels(BETA, b, 1))
    x2 = _factor_word(ALPHA, c, labels(ALPHA, c, 2))
    y2 = _factor_word(BETA, d, labels(BETA, d, 2))
    out = []
    for p2 in interleavings(c, d):
        axis2 = merge(x2, y2, p2)
        for p1 in interleavings(a, b):
            diag = ShuffleDiagram(merge(x1, y1, p1), axis2)
            out.append((diag, diagram_to_symbol(diag)))
    return out


def integral_shuffle(e1: tuple[int, int], e2: tuple[int, int]) -> LinearCombo:
    """Integral shuffle of ``z(a;c) * z(b;d)``; every diagram counts once."""
    return LinearCombo([(sym, 1) for _, sym in shuffle_diagrams(e1, e2)])


def diagram_count(e1: tuple[int, int], e2: tuple[int, int]) -> int:
    return math.comb(e1[0] + e2[0], e1[0]) * math.comb(e1[1] + e2[1], e1[1])


def diagram_term(d: ShuffleDiagram) -> str:
    """Human readable summand of a diagram, with the diagram's own generator names."""
    f1 = axis_scan(d.axis1)
    f2 = axis_scan(d.axis2)

    def power(base: str, e: int) -> str:
        return base if e == 1 else f"{base}^{e}"

    if f1 == f2:
        parts = [power(f"N({'+'.join(form)})", e) for form, e in f1]
    else:
        parts = []
        for idx, factors in ((1, f1), (2, f2)):
            for form, e in factors:
                inner = "+".join(f"{g}_{idx}" for g in form)
                parts.append(power(f"({inner})" if len(form) > 1 else inner, e))
    return "1/(" + " ".join(parts) + ")"


def mzv_word(s: MzvSymbol, tag: str) -> tuple[Slot, ...]:
    word = []
    for k, m in enumerate(s.exponents):
        if not isinstance(m, int):
            raise ValueError("integral shuffle needs integer exponents")
        gen = f"{tag}{k}"
        word.append(source(gen))
        word.extend(integrator(gen) for _ in range(m - 1))
    return tuple(word)


def decode_mzv_word(word) -> MzvSymbol:
    if not word:
        return MzvSymbol(())
    return MzvSymbol(tuple(e for _, e in axis_scan(word)))


def mzv_shuffle(s1: MzvSymbol, s2: MzvSymbol) -> LinearCombo:
    """Shuffle product of two MZVs through their iterated-integral words."""
    w1, w2 = mzv_word(s1, "x"), mzv_word(s2, "y")
    terms = [(decode_mzv_word(merge(w1, w2, p)), Fraction(1)) for p in interleavings(len(w1), len(w2))]
    return LinearCombo(terms)
