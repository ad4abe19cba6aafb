"""Finite rational linear combinations of symbols."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from fractions import Fraction

from ..errors import ParseError
from .symbols import Symbol, parse_symbol, symbol_sort_key


class LinearCombo:
    """Immutable map ``symbol -> Fraction`` with no stored zeros.

    Terms are kept in canonical symbol order so that printing and
    iteration are deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Symbol, object] | Iterable[tuple[Symbol, object]] = ()):
        acc: dict[Symbol, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for sym, coeff in items:
            acc[sym] = acc.get(sym, Fraction(0)) + Fraction(coeff)
        self._terms = {s: acc[s] for s in sorted(acc, key=symbol_sort_key) if acc[s] != 0}

    @classmethod
    def of(cls, sym: Symbol, coeff=1) -> LinearCombo:
        return cls({sym: coeff})

    @classmethod
    def zero(cls) -> LinearCombo:
        return cls()

    def items(self):
        return self._terms.items()

    def symbols(self) -> list[Symbol]:
        return list(self._terms)

    def coefficient(self, sym: Symbol) -> Fraction:
        return self._terms.get(sym, Fraction(0))

    def __getitem__(self, sym: Symbol) -> Fraction:
        return self.coefficient(sym)

    def __contains__(self, sym) -> bool:
        return sym in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: LinearCombo) -> LinearCombo:
        if not isinstance(other, LinearCombo):
            return NotImplemented
        return LinearCombo(list(self.items()) + list(other.items()))

    def __neg__(self) -> LinearCombo:
        return LinearCombo({s: -c for s, c in self.items()})

    def __sub__(self, other: LinearCombo) -> LinearCombo:
        if not isinstance(other, LinearCombo):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> LinearCombo:
        f = Fraction(factor)
        return LinearCombo({s: c * f for s, c in self.items()})

    def __mul__(self, factor) -> LinearCombo:
        if isinstance(factor, LinearCombo):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def map_symbols(self, fn) -> LinearCombo:
        return LinearCombo([(fn(s), c) for s, c in self.items()])

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombo):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (sym, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(sym) if mag == 1 else f"{mag}*{sym}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LinearCombo({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"symbol": str(s), "coeff": str(c)} for s, c in self.items()]


def combo_algebra(op: str, a: LinearCombo, b=None):
    """``add | sub | scale | is_zero`` on combos."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "scale":
        return a.scale(b)
    if op == "is_zero":
        return a.is_zero()
    raise ValueError(f"unknown operation {op!r}")


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?((?:mzv|z1|zr|s01|s10|s1|sr|z)\s*\([^()]*\))\s*"
)


def parse_combo(text: str) -> LinearCombo:
    src = text.strip()
    if src in ("", "0"):
        return LinearCombo()
    terms = []
    pos = 0
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse combination at {src[pos:]!r}")
        sign, coeff, sym = m.groups()
        if pos > 0 and sign is None:
            raise ParseError(f"missing operator before {sym!r}")
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        terms.append((parse_symbol(sym), c))
        pos = m.end()
    return LinearCombo(terms)
