"""Symbol types for multiple Dedekind zeta values and classical MZVs.

Exponents are positive integers.  The stuffle engines also accept *formal*
exponents (identifiers such as ``a`` or sums such as ``a+b``) so generic
product formulas can be printed; numeric evaluation needs integers.

Text syntax::

    z(a;c)          plain depth-1 value            sum 1/(alpha_1^a alpha_2^c)
    z1(a,b;c,d)     pair sum, same lone generator   1/(alpha_1^a (alpha+beta)_1^b alpha_2^c (alpha+beta)_2^d)
    zr(a,b;c,d)     pair sum, swapped lone          1/(beta_1^a (alpha+beta)_1^b alpha_2^c (alpha+beta)_2^d)
    s1(a,b;c,d)     mu(alpha) < mu(beta), nu(alpha) < nu(beta)   1/(alpha_1^a beta_1^b alpha_2^c beta_2^d)
    sr(a,b;c,d)     mu(alpha) > mu(beta), nu(alpha) < nu(beta)
    s01(a,b;c,d)    mu(alpha) = mu(beta), nu(alpha) < nu(beta)
    s10(a,b;c,d)    mu(alpha) < mu(beta), nu(alpha) = nu(beta)
    mzv(m1,...,md)  sum over 0 < k1 < ... < kd of 1/(k1^m1 ... kd^md)
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

from ..errors import ParseError

Exponent = Union[int, str]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class Variant(enum.Enum):
    PLAIN = "z"
    SUP1 = "z1"
    SUPRHO = "zr"
    SUB1 = "s1"
    SUBRHO = "sr"
    SUB01 = "s01"
    SUB10 = "s10"

    @property
    def is_sub(self) -> bool:
        return self.value.startswith("s")


_VARIANT_RANK = {v: i for i, v in enumerate(Variant)}


def _split_formal(e: Exponent) -> tuple[int, list[str]]:
    if isinstance(e, int):
        return e, []
    const, names = 0, []
    for part in e.split("+"):
        part = part.strip()
        if part.isdigit():
            const += int(part)
        elif _IDENT.fullmatch(part):
            names.append(part)
        else:
            raise ParseError(f"bad exponent {e!r}")
    return const, names


def add_exponents(*exps: Exponent) -> Exponent:
    """Sum of exponents; formal exponents are kept as canonical ``a+b+3`` strings."""
    const, names = 0, []
    for e in exps:
        c, n = _split_formal(e)
        const += c
        names.extend(n)
    if not names:
        return const
    parts = sorted(names) + ([str(const)] if const else [])
    return "+".join(parts)


def normalize_exponent(e) -> Exponent:
    if isinstance(e, bool):
        raise ParseError(f"bad exponent {e!r}")
    if isinstance(e, int):
        if e < 1:
            raise ParseError(f"exponents must be positive, got {e}")
        return e
    if isinstance(e, str):
        s = e.strip()
        if s.isdigit():
            return normalize_exponent(int(s))
        return add_exponents(s)
    raise ParseError(f"bad exponent {e!r}")


def _exp_key(e: Exponent):
    return (0, e, "") if isinstance(e, int) else (1, 0, e)


def _fmt(exps) -> str:
    return ",".join(str(e) for e in exps)


@dataclass(frozen=True)
class MdzvSymbol:
    """A multiple Dedekind zeta value ``variant(top; bottom)``.

    ``top`` holds the exponents of the first embedding, ``bottom`` those of
    the second.  Depth 3 exists only as a printable output of the imaginary
    depth (2,1) stuffle.
    """

    variant: Variant
    top: tuple
    bottom: tuple

    def __post_init__(self) -> None:
        top = tuple(normalize_exponent(e) for e in self.top)
        bottom = tuple(normalize_exponent(e) for e in self.bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        if len(top) != len(bottom) or not top:
            raise ParseError(f"mismatched exponent rows {top} / {bottom}")
        depth = len(top)
        if self.variant is Variant.PLAIN and depth != 1:
            raise ParseError("plain values have depth 1")
        if self.variant is not Variant.PLAIN and depth == 1:
            raise ParseError(f"{self.variant.value} needs depth >= 2")
        if depth > 3 or (depth == 3 and self.variant is not Variant.SUP1):
            raise ParseError(f"unsupported depth {depth} for {self.variant.value}")

    @property
    def depth(self) -> int:
        return len(self.top)

    @property
    def is_formal(self) -> bool:
        return any(isinstance(e, str) for e in self.top + self.bottom)

    @property
    def weights(self) -> tuple[Exponent, Exponent]:
        return add_exponents(*self.top), add_exponents(*self.bottom)

    def is_convergent(self) -> bool:
        """Library convergence guard.

        Depth 1 needs ``a + c >= 3`` (a two-dimensional lattice sum of
        ``|alpha|^-(a+c)``).  Depth 2 needs ``a + c >= 2`` and ``b + d >= 3``.
        """
        if self.is_formal:
            return False
        if self.depth == 1:
            return self.top[0] + self.bottom[0] >= 3
        if self.depth == 2:
            return self.top[0] + self.bottom[0] >= 2 and self.top[1] + self.bottom[1] >= 3
        return False

    def sort_key(self):
        return (1, _VARIANT_RANK[self.variant], self.depth, tuple(map(_exp_key, self.top)), tuple(map(_exp_key, self.bottom)))

    def __str__(self) -> str:
        return f"{self.variant.value}({_fmt(self.top)};{_fmt(self.bottom)})"

    def __lt__(self, other) -> bool:
        return symbol_sort_key(self) < symbol_sort_key(other)


@dataclass(frozen=True)
class MzvSymbol:
    """Classical multiple zeta value; the empty tuple stands for the unit 1."""

    exponents: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(normalize_exponent(e) for e in self.exponents))

    @property
    def depth(self) -> int:
        return len(self.exponents)

    @property
    def weight(self) -> Exponent:
        return add_exponents(*self.exponents) if self.exponents else 0

    @property
    def is_formal(self) -> bool:
        return any(isinstance(e, str) for e in self.exponents)

    def is_admissible(self) -> bool:
        if self.is_formal:
            return False
        return not self.exponents or self.exponents[-1] >= 2

    def sort_key(self):
        return (0, len(self.exponents), tuple(map(_exp_key, self.exponents)))

    def __str__(self) -> str:
        return f"mzv({_fmt(self.exponents)})"

    def __lt__(self, other) -> bool:
        return symbol_sort_key(self) < symbol_sort_key(other)


Symbol = Union[MdzvSymbol, MzvSymbol]


def symbol_sort_key(s: Symbol):
    return s.sort_key()


def plain(a: Exponent, c: Exponent) -> MdzvSymbol:
    return MdzvSymbol(Variant.PLAIN, (a,), (c,))


def sup1(a, b, c, d) -> MdzvSymbol:
    return MdzvSymbol(Variant.SUP1, (a, b), (c, d))


def suprho(a, b, c, d) -> MdzvSymbol:
    return MdzvSymbol(Variant.SUPRHO, (a, b), (c, d))


def sub(variant: Variant, a, b, c, d) -> MdzvSymbol:
    return MdzvSymbol(variant, (a, b), (c, d))


def mzv(*exponents) -> MzvSymbol:
    return MzvSymbol(tuple(exponents))


_SYMBOL = re.compile(r"^\s*(mzv|z1|zr|s01|s10|s1|sr|z)\s*\(([^()]*)\)\s*$")


def _parse_row(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(normalize_exponent(p) for p in text.split(","))


def parse_symbol(text: str) -> Symbol:
    m = _SYMBOL.match(text)
    if not m:
        raise ParseError(f"cannot parse symbol {text!r}")
    head, body = m.groups()
    if head == "mzv":
        if ";" in body:
            raise ParseError(f"mzv takes a single exponent row: {text!r}")
        return MzvSymbol(_parse_row(body))
    if body.count(";") != 1:
        raise ParseError(f"expected 'top;bottom' exponents in {text!r}")
    top, bottom = body.split(";")
    return MdzvSymbol(Variant(head), _parse_row(top), _parse_row(bottom))
