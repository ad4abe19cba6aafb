"""Exact arithmetic in a quadratic field Q(sqrt(d)) and its ring of integers.

Elements of the ring of integers are stored as ``x + y*w`` in the integral
basis ``{1, w}`` where ``w = sqrt(d)`` when ``d = 2, 3 (mod 4)`` and
``w = (1 + sqrt(d))/2`` when ``d = 1 (mod 4)``.  All arithmetic, conjugation,
norms and sign decisions are done on the integer coordinates; floating point
only enters through :func:`embed`.

For an imaginary field the first embedding is the one sending ``sqrt(d)`` to
``i*sqrt(|d|)`` (positive imaginary part); the second is its complex conjugate.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property

import mpmath

from .errors import (
    DegenerateField,
    FieldMismatch,
    NotSquarefree,
    ParseError,
    WrongSignature,
)

DEFAULT_PRECISION = 30


class Signature(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"


class BasisKind(enum.Enum):
    SQRT = "sqrt"
    HALF_TRACE = "half_trace"


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    d: int

    def __post_init__(self) -> None:
        if self.d in (0, 1):
            raise DegenerateField(f"d={self.d} does not define a quadratic field")
        if not _is_squarefree(self.d):
            raise NotSquarefree(f"d={self.d} is divisible by a square > 1")

    @property
    def signature(self) -> Signature:
        return Signature.REAL if self.d > 0 else Signature.IMAGINARY

    @property
    def is_real(self) -> bool:
        return self.d > 0

    @property
    def basis_kind(self) -> BasisKind:
        return BasisKind.HALF_TRACE if self.d % 4 == 1 else BasisKind.SQRT

    def element(self, x: int, y: int = 0) -> FieldElement:
        return FieldElement(self, x, y)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1, 0)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0, 0)

    @property
    def w(self) -> FieldElement:
        return FieldElement(self, 0, 1)

    def omega_embeddings(self, precision: int = DEFAULT_PRECISION) -> tuple[mpmath.mpc, mpmath.mpc]:
        """Images of ``w`` under the two embeddings, at ``precision`` digits."""
        with mpmath.workdps(precision + 5):
            root = mpmath.sqrt(mpmath.mpf(abs(self.d)))
            if self.is_real:
                s1, s2 = mpmath.mpc(root, 0), mpmath.mpc(-root, 0)
            else:
                s1, s2 = mpmath.mpc(0, root), mpmath.mpc(0, -root)
            if self.basis_kind is BasisKind.HALF_TRACE:
                return (1 + s1) / 2, (1 + s2) / 2
            return s1, s2

    @cached_property
    def omega_float(self) -> tuple[complex, complex]:
        w1, w2 = self.omega_embeddings()
        return complex(w1), complex(w2)

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


def make_field(d: int) -> FieldSpec:
    return FieldSpec(int(d))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    x: int
    y: int

    def _check(self, other: FieldElement) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, int):
            return FieldElement(self.field, other, 0)
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.x - other.x, self.y - other.y)

    def __rsub__(self, other):
        return -self + other

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, -self.x, -self.y)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.field.d
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        if self.field.basis_kind is BasisKind.SQRT:
            # w^2 = d
            return FieldElement(self.field, x1 * x2 + d * y1 * y2, x1 * y2 + x2 * y1)
        # w^2 = w + (d - 1)/4
        c = (d - 1) // 4
        return FieldElement(self.field, x1 * x2 + c * y1 * y2, x1 * y2 + x2 * y1 + y1 * y2)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_rational(self) -> bool:
        return self.y == 0

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        ypart = {1: "w", -1: "-w"}.get(self.y, f"{self.y}*w")
        if self.x == 0:
            return ypart
        sign = "-" if ypart.startswith("-") else "+"
        return f"{self.x}{sign}{ypart.lstrip('-')}"


def arithmetic(op: str, a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    """Dispatch ``add | sub | neg | mul`` on field elements."""
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def galois_conj(a: FieldElement) -> FieldElement:
    if a.field.basis_kind is BasisKind.SQRT:
        return FieldElement(a.field, a.x, -a.y)
    # conj(w) = 1 - w
    return FieldElement(a.field, a.x + a.y, -a.y)


def norm(a: FieldElement) -> int:
    d = a.field.d
    if a.field.basis_kind is BasisKind.SQRT:
        return a.x * a.x - d * a.y * a.y
    return a.x * a.x + a.x * a.y + a.y * a.y * ((1 - d) // 4)


def trace(a: FieldElement) -> int:
    if a.field.basis_kind is BasisKind.SQRT:
        return 2 * a.x
    return 2 * a.x + a.y


@dataclass(frozen=True)
class EmbeddingPair:
    a1: mpmath.mpc
    a2: mpmath.mpc
    precision: int

    def as_complex(self) -> tuple[complex, complex]:
        return complex(self.a1), complex(self.a2)


def embed(a: FieldElement, precision: int = DEFAULT_PRECISION) -> EmbeddingPair:
    w1, w2 = a.field.omega_embeddings(precision)
    with mpmath.workdps(precision + 5):
        a1 = a.x + a.y * w1
        a2 = a.x + a.y * w2
    return EmbeddingPair(a1, a2, precision)


def embed_float(a: FieldElement) -> tuple[complex, complex]:
    w1, w2 = a.field.omega_float
    return a.x + a.y * w1, a.x + a.y * w2


def _sign_p_plus_q_sqrt(p: int, q: int, d: int) -> int:
    """Exact sign of ``p + q*sqrt(d)`` for ``d > 0``."""
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: compare p^2 with d*q^2
    lhs, rhs = p * p, d * q * q
    if lhs == rhs:
        return 0
    return sp if lhs > rhs else sq


def real_embedding_signs(a: FieldElement) -> tuple[int, int]:
    """Signs of the two real embeddings of ``a``, decided on integers."""
    if not a.field.is_real:
        raise WrongSignature("real embeddings requested on an imaginary field")
    d = a.field.d
    if a.field.basis_kind is BasisKind.SQRT:
        return _sign_p_plus_q_sqrt(a.x, a.y, d), _sign_p_plus_q_sqrt(a.x, -a.y, d)
    # 2*(x + y*w) = (2x + y) +/- y*sqrt(d)
    p = 2 * a.x + a.y
    return _sign_p_plus_q_sqrt(p, a.y, d), _sign_p_plus_q_sqrt(p, -a.y, d)


def is_totally_positive(a: FieldElement) -> bool:
    s1, s2 = real_embedding_signs(a)
    return s1 > 0 and s2 > 0


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(\*?\s*w)?\s*")


def parse_element(field: FieldSpec, text: str) -> FieldElement:
    """Parse ``x+y*w`` style input (``2+w``, ``-1+3*w``, ``w``, ``4``)."""
    src = text.replace(" ", "")
    if not src:
        raise ParseError("empty element")
    x = y = 0
    pos = 0
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse element {text!r}")
        sign, digits, wpart = m.groups()
        if pos > 0 and not sign:
            raise ParseError(f"cannot parse element {text!r}")
        if not digits and not wpart:
            raise ParseError(f"cannot parse element {text!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if wpart:
            if wpart.startswith("*") and not digits:
                raise ParseError(f"cannot parse element {text!r}")
            y += coeff
        else:
            x += coeff
        pos = m.end()
    return FieldElement(field, x, y)
