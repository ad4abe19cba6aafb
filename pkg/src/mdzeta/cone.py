"""Summation domains: the real cone N{mu, nu} and the imaginary upper cone C+.

Real cones are truncated by shells ``m + n <= S`` or by norm ``N(alpha) <= R^2``;
the upper cone of an imaginary field is truncated by ``|alpha_1| <= R``,
equivalently ``N(alpha) <= R^2``.  All membership and truncation tests are
exact integer comparisons, and every enumeration has a fixed order so that
downstream floating sums are reproducible bit for bit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    DependentGenerators,
    DomainMismatch,
    NotTotallyPositive,
    WrongSignature,
)
from .field import FieldElement, FieldSpec, galois_conj, is_totally_positive, norm


class Ordering(enum.IntEnum):
    """Outcome of comparing ``a`` with ``b``: LESS means ``a < b``."""

    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:
        return {-1: "<", 0: "=", 1: ">"}[self.value]


class Position(enum.Enum):
    PLUS = "plus"
    ZERO = "zero"
    MINUS = "minus"


class TruncationKind(enum.Enum):
    SHELL = "shell"
    RADIUS = "radius"
    CUTOFF = "cutoff"


@dataclass(frozen=True)
class Truncation:
    kind: TruncationKind
    value: int | float | Fraction

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"negative truncation {self.value}")
        if self.kind in (TruncationKind.SHELL, TruncationKind.CUTOFF) and int(self.value) != self.value:
            raise ValueError(f"{self.kind.value} truncation must be an integer")

    @classmethod
    def shell(cls, s: int) -> Truncation:
        return cls(TruncationKind.SHELL, int(s))

    @classmethod
    def radius(cls, r) -> Truncation:
        return cls(TruncationKind.RADIUS, r)

    @classmethod
    def cutoff(cls, n: int) -> Truncation:
        return cls(TruncationKind.CUTOFF, int(n))

    def scaled(self, factor: Fraction) -> Truncation:
        """Truncation with the size parameter multiplied by ``factor`` (rounded down)."""
        v = Fraction(self.value) * factor
        if self.kind is TruncationKind.RADIUS:
            return Truncation(self.kind, v if v.denominator != 1 else int(v))
        return Truncation(self.kind, math.floor(v))

    def radius_squared(self) -> Fraction:
        return Fraction(self.value) ** 2

    def to_dict(self) -> dict:
        v = self.value
        if isinstance(v, Fraction):
            v = int(v) if v.denominator == 1 else float(v)
        return {"kind": self.kind.value, "value": v}

    def __str__(self) -> str:
        label = {"shell": "S", "radius": "R", "cutoff": "N"}[self.kind.value]
        return f"{self.kind.value} {label}={self.to_dict()['value']}"


@dataclass(frozen=True)
class RealCone:
    field: FieldSpec
    mu: FieldElement
    nu: FieldElement

    def __post_init__(self) -> None:
        if not self.field.is_real:
            raise WrongSignature(f"{self.field} is imaginary; real cones need a real field")
        if self.mu.field != self.field or self.nu.field != self.field:
            raise DomainMismatch("generators live in a different field")
        for name, g in (("mu", self.mu), ("nu", self.nu)):
            if not is_totally_positive(g):
                raise NotTotallyPositive(f"generator {name}={g} is not totally positive")
        # mu_1 nu_2 - mu_2 nu_1 is sqrt(d) times the w-coordinate of mu * conj(nu)
        if (self.mu * galois_conj(self.nu)).y == 0:
            raise DependentGenerators(f"{self.mu} and {self.nu} are linearly dependent over Q")

    def __str__(self) -> str:
        return f"N{{{self.mu}, {self.nu}}} in {self.field}"


@dataclass(frozen=True)
class UpperCone:
    field: FieldSpec

    def __post_init__(self) -> None:
        if self.field.is_real:
            raise WrongSignature(f"{self.field} is real; the upper cone needs an imaginary field")

    def contains(self, a: FieldElement) -> bool:
        return classify_imaginary(self.field, a) is Position.PLUS

    def __str__(self) -> str:
        return f"C+ in {self.field}"


Domain = Union[RealCone, UpperCone]


@dataclass(frozen=True)
class ConeElement:
    element: FieldElement
    m: int
    n: int


def make_real_cone(field: FieldSpec, mu: FieldElement, nu: FieldElement) -> RealCone:
    return RealCone(field, mu, nu)


def enumerate_real(cone: RealCone, trunc: Truncation) -> list[ConeElement]:
    """Cone elements ``m*mu + n*nu``; shells ordered by ``m + n`` then ``m``.

    A radius truncation selects ``N(alpha) <= R^2`` instead, ordered by norm
    and then by coordinates.
    """
    if trunc.kind is TruncationKind.RADIUS:
        return enumerate_real_by_norm(cone, trunc.radius_squared())
    if trunc.kind is not TruncationKind.SHELL:
        raise DomainMismatch(f"{trunc.kind.value} truncation does not apply to a real cone")
    out = []
    mu, nu = cone.mu, cone.nu
    for s in range(2, int(trunc.value) + 1):
        for m in range(1, s):
            n = s - m
            out.append(ConeElement(mu * m + nu * n, m, n))
    return out


def enumerate_real_by_norm(cone: RealCone, max_norm) -> list[ConeElement]:
    bound = Fraction(max_norm)
    # alpha_i >= m*mu_i, hence N(alpha) >= m^2 N(mu); same for n with nu
    m_max = math.isqrt(math.floor(bound / norm(cone.mu)))
    n_max = math.isqrt(math.floor(bound / norm(cone.nu)))
    found = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            a = cone.mu * m + cone.nu * n
            na = norm(a)
            if na <= bound:
                found.append((na, m, n, a))
    found.sort(key=lambda t: t[:3])
    return [ConeElement(a, m, n) for _, m, n, a in found]


def classify_imaginary(field: FieldSpec, a: FieldElement) -> Position:
    if field.is_real:
        raise WrongSignature(f"{field} is real")
    # Im(w_1) > 0 for both bases, so the sign of Im(alpha_1) is the sign of y
    if a.y > 0 or (a.y == 0 and a.x > 0):
        return Position.PLUS
    if a.y == 0 and a.x == 0:
        return Position.ZERO
    return Position.MINUS


def enumerate_imaginary(field: FieldSpec, trunc: Truncation) -> list[FieldElement]:
    """All ``alpha`` in C+ with ``|alpha_1| <= R``, ordered by norm, then ``(y, x)``."""
    if field.is_real:
        raise WrongSignature(f"{field} is real")
    if trunc.kind is not TruncationKind.RADIUS:
        raise DomainMismatch(f"{trunc.kind.value} truncation does not apply to C+")
    r2 = trunc.radius_squared()
    absd = -field.d
    # |alpha_1|^2 >= |d| y^2 / 4 in either basis
    y_max = math.isqrt(math.floor(4 * r2 / absd)) + 1
    x_max = math.isqrt(math.floor(r2)) + y_max + 1
    found = []
    for y in range(y_max + 1):
        for x in range(-x_max, x_max + 1):
            if y == 0 and x <= 0:
                continue
            a = FieldElement(field, x, y)
            na = norm(a)
            if na <= r2:
                found.append((na, y, x, a))
    found.sort(key=lambda t: t[:3])
    return [a for *_, a in found]


def enumerate_domain(domain: Domain, trunc: Truncation) -> list:
    if isinstance(domain, RealCone):
        return enumerate_real(domain, trunc)
    return enumerate_imaginary(domain.field, trunc)


def _sign(v: int) -> Ordering:
    return Ordering((v > 0) - (v < 0))


def cone_compare(domain: Domain, a, b):
    """Compare two domain elements.

    Real cone: a pair of orderings of the mu- and nu-coordinates of ``a``
    against ``b``.  Upper cone: a single ordering, ``a < b`` iff ``b - a``
    lies in C+.
    """
    if isinstance(domain, RealCone):
        return _sign(a.m - b.m), _sign(a.n - b.n)
    pos = classify_imaginary(domain.field, b - a)
    return {Position.PLUS: Ordering.LESS, Position.ZERO: Ordering.EQUAL, Position.MINUS: Ordering.GREATER}[pos]
