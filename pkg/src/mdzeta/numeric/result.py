from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..cone import Truncation


@dataclass(frozen=True)
class EvalResult:
    """A truncated value with a heuristic (non-certified) tail estimate."""

    value: complex
    truncation: Truncation
    tail_estimate: float
    term_count: int
    warnings: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not (self.tail_estimate >= 0):
            raise ValueError(f"tail estimate must be non-negative, got {self.tail_estimate}")

    @property
    def real(self) -> float:
        return self.value.real

    def to_dict(self) -> dict:
        tail = self.tail_estimate if math.isfinite(self.tail_estimate) else None
        return {
            "value_re": self.value.real,
            "value_im": self.value.imag,
            "truncation": self.truncation.to_dict(),
            "tail": tail,
            "term_count": self.term_count,
            "warnings": list(self.warnings),
        }


@dataclass(frozen=True)
class PolylogPoint:
    """Evaluation point of the cone polylogarithms."""

    u1: float
    u2: float

    def __post_init__(self) -> None:
        if not (self.u1 >= 0 and self.u2 >= 0):
            raise ValueError(f"polylogarithm points need u1, u2 >= 0, got ({self.u1}, {self.u2})")

    @property
    def is_origin(self) -> bool:
        return self.u1 == 0 and self.u2 == 0

    @property
    def is_interior(self) -> bool:
        return self.u1 > 0 and self.u2 > 0
