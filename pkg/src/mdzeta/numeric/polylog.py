"""Cone polylogarithms on real cones and the classical ``Li_m(e^-t)``.

    f0(u)  = sum_alpha exp(-alpha_1 u_1 - alpha_2 u_2)
    fm(u)  = sum_alpha exp(...) / N(alpha)^m
    f11(u) = sum_{alpha, beta} exp(-(alpha+beta)_1 u_1 - (alpha+beta)_2 u_2) / (N(alpha) N(alpha+beta))
    f12(u) = same with N(alpha+beta)^2

At ``u = (0, 0)`` they reduce to cone zeta values and are evaluated only
when that value converges.
"""

from __future__ import annotations

import math

import numpy as np

from ..cone import Domain, RealCone, Truncation
from ..errors import Divergent, WrongSignature
from ..symbolic.symbols import MdzvSymbol, plain, sup1
from .points import PointSet, compensated_total, domain_points, row_blocks
from .result import EvalResult, PolylogPoint
from .zeta import (
    HALF,
    QUARTER,
    _min_size,
    decay_ceiling,
    fit_decay_exponent,
    geometric_tail,
)

KINDS = ("f0", "fm", "f11", "f12")

# exponential decay is faster than any power; cap the fit there
_INTERIOR_CEILING = 8.0


def _limit_symbol(which: str, m: int) -> MdzvSymbol | None:
    if which == "fm":
        return plain(m, m)
    if which == "f11":
        return sup1(1, 1, 1, 1)
    if which == "f12":
        return sup1(1, 2, 1, 2)
    return None


def _f_sum(pts: PointSet, which: str, point: PolylogPoint, m: int) -> complex:
    if len(pts) == 0:
        return 0j
    if which in ("f0", "fm"):
        terms = np.exp(-pts.a1 * point.u1 - pts.a2 * point.u2)
        if which == "fm":
            terms = terms / pts.norms**m
        return compensated_total(terms)
    power = 1 if which == "f11" else 2
    parts = []
    for rows in row_blocks(len(pts), len(pts)):
        s1 = pts.a1[rows, None] + pts.a1[None, :]
        s2 = pts.a2[rows, None] + pts.a2[None, :]
        block = np.exp(-s1 * point.u1 - s2 * point.u2) / (s1 * s2) ** power
        parts.append(block.sum(axis=1) / pts.norms[rows])
    return compensated_total(np.concatenate(parts))


def eval_f(cone: Domain, which: str, point: PolylogPoint, trunc: Truncation, m: int = 1) -> EvalResult:
    """Truncated cone polylogarithm ``which`` in ``f0 | fm | f11 | f12``."""
    if not isinstance(cone, RealCone):
        raise WrongSignature("exponential cone sums diverge on the upper cone of an imaginary field")
    if which not in KINDS:
        raise ValueError(f"unknown polylogarithm {which!r}; expected one of {KINDS}")
    if which == "fm" and m < 1:
        raise ValueError("fm needs m >= 1")
    limit = _limit_symbol(which, m)
    if not point.is_interior:
        if which == "f0":
            raise Divergent("f0 needs u1, u2 > 0")
        # on the boundary one direction no longer decays; demand the zeta limit converge
        if limit is not None and not limit.is_convergent():
            raise Divergent(f"{which} at the boundary reduces to the divergent {limit}")
    ceiling = _INTERIOR_CEILING if point.is_interior else decay_ceiling(limit)

    def value_at(t: Truncation) -> complex:
        return _f_sum(domain_points(cone, t), which, point, m)

    pts = domain_points(cone, trunc)
    full = _f_sum(pts, which, point, m)
    count = len(pts) ** 2 if which in ("f11", "f12") else len(pts)
    half_t, quarter_t = trunc.scaled(HALF), trunc.scaled(QUARTER)
    if len(pts) == 0:
        return EvalResult(full, trunc, math.inf, 0, ("empty truncation",))
    if half_t.value < _min_size(half_t):
        return EvalResult(full, trunc, abs(full), count, ("truncation too small for a tail estimate",))
    half = value_at(half_t)
    quarter = value_at(quarter_t) if quarter_t.value >= _min_size(quarter_t) else None
    p = fit_decay_exponent(full, half, quarter, ceiling)
    return EvalResult(full, trunc, geometric_tail(full, half, p), count)


def eval_li(m: int, t: float, cutoff: int) -> EvalResult:
    """Classical ``Li_m(e^-t) = sum_k e^(-k t) / k^m`` truncated at ``k <= cutoff``."""
    if t < 0 or (t == 0 and m < 2):
        raise Divergent(f"Li_{m}(e^-{t}) diverges")
    k = np.arange(1, cutoff + 1, dtype=float)
    value = math.fsum((np.exp(-k * t) / k**m).tolist())
    n1 = cutoff + 1
    if t > 0:
        tail = math.exp(-n1 * t) / (n1**m * -math.expm1(-t))
    else:
        tail = cutoff ** (1 - m) / (m - 1)
    return EvalResult(complex(value, 0.0), Truncation.cutoff(cutoff), tail, cutoff)
