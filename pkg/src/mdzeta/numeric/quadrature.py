"""Quadrature oracles for the integration steps behind the cone polylogarithms.

Half-lines ``[u, inf)`` are mapped to ``[0, 1)`` by ``t = u + s / (1 - s)``,
``dt = ds / (1 - s)^2``; exponential integrands then vanish smoothly at ``s = 1``.  These routines integrate the original integrands
numerically and share no code with the closed forms they are compared to.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate

from ..cone import RealCone, Truncation
from .points import domain_points
from .polylog import eval_f
from .result import PolylogPoint


def _half_line(u: float, s):
    gap = 1.0 - s
    return u + s / gap, 1.0 / (gap * gap)


def quadrature_lemma_check(k: float, u: float) -> tuple[float, float, float]:
    """Adaptive quadrature of ``int_u^inf e^(-k t) dt`` against ``e^(-k u) / k``."""
    if k <= 0:
        raise ValueError("k must be positive")

    def integrand(s: float) -> float:
        t, jac = _half_line(u, s)
        return math.exp(-k * t) * jac

    numeric, _ = integrate.quad(integrand, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=200)
    closed = math.exp(-k * u) / k
    return numeric, closed, abs(numeric - closed)


def quadrature_f11_check(cone: RealCone, point: PolylogPoint | tuple[float, float], trunc: Truncation, nodes: int = 96):
    """Tensor Gauss-Legendre integral of ``f1 * f0`` over ``(v1, inf) x (v2, inf)``.

    Returns ``(quadrature value, closed sum, absolute error)``; the closed sum
    is the truncated ``f11`` at ``point`` on the same points.
    """
    if not isinstance(point, PolylogPoint):
        point = PolylogPoint(*point)
    if not point.is_interior:
        raise ValueError("the double-logarithm check needs v1, v2 > 0")
    pts = domain_points(cone, trunc)
    x, w = np.polynomial.legendre.leggauss(nodes)
    s = 0.5 * (x + 1.0)
    w = 0.5 * w
    u1, j1 = _half_line(point.u1, s)
    u2, j2 = _half_line(point.u2, s)
    f1 = np.zeros((nodes, nodes))
    f0 = np.zeros((nodes, nodes))
    for a1, a2, na in zip(pts.a1, pts.a2, pts.norms):
        e = np.outer(np.exp(-a1 * u1), np.exp(-a2 * u2))
        f0 += e
        f1 += e / na
    weights = np.outer(w * j1, w * j2)
    numeric = math.fsum((weights * f1 * f0).ravel().tolist())
    closed = eval_f(cone, "f11", point, trunc).value.real
    return numeric, closed, abs(numeric - closed)


def term_integration_check(cone: RealCone, m: int, point: PolylogPoint, trunc: Truncation, count: int = 20) -> float:
    """Integrate the largest terms of ``f_(m-1)`` once in each variable.

    Each term ``e^(-alpha.u) / N(alpha)^(m-1)`` integrated over
    ``[u1, inf) x [u2, inf)`` must reproduce the ``f_m`` term
    ``e^(-alpha.u) / N(alpha)^m``.  Returns the largest relative error.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    pts = domain_points(cone, trunc)
    sizes = np.exp(-pts.a1 * point.u1 - pts.a2 * point.u2) / pts.norms ** (m - 1)
    worst = 0.0
    for i in np.argsort(-sizes)[:count]:
        q1, _, _ = quadrature_lemma_check(float(pts.a1[i]), point.u1)
        q2, _, _ = quadrature_lemma_check(float(pts.a2[i]), point.u2)
        integrated = q1 * q2 / pts.norms[i] ** (m - 1)
        target = math.exp(-pts.a1[i] * point.u1 - pts.a2[i] * point.u2) / pts.norms[i] ** m
        worst = max(worst, abs(integrated - target) / target)
    return worst
