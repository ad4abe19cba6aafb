"""Floating-point views of enumerated domains, plus compensated reduction."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..cone import Domain, RealCone, Truncation, enumerate_domain
from ..field import norm

# pairs per block; keeps block matrices around 16 MB of complex128
BLOCK_ELEMENTS = 1 << 20


@dataclass(frozen=True)
class PointSet:
    a1: np.ndarray
    a2: np.ndarray
    norms: np.ndarray
    m: np.ndarray | None
    n: np.ndarray | None
    real: bool

    def __len__(self) -> int:
        return len(self.a1)


def domain_points(domain: Domain, trunc: Truncation) -> PointSet:
    elems = enumerate_domain(domain, trunc)
    field = domain.field
    w1, w2 = field.omega_float
    if isinstance(domain, RealCone):
        xs = np.array([e.element.x for e in elems], dtype=float)
        ys = np.array([e.element.y for e in elems], dtype=float)
        a1 = xs + ys * w1.real
        a2 = xs + ys * w2.real
        m = np.array([e.m for e in elems], dtype=np.int64)
        n = np.array([e.n for e in elems], dtype=np.int64)
        norms = np.array([norm(e.element) for e in elems], dtype=float)
        return PointSet(a1, a2, norms, m, n, True)
    xs = np.array([e.x for e in elems], dtype=float)
    ys = np.array([e.y for e in elems], dtype=float)
    a1 = xs + ys * w1
    norms = np.array([norm(e) for e in elems], dtype=float)
    return PointSet(a1, np.conj(a1), norms, None, None, False)


def compensated_total(parts) -> complex:
    """Correctly rounded sum of real or complex partial sums."""
    parts = np.asarray(parts)
    if parts.size == 0:
        return 0j
    if np.iscomplexobj(parts):
        return complex(math.fsum(parts.real.tolist()), math.fsum(parts.imag.tolist()))
    return complex(math.fsum(parts.tolist()), 0.0)


def row_blocks(n_rows: int, n_cols: int):
    """Slices of rows such that each block holds about BLOCK_ELEMENTS pairs."""
    step = max(1, BLOCK_ELEMENTS // max(1, n_cols))
    for start in range(0, n_rows, step):
        yield slice(start, min(n_rows, start + step))
