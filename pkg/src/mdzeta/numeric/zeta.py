"""Truncated sums for classical MZVs and multiple Dedekind zeta values.

Cone symbols are summed over the enumerated points of a truncated domain.
Pair symbols (depth 2) scan all ordered pairs of points in row blocks; the
row sums of each block are combined with ``math.fsum`` in a fixed order, so
results are reproducible and the round-off stays far below truncation error.

Tail estimates are heuristic.  A cone value is recomputed at half and a
quarter of the truncation size, the decay exponent ``p`` is fitted from the
two differences and clamped to ``[1, p_max]``, and the omitted part is
estimated as the geometric remainder ``|v(T) - v(T/2)| / (2**p - 1)``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from fractions import Fraction

import numpy as np

from ..cone import Domain, RealCone, Truncation, TruncationKind
from ..errors import Divergent, DomainMismatch, UnsupportedDepth
from ..symbolic.combo import LinearCombo
from ..symbolic.symbols import MdzvSymbol, MzvSymbol, Symbol, Variant, plain, sup1
from .points import PointSet, compensated_total, domain_points, row_blocks
from .result import EvalResult

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


# -- classical multiple zeta values -----------------------------------------


def _mzv_partial(exponents: tuple[int, ...], cutoff: int) -> float:
    """Nested partial sum over indices ``<= cutoff``.

    ``level[j](K) = sum_{k <= K} k^-m_j * level[j-1](k - 1)``, which costs
    O(depth * N) instead of O(N^depth).
    """
    ks = np.arange(1, cutoff + 1, dtype=float)
    prev = np.ones(cutoff + 1)  # level[-1](K) = 1 for all K >= 0
    for m in exponents:
        terms = np.zeros(cutoff + 1)
        terms[1:] = ks ** (-float(m)) * prev[:-1]
        cur = np.empty(cutoff + 1)
        # Neumaier running sum; fsum of every prefix would be O(N^2)
        s = 0.0
        c = 0.0
        for i, t in enumerate(terms.tolist()):
            u = s + t
            if abs(s) >= abs(t):
                c += (s - u) + t
            else:
                c += (t - u) + s
            s = u
            cur[i] = s + c
        prev = cur
    return float(prev[-1])


def _mzv_tail(exponents: tuple[int, ...], cutoff: int) -> float:
    """Integral-test bound on the terms with outermost index ``k > cutoff``.

    Inner levels with exponent ``m >= 2`` are bounded by ``1 + 1/(m-1)``; each
    exponent-1 level contributes a factor ``ln k + 1``, so the omitted part is
    at most ``C * int_N^inf (ln x + 1)^j x^-s dx``, integrated by parts.
    """
    last = exponents[-1]
    const, logs = 1.0, 0
    for m in exponents[:-1]:
        if m == 1:
            logs += 1
        else:
            const *= 1.0 + 1.0 / (m - 1)
    lead = math.log(cutoff) + 1.0
    total = sum(
        math.perm(logs, i) * lead ** (logs - i) / (last - 1) ** (i + 1) for i in range(logs + 1)
    )
    return const * total * cutoff ** (1 - last)


def eval_mzv(s: MzvSymbol, cutoff: int) -> EvalResult:
    """Partial sum of ``mzv(m1, ..., md)`` over indices ``<= cutoff``."""
    trunc = Truncation.cutoff(cutoff)
    if s.is_formal or not s.is_admissible():
        raise Divergent(f"{s} is not admissible (last exponent must be >= 2)")
    if not s.exponents:
        return EvalResult(1 + 0j, trunc, 0.0, 1)
    if cutoff < 1:
        return EvalResult(0j, trunc, math.inf, 0, ("empty truncation",))
    value = _mzv_partial(s.exponents, cutoff)
    n_terms = math.comb(cutoff, s.depth)
    return EvalResult(complex(value, 0.0), trunc, _mzv_tail(s.exponents, cutoff), n_terms)


def eval_mzv_direct(s: MzvSymbol, cutoff: int) -> float:
    """Literal nested loops; only for small cutoffs."""
    if s.depth > 3:
        raise UnsupportedDepth("direct MZV loops support depth <= 3")
    e = s.exponents
    parts = []
    if s.depth == 1:
        parts = [k ** -e[0] for k in range(1, cutoff + 1)]
    elif s.depth == 2:
        for k2 in range(1, cutoff + 1):
            for k1 in range(1, k2):
                parts.append(1.0 / (k1 ** e[0] * k2 ** e[1]))
    else:
        for k3 in range(1, cutoff + 1):
            for k2 in range(1, k3):
                for k1 in range(1, k2):
                    parts.append(1.0 / (k1 ** e[0] * k2 ** e[1] * k3 ** e[2]))
    return math.fsum(parts)


# -- cone sums ---------------------------------------------------------------


def _check_evaluable(domain: Domain, s: Symbol) -> None:
    if isinstance(s, MzvSymbol):
        raise DomainMismatch(f"{s} is a classical MZV; use a cutoff instead of a cone")
    if s.is_formal:
        raise DomainMismatch(f"{s} has formal exponents and cannot be evaluated")
    if s.depth > 2:
        raise UnsupportedDepth(f"{s}: numeric evaluation supports depth <= 2")
    if s.variant.is_sub and not isinstance(domain, RealCone):
        raise DomainMismatch(f"{s.variant.value} needs coordinates on a real cone")


def _raw_sums(pts: PointSet, symbols: list[MdzvSymbol]) -> dict[MdzvSymbol, complex]:
    """Truncated sums of several symbols over one point set, in one pass."""
    out: dict[MdzvSymbol, complex] = {}
    if len(pts) == 0:
        return {s: 0j for s in symbols}
    inv1 = 1.0 / pts.a1
    inv2 = 1.0 / pts.a2
    pairs = [s for s in symbols if s.depth == 2]
    for s in symbols:
        if s.depth == 1:
            terms = inv1 ** s.top[0] * inv2 ** s.bottom[0]
            out[s] = compensated_total(terms)
    if not pairs:
        return out

    partials: dict[MdzvSymbol, list] = {s: [] for s in pairs}
    need_sup = any(not s.variant.is_sub for s in pairs)
    for rows in row_blocks(len(pts), len(pts)):
        pow_cache: dict = {}
        if need_sup:
            sum1 = pts.a1[rows, None] + pts.a1[None, :]
            isum1 = 1.0 / sum1
            isum2 = np.conj(isum1) if not pts.real else 1.0 / (pts.a2[rows, None] + pts.a2[None, :])

        def spow(which: int, e: int):
            key = (which, e)
            if key not in pow_cache:
                pow_cache[key] = (isum1 if which == 1 else isum2) ** e
            return pow_cache[key]

        for s in pairs:
            a, b = s.top
            c, d = s.bottom
            v = s.variant
            if v is Variant.SUP1:
                block = spow(1, b) * spow(2, d) * (inv1[rows] ** a * inv2[rows] ** c)[:, None]
            elif v is Variant.SUPRHO:
                block = spow(1, b) * spow(2, d) * (inv2[rows] ** c)[:, None] * (inv1 ** a)[None, :]
            else:
                block = _sub_block(pts, rows, v) * np.outer(inv1[rows] ** a * inv2[rows] ** c, inv1 ** b * inv2 ** d)
            partials[s].append(block.sum(axis=1))
    for s in pairs:
        out[s] = compensated_total(np.concatenate(partials[s]))
    return out


def _sub_block(pts: PointSet, rows: slice, v: Variant) -> np.ndarray:
    mi, mj = pts.m[rows, None], pts.m[None, :]
    ni, nj = pts.n[rows, None], pts.n[None, :]
    if v is Variant.SUB1:
        mask = (mi < mj) & (ni < nj)
    elif v is Variant.SUBRHO:
        mask = (mi > mj) & (ni < nj)
    elif v is Variant.SUB01:
        mask = (mi == mj) & (ni < nj)
    else:
        mask = (mi < mj) & (ni == nj)
    return mask.astype(float)


def _pair_count(pts: PointSet, s: MdzvSymbol) -> int:
    n = len(pts)
    if s.depth == 1:
        return n
    if not s.variant.is_sub:
        return n * n
    total = 0
    for rows in row_blocks(n, n):
        total += int(_sub_block(pts, rows, s.variant).sum())
    return total


def decay_ceiling(s: MdzvSymbol) -> float:
    """Largest decay exponent the tail fit may use for this symbol family.

    The omitted region of a two-dimensional sum of ``|x|^-k`` beyond size T
    decays like ``T^(2-k)``; for pair sums the slower of the two levels wins.
    """
    if s.depth == 1:
        k = s.top[0] + s.bottom[0]
    else:
        k = min(s.top[0] + s.bottom[0], s.top[1] + s.bottom[1])
    return float(max(1, k - 2))


def fit_decay_exponent(v_full: complex, v_half: complex, v_quarter: complex | None, ceiling: float) -> float:
    """Decay exponent from three truncations, clamped to ``[1, ceiling]``."""
    d_near = abs(v_full - v_half)
    if v_quarter is None:
        return 1.0
    d_far = abs(v_half - v_quarter)
    if d_near == 0 or d_far == 0 or d_far <= d_near:
        return 1.0
    return min(max(math.log2(d_far / d_near), 1.0), ceiling)


def geometric_tail(v_full: complex, v_half: complex, p: float) -> float:
    return abs(v_full - v_half) / (2.0**p - 1.0)


def _min_size(trunc: Truncation) -> float:
    return 2 if trunc.kind is TruncationKind.SHELL else 1


class ConeEvaluator:
    """Evaluates cone symbols on one domain, caching sums per truncation.

    A single evaluator shares point sets and pair scans between symbols and
    between the auxiliary truncations used for tail estimates.
    """

    def __init__(self, domain: Domain):
        self.domain = domain
        self._points: dict[Truncation, PointSet] = {}
        self._sums: dict[tuple[Truncation, MdzvSymbol], complex] = {}

    def points(self, trunc: Truncation) -> PointSet:
        if trunc not in self._points:
            self._points[trunc] = domain_points(self.domain, trunc)
        return self._points[trunc]

    def raw(self, symbols: Iterable[MdzvSymbol], trunc: Truncation) -> dict[MdzvSymbol, complex]:
        symbols = list(dict.fromkeys(symbols))
        for s in symbols:
            _check_evaluable(self.domain, s)
        missing = [s for s in symbols if (trunc, s) not in self._sums]
        if missing:
            for s, v in _raw_sums(self.points(trunc), missing).items():
                self._sums[(trunc, s)] = v
        return {s: self._sums[(trunc, s)] for s in symbols}

    def evaluate_many(self, symbols: Iterable[MdzvSymbol], trunc: Truncation) -> dict[MdzvSymbol, EvalResult]:
        symbols = list(dict.fromkeys(symbols))
        full = self.raw(symbols, trunc)
        half_t, quarter_t = trunc.scaled(HALF), trunc.scaled(QUARTER)
        size_ok = lambda t: t.value >= _min_size(t) and len(self.points(t)) > 0
        half = self.raw(symbols, half_t) if size_ok(half_t) else None
        quarter = self.raw(symbols, quarter_t) if half is not None and size_ok(quarter_t) else None
        pts = self.points(trunc)
        out = {}
        for s in symbols:
            warnings = []
            if not s.is_convergent():
                warnings.append(f"unverified convergence: {s} is outside the convergence guard")
            if len(pts) == 0:
                warnings.append("empty truncation")
                tail = math.inf
            elif half is None:
                warnings.append("truncation too small for a tail estimate")
                tail = abs(full[s])
            else:
                p = fit_decay_exponent(full[s], half[s], quarter[s] if quarter else None, decay_ceiling(s))
                tail = geometric_tail(full[s], half[s], p)
            out[s] = EvalResult(full[s], trunc, tail, _pair_count(pts, s), tuple(warnings))
        return out

    def evaluate(self, s: MdzvSymbol, trunc: Truncation) -> EvalResult:
        return self.evaluate_many([s], trunc)[s]


def eval_depth1(domain: Domain, a: int, c: int, trunc: Truncation) -> EvalResult:
    """``z(a;c)``: sum of ``1/(alpha_1^a alpha_2^c)`` over the truncated domain."""
    return ConeEvaluator(domain).evaluate(plain(a, c), trunc)


def eval_depth2(domain: Domain, s: MdzvSymbol, trunc: Truncation) -> EvalResult:
    if s.depth != 2:
        raise UnsupportedDepth(f"{s} is not a depth-2 symbol")
    return ConeEvaluator(domain).evaluate(s, trunc)


def eval_symbol(domain: Domain | None, s: Symbol, trunc: Truncation) -> EvalResult:
    if isinstance(s, MzvSymbol):
        if trunc.kind is not TruncationKind.CUTOFF:
            raise DomainMismatch("classical MZVs need a cutoff truncation")
        return eval_mzv(s, int(trunc.value))
    if domain is None:
        raise DomainMismatch(f"{s} needs a summation domain")
    return ConeEvaluator(domain).evaluate(s, trunc)


def eval_double_zeta(domain: Domain, a: int, b: int, trunc: Truncation) -> EvalResult:
    """Double Dedekind zeta ``sum 1/(N(alpha)^a N(alpha+beta)^b)`` from exact norms.

    Norms of ``alpha + beta`` come from integer arithmetic in the field, so
    this route shares no embedding arithmetic with the pair-sum evaluator.
    """
    from ..cone import enumerate_domain
    from ..field import norm

    elems = enumerate_domain(domain, trunc)
    if isinstance(domain, RealCone):
        elems = [e.element for e in elems]
    parts = []
    for x in elems:
        nx = norm(x)
        parts.append(math.fsum(1.0 / (float(nx) ** a * float(norm(x + y)) ** b) for y in elems))
    value = math.fsum(parts)
    sym = sup1(a, b, a, b)
    ref = ConeEvaluator(domain).evaluate(sym, trunc)
    return EvalResult(complex(value, 0.0), trunc, ref.tail_estimate, len(elems) ** 2, ref.warnings)


def evaluate_many(domain: Domain, symbols: Iterable[MdzvSymbol], trunc: Truncation) -> dict[MdzvSymbol, EvalResult]:
    return ConeEvaluator(domain).evaluate_many(symbols, trunc)


def tail_estimate(domain: Domain | None, s: Symbol, trunc: Truncation) -> float:
    return eval_symbol(domain, s, trunc).tail_estimate


def eval_combo(domain: Domain | None, c: LinearCombo, trunc: Truncation, evaluator: ConeEvaluator | None = None) -> EvalResult:
    """``sum coeff * value``; the tail is ``sum |coeff| * tail``."""
    if c.is_zero():
        return EvalResult(0j, trunc, 0.0, 0)
    results = evaluate_symbols(domain, c.symbols(), trunc, evaluator)
    re_parts, im_parts, tail, count, warnings = [], [], 0.0, 0, []
    for s, coeff in c.items():
        r = results[s]
        k = float(coeff)
        re_parts.append(k * r.value.real)
        im_parts.append(k * r.value.imag)
        tail += abs(k) * r.tail_estimate
        count += r.term_count
        warnings.extend(f"{s}: {w}" for w in r.warnings)
    return EvalResult(complex(math.fsum(re_parts), math.fsum(im_parts)), trunc, tail, count, tuple(warnings))


def evaluate_symbols(domain, symbols, trunc: Truncation, evaluator: ConeEvaluator | None = None) -> dict:
    """Evaluate a mixed list of MZV and cone symbols."""
    symbols = list(symbols)
    mzvs = [s for s in symbols if isinstance(s, MzvSymbol)]
    cone_syms = [s for s in symbols if not isinstance(s, MzvSymbol)]
    out = {s: eval_symbol(None, s, trunc) for s in mzvs}
    if cone_syms:
        if domain is None:
            raise DomainMismatch("cone symbols need a summation domain")
        ev = evaluator if evaluator is not None else ConeEvaluator(domain)
        out.update(ev.evaluate_many(cone_syms, trunc))
    return out
