"""Double-shuffle relations: derivation, comparison with printed forms, numeric checks.

A relation is the exact difference of two expansions of the same product,
the stuffle (after replacing ``s1`` by ``z1``) minus the integral shuffle.
It must vanish; :func:`verify_numeric` measures how close truncated sums
come to that.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cone import Domain, RealCone, Truncation
from .field import Signature
from .numeric.zeta import ConeEvaluator, eval_combo, evaluate_symbols
from .symbolic.combo import LinearCombo, parse_combo
from .symbolic.shuffle import integral_shuffle, mzv_shuffle
from .symbolic.stuffle import lemma_rewrite, mzv_stuffle, stuffle
from .symbolic.symbols import MzvSymbol, Symbol, mzv

MZV = "mzv"


@dataclass(frozen=True)
class Relation:
    """A linear combination asserted to vanish."""

    combo: LinearCombo
    provenance: str
    field_signature: Signature | str
    factors: tuple = ()

    @property
    def kind(self) -> str:
        sig = self.field_signature
        return sig if isinstance(sig, str) else sig.value

    def normalized(self) -> LinearCombo:
        """The combo scaled so that its first symbol has coefficient 1."""
        if self.combo.is_zero():
            return self.combo
        lead = self.combo.coefficient(self.combo.symbols()[0])
        return self.combo.scale(1 / lead)

    def __str__(self) -> str:
        return f"{self.combo} = 0"


def derive_relation(signature: Signature, e1: tuple, e2: tuple) -> Relation:
    """``lemma_rewrite(stuffle) - integral_shuffle`` of ``z(a;c) * z(b;d)``."""
    stuff = lemma_rewrite(stuffle(signature, e1, e2))
    shuf = integral_shuffle(e1, e2)
    (a, c), (b, d) = e1, e2
    prov = (
        f"stuffle of z({a};{c})*z({b};{d}) over the "
        f"{'real cone' if signature is Signature.REAL else 'upper cone'} minus its integral shuffle"
    )
    return Relation(stuff - shuf, prov, signature, (tuple(e1), tuple(e2)))


def derive_mzv_relation(s1: MzvSymbol, s2: MzvSymbol) -> Relation:
    combo = mzv_stuffle(s1, s2) - mzv_shuffle(s1, s2)
    return Relation(combo, f"stuffle of {s1}*{s2} minus its shuffle", MZV, (s1.exponents, s2.exponents))


# Transcriptions of the printed (2;2) x (2;2) relations, moved to one side.
PRINTED_REAL_22 = parse_combo(
    "2*sr(2,2;2,2) + 2*s01(2,2;2,2) + 2*s10(2,2;2,2) + z(4;4)"
    " - 8*z1(1,3;1,3) - 4*z1(1,3;2,2) - 4*z1(2,2;1,3)"
    " - 2*zr(2,2;2,2) - 8*zr(1,3;1,3) - 4*zr(1,3;2,2) - 4*zr(2,2;1,3)"
)
PRINTED_IMAGINARY_22 = parse_combo(
    "z(4;4) - 8*z1(1,3;1,3) - 4*z1(1,3;2,2) - 4*z1(2,2;1,3)"
    " - 2*zr(2,2;2,2) - 2*zr(1,3;1,3) - 4*zr(1,3;2,2) - 4*zr(2,2;1,3)"
)
PRINTED_MZV_22 = LinearCombo([(mzv(1, 3), 1), (mzv(4), Fraction(-1, 4))])


def printed_relation(r: Relation) -> LinearCombo:
    if r.kind == MZV:
        if r.factors != ((2,), (2,)):
            raise ValueError("a printed form exists only for mzv(2)*mzv(2)")
        return PRINTED_MZV_22
    if r.factors != ((2, 2), (2, 2)):
        raise ValueError("printed forms exist only for z(2;2)*z(2;2)")
    return PRINTED_REAL_22 if r.field_signature is Signature.REAL else PRINTED_IMAGINARY_22


@dataclass(frozen=True)
class DiffEntry:
    symbol: Symbol
    engine: Fraction
    printed: Fraction

    def __str__(self) -> str:
        return f"{self.symbol}: engine {self.engine} vs printed {self.printed}"


def diff_combos(engine: LinearCombo, printed: LinearCombo) -> list[DiffEntry]:
    """Coefficient differences after scaling both so the first symbol has coefficient 1."""

    def norm(c: LinearCombo) -> LinearCombo:
        return c if c.is_zero() else c.scale(1 / c.coefficient(c.symbols()[0]))

    e, p = norm(engine), norm(printed)
    syms = sorted(set(e.symbols()) | set(p.symbols()), key=lambda s: s.sort_key())
    return [DiffEntry(s, e[s], p[s]) for s in syms if e[s] != p[s]]


def compare_with_printed(r: Relation) -> list[DiffEntry]:
    """Symbol-by-symbol diff of a derived relation against its printed transcription."""
    return diff_combos(r.combo, printed_relation(r))


# -- numeric verification -----------------------------------------------------


@dataclass
class SymbolRow:
    symbol: Symbol
    coeff: Fraction
    value: complex
    tail: float


@dataclass
class VerificationReport:
    relation: Relation
    domain: str
    truncations: list[Truncation]
    per_symbol: list[SymbolRow]
    residuals: list[float]
    budget: float
    floor_tol: float
    verdict: str
    reference: float | None = None
    printed_combo: LinearCombo | None = None
    printed_residuals: list[float] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def residual(self) -> float:
        return self.residuals[-1]

    @property
    def decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.residuals, self.residuals[1:]))

    def to_dict(self) -> dict:
        def num(x):
            return x if x is None or math.isfinite(x) else None

        out = {
            "relation": str(self.relation.combo),
            "provenance": self.relation.provenance,
            "domain": self.domain,
            "truncations": [t.to_dict() for t in self.truncations],
            "per_symbol": [
                {
                    "symbol": str(r.symbol),
                    "coeff": str(r.coeff),
                    "value_re": r.value.real,
                    "value_im": r.value.imag,
                    "tail": num(r.tail),
                }
                for r in self.per_symbol
            ],
            "residuals": self.residuals,
            "budget": num(self.budget),
            "floor_tol": self.floor_tol,
            "verdict": self.verdict,
        }
        if self.reference is not None:
            out["reference"] = self.reference
        if self.printed_combo is not None:
            out["printed_relation"] = str(self.printed_combo)
            out["printed_residuals"] = self.printed_residuals
        if self.warnings:
            out["warnings"] = self.warnings
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"relation: {self.relation.combo} = 0",
            f"domain:   {self.domain}",
            "",
            f"{'symbol':<18} {'coeff':>6} {'value_re':>24} {'value_im':>24} {'tail':>10}",
        ]
        for r in self.per_symbol:
            lines.append(f"{r.symbol!s:<18} {r.coeff!s:>6} {r.value.real:>24.16e} {r.value.imag:>24.16e} {r.tail:>10.3e}")
        lines.append("")
        header = f"{'truncation':<14} {'residual':>12}"
        if self.printed_combo is not None:
            header += f" {'printed':>12}"
        lines.append(header)
        for i, t in enumerate(self.truncations):
            row = f"{t!s:<14} {self.residuals[i]:>12.4e}"
            if self.printed_combo is not None:
                row += f" {self.printed_residuals[i]:>12.4e}"
            lines.append(row)
        lines.append("")
        lines.append(f"budget {self.budget:.4e}  floor {self.floor_tol:.1e}  verdict {self.verdict}")
        if self.reference is not None:
            lines.append(f"relative residual {self.residual / self.reference:.4e} (reference |z(4;4)| or |mzv(4)|)")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["symbol", "coeff", "value_re", "value_im", "tail"])
        for r in self.per_symbol:
            w.writerow([str(r.symbol), str(r.coeff), repr(r.value.real), repr(r.value.imag), repr(r.tail)])
        return buf.getvalue()


def default_truncations(trunc: Truncation) -> list[Truncation]:
    return [trunc.scaled(Fraction(1, 2)), trunc.scaled(Fraction(3, 4)), trunc]


def _reference_symbol(r: Relation) -> Symbol | None:
    # the plain weight-8 value (or mzv of the top weight) sets the scale of the relation
    for s in r.combo.symbols():
        if isinstance(s, MzvSymbol) and s.depth == 1:
            return s
        if not isinstance(s, MzvSymbol) and s.depth == 1:
            return s
    return None


def verify_numeric(
    r: Relation,
    domain: Domain | None,
    trunc: Truncation,
    floor_tol: float = 1e-9,
    truncations: list[Truncation] | None = None,
    with_printed: bool | None = None,
) -> VerificationReport:
    """Evaluate a relation at several truncations; the last one is reported in detail.

    The verdict is ``pass`` when the final residual is at most
    ``max(budget, floor_tol)``, ``inconclusive`` when it is not but some
    symbol carried a warning, and ``fail`` otherwise.
    """
    truncs = truncations if truncations is not None else default_truncations(trunc)
    if truncs[-1] != trunc:
        truncs = list(truncs) + [trunc]
    if with_printed is None:
        with_printed = r.kind == Signature.IMAGINARY.value and r.factors == ((2, 2), (2, 2))
    printed = printed_relation(r) if with_printed else None
    evaluator = ConeEvaluator(domain) if domain is not None and not r.combo.is_zero() and r.kind != MZV else None

    residuals, printed_res = [], []
    final = None
    for t in truncs:
        res = eval_combo(domain, r.combo, t, evaluator)
        residuals.append(abs(res.value))
        if printed is not None:
            printed_res.append(abs(eval_combo(domain, printed, t, evaluator).value))
        final = res

    rows = []
    reference = None
    if not r.combo.is_zero():
        values = evaluate_symbols(domain, r.combo.symbols(), trunc, evaluator)
        rows = [SymbolRow(s, c, values[s].value, values[s].tail_estimate) for s, c in r.combo.items()]
        ref_sym = _reference_symbol(r)
        if ref_sym is not None:
            reference = abs(values[ref_sym].value)

    budget = final.tail_estimate
    warnings = list(final.warnings)
    if residuals[-1] <= max(budget, floor_tol):
        verdict = "pass"
    elif warnings:
        verdict = "inconclusive"
    else:
        verdict = "fail"
    return VerificationReport(
        relation=r,
        domain=describe_domain(domain, trunc),
        truncations=list(truncs),
        per_symbol=rows,
        residuals=residuals,
        budget=budget,
        floor_tol=floor_tol,
        verdict=verdict,
        reference=reference,
        printed_combo=printed,
        printed_residuals=printed_res,
        warnings=warnings,
    )


def describe_domain(domain: Domain | None, trunc: Truncation) -> str:
    if domain is None:
        return f"integers, {trunc}"
    kind = "real cone" if isinstance(domain, RealCone) else "upper cone"
    return f"{kind} {domain}, {trunc}"
