"""Command-line interface: ``mdzeta <command> [options]``.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 divergence guard,
5 cache I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from .cache import ResultCache, canonical_key, make_record, resolve_cache_dir
from .cone import Domain, RealCone, Truncation, UpperCone
from .errors import Divergent, DomainMismatch, MdzetaError, ParseError
from .field import Signature, make_field, parse_element
from .identity import (
    Relation,
    compare_with_printed,
    derive_mzv_relation,
    derive_relation,
    verify_numeric,
)
from .numeric.zeta import eval_mzv, eval_symbol
from .symbolic.shuffle import (
    diagram_term,
    integral_shuffle,
    mzv_shuffle,
    shuffle_diagrams,
)
from .symbolic.stuffle import mzv_stuffle, stuffle_imaginary, stuffle_real
from .symbolic.symbols import (
    MdzvSymbol,
    MzvSymbol,
    Variant,
    normalize_exponent,
    parse_symbol,
)

DEFAULT_REAL_D = 2
DEFAULT_REAL_CONE = "2+w,2-w"
DEFAULT_IMAGINARY_D = -1
DEFAULT_SHELL = 80
DEFAULT_RADIUS = 60
DEFAULT_CUTOFF = 5000


@dataclass(frozen=True)
class RunConfig:
    """Validated domain, truncation and output settings of one command."""

    d: int | None
    domain: Domain | None
    truncation: Truncation
    fmt: str
    cache_dir: str | None = None
    use_cache: bool = False

    @property
    def domain_text(self) -> str:
        return "integers" if self.domain is None else str(self.domain)


# -- argument parsing ---------------------------------------------------------


def _parse_row(text: str) -> tuple:
    return tuple(normalize_exponent(p) for p in text.split(",")) if text.strip() else ()


def parse_factor(text: str):
    """``a;c`` -> ``(a, c)``; ``a,b;c,d`` -> depth-2 ``z1`` symbol."""
    if text.count(";") != 1:
        raise ParseError(f"expected a factor like '2;2', got {text!r}")
    top, bottom = (_parse_row(p) for p in text.split(";"))
    if len(top) != len(bottom) or not top:
        raise ParseError(f"mismatched exponent rows in {text!r}")
    if len(top) == 1:
        return top[0], bottom[0]
    return MdzvSymbol(Variant.SUP1, top, bottom)


def parse_mzv_factor(text: str) -> MzvSymbol:
    return MzvSymbol(_parse_row(text.replace(";", ",")))


def _integer_pair(factor) -> tuple[int, int]:
    if not isinstance(factor, tuple) or not all(isinstance(e, int) for e in factor):
        raise ParseError(f"this command needs integer factors like '2;2', got {factor}")
    return factor


def _domain_options(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("domain")
    g.add_argument("--d", type=int, help="squarefree d of Q(sqrt(d))")
    g.add_argument("--cone", help="real cone generators 'x+y*w,x+y*w' (default 2+w,2-w on d=2)")
    g.add_argument("--cplus", action="store_true", help="sum over the upper cone C+ of an imaginary field")
    t = g.add_mutually_exclusive_group()
    t.add_argument("--shell", type=int, help="real cone shells m+n <= S")
    t.add_argument("--radius", type=float, help="norm bound N(alpha) <= R^2")
    t.add_argument("--cutoff", type=int, help="index cutoff N for classical MZVs")


def _format_option(p: argparse.ArgumentParser, choices=("text", "json", "csv")) -> None:
    p.add_argument("--format", choices=choices, default="text")


def _kind_options(p: argparse.ArgumentParser, with_mzv: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--real", dest="kind", action="store_const", const="real")
    g.add_argument("--imaginary", dest="kind", action="store_const", const="imaginary")
    if with_mzv:
        g.add_argument("--mzv", dest="kind", action="store_const", const="mzv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mdzeta", description="Multiple Dedekind zeta values of quadratic fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one symbol by truncated summation")
    p.add_argument("--sym", required=True, help="symbol text, e.g. 'z1(2,2;2,2)' or 'mzv(1,3)'")
    _domain_options(p)
    _format_option(p)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--cache-dir")

    p = sub.add_parser("shuffle", help="integral shuffle of two factors")
    p.add_argument("--mzv", action="store_true", help="classical MZV factors such as '2' or '1,3'")
    p.add_argument("--diagrams", action="store_true", help="also list every interleaving")
    p.add_argument("factors", nargs=2)
    _format_option(p, ("text", "json"))

    p = sub.add_parser("stuffle", help="stuffle (infinite-sum shuffle) of two factors")
    _kind_options(p)
    p.add_argument("factors", nargs=2)
    _format_option(p, ("text", "json"))

    p = sub.add_parser("derive", help="derive the double-shuffle relation of a product")
    _kind_options(p)
    p.add_argument("factors", nargs=2)
    _format_option(p, ("text", "json"))

    p = sub.add_parser("verify", help="check a derived relation numerically at three truncations")
    _kind_options(p)
    p.add_argument("factors", nargs=2)
    _domain_options(p)
    p.add_argument("--floor-tol", type=float, default=1e-9)
    _format_option(p)

    p = sub.add_parser("diagrams", help="the 36 diagrams of z(2;2)*z(2;2)")
    _format_option(p, ("text", "csv"))

    p = sub.add_parser("cache", help="inspect or clear the result cache")
    p.add_argument("action", choices=("list", "clear"))
    p.add_argument("--cache-dir")
    _format_option(p, ("text", "json"))
    return parser


# -- domain resolution ----------------------------------------------------------


def resolve_domain(args, imaginary: bool | None = None) -> tuple[int, Domain]:
    want_imag = imaginary if imaginary is not None else (args.cplus or (args.d is not None and args.d < 0))
    d = args.d if args.d is not None else (DEFAULT_IMAGINARY_D if want_imag else DEFAULT_REAL_D)
    field = make_field(d)
    if want_imag or args.cplus:
        if args.cone:
            raise DomainMismatch("--cone describes a real cone; drop it when summing over C+")
        return d, UpperCone(field)
    cone_text = args.cone
    if cone_text is None:
        if d != DEFAULT_REAL_D:
            raise DomainMismatch(f"--cone is required for Q(sqrt({d}))")
        cone_text = DEFAULT_REAL_CONE
    parts = [s for s in cone_text.split(",") if s.strip()]
    if len(parts) != 2:
        raise ParseError(f"--cone needs two generators, got {cone_text!r}")
    mu, nu = (parse_element(field, s) for s in parts)
    return d, RealCone(field, mu, nu)


def resolve_truncation(args, domain: Domain | None) -> Truncation:
    if domain is None:
        if args.shell is not None or args.radius is not None:
            raise DomainMismatch("classical MZVs take --cutoff")
        return Truncation.cutoff(args.cutoff if args.cutoff is not None else DEFAULT_CUTOFF)
    if args.cutoff is not None:
        raise DomainMismatch("--cutoff applies to classical MZVs only")
    if args.radius is not None:
        return Truncation.radius(int(args.radius) if float(args.radius).is_integer() else args.radius)
    if isinstance(domain, UpperCone):
        if args.shell is not None:
            raise DomainMismatch("C+ is truncated by --radius")
        return Truncation.radius(DEFAULT_RADIUS)
    return Truncation.shell(args.shell if args.shell is not None else DEFAULT_SHELL)


def resolve_config(args, classical: bool, imaginary: bool | None = None) -> RunConfig:
    if classical:
        if args.cplus or args.cone or args.d is not None:
            raise DomainMismatch("classical MZVs take no field or cone")
        d, domain = None, None
    else:
        d, domain = resolve_domain(args, imaginary)
    return RunConfig(
        d=d,
        domain=domain,
        truncation=resolve_truncation(args, domain),
        fmt=args.format,
        cache_dir=getattr(args, "cache_dir", None),
        use_cache=not getattr(args, "no_cache", True),
    )


# -- commands -----------------------------------------------------------------------


def _result_payload(symbol: str, domain: str, value: complex, tail, term_count: int) -> dict:
    return {
        "symbol": symbol,
        "domain": domain,
        "value_re": value.real,
        "value_im": value.imag,
        "tail": tail,
        "term_count": term_count,
    }


def _emit(out, payload: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(payload), lineterminator="\n")
        w.writeheader()
        w.writerow(payload)
        out.write(buf.getvalue())
    else:
        out.write(text + "\n")


def cmd_eval(args, out, err) -> int:
    sym = parse_symbol(args.sym)
    classical = isinstance(sym, MzvSymbol)
    if not classical and not sym.is_convergent():
        raise Divergent(f"{sym} is outside the convergence guard")
    cfg = resolve_config(args, classical)
    domain, trunc, domain_text = cfg.domain, cfg.truncation, cfg.domain_text

    key = canonical_key(cfg.d, domain_text, str(sym), str(trunc))
    cache = ResultCache(resolve_cache_dir(cfg.cache_dir)) if cfg.use_cache else None
    record = cache.read(key) if cache else None
    if record is not None:
        value, tail, count, warnings = complex(record.value_re, record.value_im), record.tail, record.term_count, ()
    else:
        res = eval_mzv(sym, int(trunc.value)) if domain is None else eval_symbol(domain, sym, trunc)
        value, count, warnings = res.value, res.term_count, res.warnings
        tail = res.tail_estimate if math.isfinite(res.tail_estimate) else None
        if cache:
            cache.write(make_record(key, value, tail, count))
    for w in warnings:
        err.write(f"warning: {w}\n")
    payload = _result_payload(str(sym), f"{domain_text}, {trunc}", value, tail, count)
    tail_text = "n/a" if tail is None else f"{tail:.3e}"
    text = (
        f"{sym} on {domain_text}, {trunc}\n"
        f"value  {value.real:.16e} {value.imag:+.16e}i\n"
        f"tail   {tail_text} (heuristic)\n"
        f"terms  {count}"
    )
    _emit(out, payload, cfg.fmt, text)
    return 0


def _combo_out(out, combo, fmt: str, extra: dict | None = None) -> None:
    if fmt == "json":
        payload = {"combo": str(combo), "terms": combo.to_json()}
        payload.update(extra or {})
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(str(combo) + "\n")


def cmd_shuffle(args, out, err) -> int:
    a, b = args.factors
    if args.mzv:
        combo = mzv_shuffle(parse_mzv_factor(a), parse_mzv_factor(b))
        _combo_out(out, combo, args.format)
        return 0
    e1, e2 = _integer_pair(parse_factor(a)), _integer_pair(parse_factor(b))
    combo = integral_shuffle(e1, e2)
    diagrams = shuffle_diagrams(e1, e2) if args.diagrams else []
    if args.format == "json":
        extra = {}
        if args.diagrams:
            extra["diagrams"] = [
                {"axis1": _axis_text(dg.axis1), "axis2": _axis_text(dg.axis2), "symbol": str(s)} for dg, s in diagrams
            ]
        _combo_out(out, combo, "json", extra)
        return 0
    out.write(str(combo) + "\n")
    for k, (dg, s) in enumerate(diagrams, 1):
        out.write(f"{k:3d}  {_axis_text(dg.axis1):<24} {_axis_text(dg.axis2):<24} {s}\n")
    return 0


def cmd_stuffle(args, out, err) -> int:
    a, b = args.factors
    if args.kind == "mzv":
        combo = mzv_stuffle(parse_mzv_factor(a), parse_mzv_factor(b))
    elif args.kind == "imaginary":
        combo = stuffle_imaginary(parse_factor(a), parse_factor(b))
    else:
        f1, f2 = parse_factor(a), parse_factor(b)
        if not isinstance(f1, tuple) or not isinstance(f2, tuple):
            raise ParseError("the real stuffle takes depth-1 factors 'a;c'")
        combo = stuffle_real(f1, f2)
    _combo_out(out, combo, args.format)
    return 0


def _derive(args) -> Relation:
    a, b = args.factors
    if args.kind == "mzv":
        return derive_mzv_relation(parse_mzv_factor(a), parse_mzv_factor(b))
    sig = Signature.REAL if args.kind == "real" else Signature.IMAGINARY
    return derive_relation(sig, _integer_pair(parse_factor(a)), _integer_pair(parse_factor(b)))


def cmd_derive(args, out, err) -> int:
    rel = _derive(args)
    try:
        diff = compare_with_printed(rel)
        has_printed = True
    except ValueError:
        diff, has_printed = [], False
    if args.format == "json":
        payload = {
            "relation": str(rel.combo),
            "terms": rel.combo.to_json(),
            "provenance": rel.provenance,
            "printed_diff": [
                {"symbol": str(e.symbol), "engine": str(e.engine), "printed": str(e.printed)} for e in diff
            ]
            if has_printed
            else None,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    out.write(f"{rel}\n")
    out.write(f"# {rel.provenance}\n")
    if not has_printed:
        out.write("# no printed form to compare against\n")
    elif not diff:
        out.write("# matches the printed relation\n")
    else:
        out.write("# differs from the printed relation (coefficients scaled to a leading 1):\n")
        for e in diff:
            out.write(f"#   {e}\n")
    return 0


def cmd_verify(args, out, err) -> int:
    rel = _derive(args)
    cfg = resolve_config(args, args.kind == "mzv", imaginary=args.kind == "imaginary")
    report = verify_numeric(rel, cfg.domain, cfg.truncation, floor_tol=args.floor_tol)
    if cfg.fmt == "json":
        out.write(report.to_json() + "\n")
    elif cfg.fmt == "csv":
        out.write(report.to_csv())
    else:
        out.write(report.to_text() + "\n")
    return 0


def _axis_text(slots) -> str:
    return ">".join(str(s) for s in slots)


def diagram_rows() -> list[dict]:
    """The 36 diagrams of z(2;2)*z(2;2), grouped into four tables of nine.

    Table ``(r, c)``: ``r`` is 1 when alpha's source is outermost on axis 2,
    ``c`` the same for axis 1.
    """
    rows = []
    for dg, sym in shuffle_diagrams((2, 2), (2, 2)):
        r = 1 if dg.axis2[0].gen == "alpha" else 2
        c = 1 if dg.axis1[0].gen == "alpha" else 2
        rows.append({"table": f"({r},{c})", "axis1": _axis_text(dg.axis1), "axis2": _axis_text(dg.axis2),
                     "term": diagram_term(dg), "symbol": str(sym)})
    rows.sort(key=lambda row: row["table"])  # stable: keeps enumeration order inside a table
    for i, row in enumerate(rows):
        row["index"] = i % 9 + 1
    return rows


def cmd_diagrams(args, out, err) -> int:
    rows = diagram_rows()
    fields = ["table", "index", "axis1", "axis2", "term", "symbol"]
    if args.format == "csv":
        w = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: row[k] for k in fields})
        return 0
    table = None
    for row in rows:
        if row["table"] != table:
            table = row["table"]
            out.write(f"Table {table}\n")
        out.write(f"  {row['index']}  {row['axis1']:<14} {row['axis2']:<14} {row['term']:<62} {row['symbol']}\n")
    return 0


def cmd_cache(args, out, err) -> int:
    cache = ResultCache(resolve_cache_dir(args.cache_dir))
    if args.action == "clear":
        n = cache.clear()
        out.write(f"removed {n} record(s) from {cache.root}\n")
        return 0
    records = cache.list()
    if args.format == "json":
        out.write(json.dumps([r.to_dict() for r in records], indent=2) + "\n")
    else:
        for r in records:
            out.write(f"{r.key}\n")
    return 0


COMMANDS = {
    "eval": cmd_eval,
    "shuffle": cmd_shuffle,
    "stuffle": cmd_stuffle,
    "derive": cmd_derive,
    "verify": cmd_verify,
    "diagrams": cmd_diagrams,
    "cache": cmd_cache,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out, err)
    except MdzetaError as exc:
        err.write(f"error: {exc}\n")
        return exc.exit_code
    except ValueError as exc:
        # malformed numbers that slipped past argparse, e.g. a negative shell
        err.write(f"error: {exc}\n")
        return ParseError.exit_code


if __name__ == "__main__":
    sys.exit(main())
