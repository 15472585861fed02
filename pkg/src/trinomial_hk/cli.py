"""Command-line front end.

    trihk classify   POLY
    trihk invariants POLY [--n N]
    trihk delta      POLY [--n N] (--p P | --l L | --all)
    trihk ehk        POLY [--n N] (--p P | --l L | --all)
    trihk report     POLY [--n N] (--p P | --l L | --all) [--force]
    trihk verify     POLY [--n N]

POLY is either a trinomial such as ``x^3*y+y^3*z+z^3*x`` or the exponent
form ``3,1,0;0,3,1;1,0,3``.  Output is text, JSON or CSV (``--format``, or the
``TRIHK_FORMAT`` environment variable).  Rationals are always written as
"num/den" strings in JSON and CSV.

Exit status: 0 on success, 2 on a domain error (a JSON object with ``error``
and ``message`` goes to stderr), 1 on an internal fault.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction
from typing import Any, Optional

from .classify import Irregular, classify, invariants, reduce
from .closed_forms import crosscheck
from .delta import STRONGLY_SEMISTABLE, Finite, _check_unit, delta, delta_table, unit_classes
from .errors import DomainError, HypothesisNotMet, NotCoprime, PBelowN, UsageError
from .frobenius import report, report_by_class
from .hilbert_kunz import base_term, check_prime, ehk_formula, ehk_value, formula_from_delta
from .poly import format_trinomial, parse_any

FORMAT_ENV = "TRIHK_FORMAT"
CSV_COLUMNS = ["case_id", "class_lo", "class_hi", "td", "s", "c", "ehk_base", "verdict"]


def q(x) -> Optional[str]:
    """Exact rational as a string, or None."""
    return None if x is None else str(Fraction(x))


def render(v: Any) -> str:
    """Human-readable form of oracle and engine values."""
    if v is None:
        return "-"
    if v is STRONGLY_SEMISTABLE:
        return "strongly_semistable"
    if isinstance(v, tuple) and not hasattr(v, "_fields"):
        return "(" + ", ".join(render(x) for x in v) + ")"
    return str(v)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


class Output:
    """Collects a payload in the three formats."""

    def __init__(self, payload: dict, rows: list[dict], text: str):
        self.payload = payload
        self.rows = rows
        self.text = text

    def emit(self, fmt: str) -> str:
        if fmt == "json":
            return dumps(self.payload) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.DictWriter(buf, CSV_COLUMNS, lineterminator="\n")
            w.writeheader()
            for row in self.rows:
                w.writerow({k: "" if row.get(k) is None else row[k] for k in CSV_COLUMNS})
            return buf.getvalue()
        return self.text if self.text.endswith("\n") else self.text + "\n"


def _class_pair(l: int, modulus: int) -> list[int]:
    r = l % modulus
    lo = min(r, modulus - r) if modulus > 2 else r
    return [lo, modulus - lo if modulus > 2 else lo]


# --- selecting classes ---------------------------------------------------

def _selection(args) -> str:
    chosen = [name for name, v in (("p", args.p), ("l", args.l), ("all", args.all)) if v not in (None, False)]
    if len(chosen) > 1:
        raise UsageError("give only one of --p, --l, --all")
    return chosen[0] if chosen else ""


def _regular_classes(args, inv) -> list[int]:
    """Class representatives requested for a regular curve."""
    modulus = 2 * inv.lam_h
    sel = _selection(args)
    if sel == "all":
        return unit_classes(modulus)
    if sel == "l":
        _check_unit(inv, args.l)
        return [_class_pair(args.l, modulus)[0]]
    if sel == "p":
        check_prime(args.p)
        if args.p < args.n:
            raise PBelowN(f"p = {args.p} < n = {args.n}")
        if math.gcd(args.p, modulus) != 1:
            raise NotCoprime(f"p = {args.p} divides 2*lambda_h = {modulus}")
        return [_class_pair(args.p, modulus)[0]]
    raise UsageError("a regular trinomial needs one of --p, --l, --all")


# --- subcommands ---------------------------------------------------------

def cmd_classify(t, args) -> Output:
    cls = classify(t)
    head = {"poly": format_trinomial(t), "degree": t.degree, "coefficients_dropped": t.coefficients_dropped}
    if isinstance(cls, Irregular):
        payload = {**head, "kind": "irregular", "axis": cls.axis.name, "r": cls.r, "balanced": cls.balanced}
        text = f"{head['poly']}: irregular, multiplicity r = {cls.r} at {cls.axis.name}, d = {t.degree}"
        row = {"case_id": head["poly"], "verdict": "irregular"}
    else:
        nf = cls.normal_form
        payload = {**head, "kind": "regular", "type": nf.type_name, "params": list(nf.kind.params()),
                   "permutation": list(nf.permutation), "monomial_order": list(nf.monomial_order)}
        text = f"{head['poly']}: regular, type {nf.type_name}, params {list(nf.kind.params())}, d = {t.degree}"
        row = {"case_id": head["poly"], "verdict": "regular"}
    if t.coefficients_dropped:
        text += "\nnote: coefficients were dropped"
    return Output(payload, [row], text)


def cmd_invariants(t, args) -> Output:
    cls = classify(t)
    if isinstance(cls, Irregular):
        raise HypothesisNotMet("invariants are defined for regular trinomials only")
    inv = invariants(cls.normal_form)
    red = reduce(inv, args.n)
    payload = {"d": inv.d, "alpha": inv.alpha, "beta": inv.beta, "nu": inv.nu, "lambda": inv.lam,
               "a": inv.a, "lambda_h": inv.lam_h, "n": args.n, "a_n": red.a_n, "lambda_hn": red.lam_hn,
               "symmetric": inv.is_symmetric}
    text = "\n".join(f"{k} = {str(v).lower() if isinstance(v, bool) else v}" for k, v in payload.items())
    row = {"case_id": format_trinomial(t), "ehk_base": q(base_term(inv.d, args.n)), "verdict": "regular"}
    return Output(payload, [row], text)


def _delta_row(value, pair) -> dict:
    if value is STRONGLY_SEMISTABLE:
        return {"class": pair, "value": "strongly_semistable"}
    return {"class": pair, "td": q(value.td), "s": value.ds}


def _csv_row(inv, n, pair, value) -> dict:
    base = q(base_term(inv.d, n))
    row = {"case_id": f"class-{pair[0]}", "class_lo": pair[0], "class_hi": pair[1], "ehk_base": base}
    if value is STRONGLY_SEMISTABLE:
        row["verdict"] = "strongly_semistable"
    else:
        row.update(td=q(value.td), s=value.ds, c=formula_from_delta(inv, n, value).c, verdict="unstable")
    return row


def _regular(t):
    cls = classify(t)
    if isinstance(cls, Irregular):
        return None
    return invariants(cls.normal_form)


def cmd_delta(t, args) -> Output:
    inv = _regular(t)
    if inv is None:
        raise HypothesisNotMet("Delta is defined for regular trinomials only")
    modulus = 2 * inv.lam_h
    classes = _regular_classes(args, inv)
    if _selection(args) == "all":
        values = [row.value for row in delta_table(inv, args.n).rows]
    else:
        values = [delta(inv, args.n, l) for l in classes]
    pairs = [_class_pair(l, modulus) for l in classes]
    payload: dict = {"modulus": modulus}
    if args.p is not None:
        payload["p"] = args.p
    payload["rows"] = [_delta_row(v, pr) for v, pr in zip(values, pairs)]
    lines = [f"modulus {modulus}"]
    for v, pr in zip(values, pairs):
        lines.append(f"+-{pr[0]}: {render(v)}")
    rows = [_csv_row(inv, args.n, pr, v) for v, pr in zip(values, pairs)]
    return Output(payload, rows, "\n".join(lines))


def _formula_json(f) -> dict:
    sym = f.symbol()
    return {"base": q(sym.base), "coefficient": q(sym.coefficient), "p_power": sym.p_power,
            "c": f.c if f.s is not None else None, "s": f.s}


def cmd_ehk(t, args) -> Output:
    inv = _regular(t)
    if inv is None:
        if args.p is not None:
            v = ehk_value(t, args.n, args.p)
            payload = {"p": args.p, "value": q(v.value), "decimal": v.decimal}
            return Output(payload, [{"case_id": f"p-{args.p}", "ehk_base": q(v.value), "verdict": "irregular"}],
                          q(v.value))
        f = ehk_formula(t, args.n)
        payload = {"formula": _formula_json(f)}
        return Output(payload, [{"case_id": "irregular", "ehk_base": q(f.symbol().base), "verdict": "irregular"}],
                      str(f.symbol()))
    modulus = 2 * inv.lam_h
    if _selection(args) == "p":
        _regular_classes(args, inv)
        v = ehk_value(t, args.n, args.p)
        value = delta(inv, args.n, args.p)
        pair = _class_pair(args.p, modulus)
        payload = {"p": args.p, "value": q(v.value), "decimal": v.decimal}
        row = _csv_row(inv, args.n, pair, value)
        row["case_id"] = f"p-{args.p}"
        return Output(payload, [row], q(v.value))
    classes = _regular_classes(args, inv)
    rows, json_rows, lines = [], [], [f"modulus {modulus}"]
    for l in classes:
        value = delta(inv, args.n, l)
        f = formula_from_delta(inv, args.n, value)
        pair = _class_pair(l, modulus)
        json_rows.append({"class": pair, **_formula_json(f)})
        rows.append(_csv_row(inv, args.n, pair, value))
        lines.append(f"+-{pair[0]}: {f.symbol()}")
    return Output({"modulus": modulus, "rows": json_rows}, rows, "\n".join(lines))


def _report_json(r) -> dict:
    out = {"d": r.d, "n": r.n}
    if r.strongly_semistable:
        out["verdict"] = "strongly_semistable"
    else:
        out["verdict"] = "unstable"
        out["s"] = r.verdict.s
    out["hn_gap"] = q(r.hn_gap)
    out["deg_L"] = q(r.deg_L)
    if r.p is not None:
        out["p"] = r.p
    if r.modulus is not None:
        out["modulus"] = r.modulus
        out["class"] = _class_pair(r.l, r.modulus)
    if isinstance(r.delta_value, Finite):
        out["td"] = q(r.delta_value.td)
    if r.irregular_case is not None:
        out["r"] = r.irregular_case.r
    out["p_min"] = r.p_min
    out["preconditions_ok"] = r.preconditions_ok
    if r.conjectural:
        out["conjectural"] = True
    return out


def _report_text(r) -> str:
    where = f"p = {r.p}" if r.p is not None else (f"p = +-{_class_pair(r.l, r.modulus)[0]} mod {r.modulus}"
                                                 if r.modulus else "every p")
    if r.strongly_semistable:
        s = f"{where}: V_{r.n} strongly semistable"
    else:
        s = f"{where}: F^{r.verdict.s}* V_{r.n} not semistable, hn_gap = {r.hn_gap}"
        if r.deg_L is not None:
            s += f", deg L = {r.deg_L}"
    if r.conjectural:
        s += " [conjectural]"
    return s


def _report_csv(r, inv) -> dict:
    row = {"case_id": f"p-{r.p}" if r.p is not None else "report", "ehk_base": q(base_term(r.d, r.n)),
           "verdict": "strongly_semistable" if r.strongly_semistable else f"unstable_at_{r.verdict.s}"}
    if r.modulus is not None:
        pair = _class_pair(r.l, r.modulus)
        row.update(class_lo=pair[0], class_hi=pair[1])
        if r.p is None:
            row["case_id"] = f"class-{pair[0]}"
    if isinstance(r.delta_value, Finite):
        row.update(td=q(r.delta_value.td), s=r.delta_value.ds, c=formula_from_delta(inv, r.n, r.delta_value).c)
    return row


def cmd_report(t, args) -> Output:
    inv = _regular(t)
    sel = _selection(args)
    if inv is None:
        reports = [report(t, args.n, args.p, args.force) if sel == "p"
                   else report_by_class(t, args.n, 1, args.force)]
    elif sel == "p":
        _regular_classes(args, inv)
        reports = [report(t, args.n, args.p, args.force)]
    else:
        reports = [report_by_class(t, args.n, l, args.force) for l in _regular_classes(args, inv)]
    if len(reports) == 1 and sel != "all":
        payload = _report_json(reports[0])
    else:
        payload = {"rows": [_report_json(r) for r in reports]}
    return Output(payload, [_report_csv(r, inv) for r in reports], "\n".join(_report_text(r) for r in reports))


def cmd_verify(t, args) -> Output:
    outcomes = crosscheck(t, args.n)
    payload = {"poly": format_trinomial(t), "n": args.n, "outcomes": [
        {"case_id": o.case_id, "expected": render(o.expected), "computed": render(o.computed),
         "status": o.status.value, **({"note": o.note} if o.note else {})} for o in outcomes]}
    lines = [f"{o.status.value:<18} {o.case_id}: expected {render(o.expected)}, computed {render(o.computed)}"
             + (f"  # {o.note}" if o.note else "") for o in outcomes]
    rows = [{"case_id": o.case_id, "verdict": o.status.value} for o in outcomes]
    return Output(payload, rows, "\n".join(lines))


COMMANDS = {
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "delta": cmd_delta,
    "ehk": cmd_ehk,
    "report": cmd_report,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get(FORMAT_ENV, "text")
    if default_fmt not in ("text", "json", "csv"):
        default_fmt = "text"
    parser = argparse.ArgumentParser(prog="trihk", description="Hilbert-Kunz data of trinomial plane curves")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("poly")
        sp.add_argument("--n", type=int, default=1)
        sp.add_argument("--p", type=int)
        sp.add_argument("--l", type=int)
        sp.add_argument("--all", action="store_true")
        sp.add_argument("--format", choices=["text", "json", "csv"], default=default_fmt)
        sp.add_argument("--force", action="store_true")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        t = parse_any(args.poly)
        out = COMMANDS[args.command](t, args)
    except DomainError as e:
        stderr.write(dumps({"error": e.code, "message": str(e)}) + "\n")
        return 2
    except Exception as e:  # internal fault
        stderr.write(dumps({"error": getattr(e, "code", "InternalError"), "message": str(e)}) + "\n")
        return 1
    stdout.write(out.emit(args.format))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
