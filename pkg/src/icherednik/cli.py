"""Command-line driver.  Exit status: 0 all checks pass, 1 a check failed, 2 bad input."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import __version__, calculus
from .algebra import build_algebra
from .center import (CentralityError, ExtractionError, center_scan, central_b, central_d_lift,
                     central_failures, fg_extract)
from .central import CentralPoly
from .expr import EvaluationError, ExprSyntaxError, parse, to_central, to_element
from .fields import FieldMismatch, QQ, field_from_options
from .modp import modp_suite
from .pbw import (DEFAULT_ORDER, DEFAULT_STEP_BUDGET, TRIANGULAR_ORDER, NormalizationError,
                  commutator, pbw_check)
from .reps import alpha_info, alpha_m_oracle, finite_dim_test, maximal_vectors

ORDERS = {"default": DEFAULT_ORDER, "triangular": TRIANGULAR_ORDER}


class InputError(ValueError):
    pass


@dataclass
class Check:
    name: str
    status: str
    witnesses: dict = dc_field(default_factory=dict)
    timing: float = 0.0

    def as_dict(self):
        return {"name": self.name, "status": self.status, "witnesses": self.witnesses,
                "timing": round(self.timing, 6)}


@dataclass
class Report:
    command: str
    field: str
    c: str
    checks: list = dc_field(default_factory=list)
    version: str = __version__

    @property
    def status(self) -> str:
        return "fail" if any(ch.status == "fail" for ch in self.checks) else "pass"

    @property
    def exit_code(self) -> int:
        return 1 if self.status == "fail" else 0

    def as_dict(self):
        return {
            "tool": "icherednik",
            "version": self.version,
            "command": self.command,
            "field": self.field,
            "c": self.c,
            "checks": [ch.as_dict() for ch in sorted(self.checks, key=lambda ch: ch.name)],
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        d = self.as_dict()
        lines = [f"icherednik {d['version']}  command={d['command']}  field={d['field']}  c={d['c']}"]
        for ch in d["checks"]:
            lines.append(f"[{ch['status'].upper()}] {ch['name']}  ({ch['timing']:.3f}s)")
            for key, value in ch["witnesses"].items():
                if isinstance(value, list):
                    lines.append(f"    {key}:")
                    lines.extend(f"      - {item}" for item in value)
                else:
                    lines.append(f"    {key}: {value}")
        lines.append(f"overall: {d['status'].upper()}")
        return "\n".join(lines)


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _check(report: Report, name: str, fn):
    """Run ``fn() -> (passed: bool | None, witnesses)`` and record it; None means skipped."""
    with _Timer() as t:
        passed, witnesses = fn()
    status = "skip" if passed is None else ("pass" if passed else "fail")
    report.checks.append(Check(name, status, witnesses, t.elapsed))
    return passed


def _scalar(text: str, field):
    try:
        return field(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar {text!r}: {exc}") from exc


def _admissibility(report, algebra):
    return _check(report, "admissible", lambda: (
        algebra.admissible, {"jacobi_residual": str(algebra.jacobi_residual)}))


# -- subcommands --------------------------------------------------------------

def cmd_normalize(args, algebra, report):
    table = algebra.table_for(ORDERS[args.order])
    _check(report, "normalize", lambda: (True, {
        "input": args.expr, "order": " < ".join(table.order),
        "normal_form": str(to_element(parse(args.expr), table))}))


def cmd_commutator(args, algebra, report):
    table = algebra.table_for(ORDERS[args.order])
    a, b = to_element(parse(args.a), table), to_element(parse(args.b), table)
    _check(report, "commutator", lambda: (True, {
        "a": args.a, "b": args.b, "bracket": str(commutator(a, b))}))


def cmd_fg(args, algebra, report):
    alpha = to_central(parse(args.alpha), algebra.field)
    Fa, Ga = calculus.fg(alpha)
    _check(report, "fg", lambda: (True, {"alpha": str(alpha), "F": str(Fa), "G": str(Ga)}))

    def oracle():
        if algebra.field.characteristic == 2:
            return None, {"reason": "extraction divides by 2 and 4"}
        base = build_algebra(CentralPoly({}, algebra.field))
        Fx, Gx = fg_extract(alpha, base)
        return (Fx, Gx) == (Fa, Ga), {"F_extracted": str(Fx), "G_extracted": str(Gx)}

    _check(report, "fg-oracle", oracle)


def cmd_fg_table(args, algebra, report):
    n = args.max_degree if args.max_degree is not None else 5
    table = calculus.fg_table(algebra.field)
    rows = [f"n={k}: F = {F}, G = {G}" for k, (F, G) in enumerate(table.extend(n))]
    _check(report, "fg-table", lambda: (True, {"rows": rows}))

    def identities():
        bad = []
        for k in range(n + 1):
            mono = CentralPoly.monomial(k, 0, algebra.field)
            for label, r in zip(("F-recursion", "G-recursion", "GF = FG + 2FF"),
                                calculus.fg_identity_residuals(mono)):
                if r:
                    bad.append(f"Delta^{k}: {label} residual {r}")
        return not bad, {"failures": bad} if bad else {"checked": n + 1}

    _check(report, "fg-identities", identities)


def cmd_jacobi(args, algebra, report):
    r = algebra.jacobi_residual
    _check(report, "jacobi", lambda: (r.is_zero(), {"residual": str(r)}))


def cmd_pbw_check(args, algebra, report):
    def run():
        rep = pbw_check(algebra.table_for(ORDERS[args.order]))
        w = {"triples_checked": rep.triples_checked, "assumption": rep.assumption}
        if rep.failures:
            w["failures"] = [f"{','.join(t)}: {r}" for t, r in rep.failures]
        return rep.passed, w
    _check(report, "pbw-check", run)


def cmd_center_b(args, algebra, report):
    if not _admissibility(report, algebra):
        return
    B = central_b(algebra)
    _check(report, "center-b", lambda: (not central_failures(B), {"B": str(B)}))


def cmd_center_d(args, algebra, report):
    if not _admissibility(report, algebra):
        return
    lift = central_d_lift(algebra, args.max_degree)

    def run():
        w = {"z": str(lift.z), "D": str(lift.D)}
        if lift.alpha is not None:
            w["alpha"] = str(lift.alpha)
            w["closed_form_matches"] = lift.matching_variants()
        return not central_failures(lift.D), w
    _check(report, "center-d", run)


def cmd_center_scan(args, algebra, report):
    total = args.max_degree if args.max_degree is not None else 3
    found = {}

    def scan():
        res = found["res"] = center_scan(algebra, args.v_degree, args.ug_degree, total)
        return True, {"monomials": res.monomials, "dimension": res.dimension,
                      "basis": [str(b) for b in res.basis]}
    _check(report, "center-scan", scan)
    res = found["res"]
    if res.expected is not None:
        _check(report, "center-scan-products", lambda: (res.matches_expected, {
            "span_of_B^i_D^j_in_box": [str(b) for b in res.expected]}))


def cmd_alpha_m(args, algebra, report):
    if not _admissibility(report, algebra):
        return
    for m in range(1, args.m + 1):
        info = alpha_info(algebra, m)
        oracle = alpha_m_oracle(algebra, m)
        _check(report, f"alpha-m[{m}]", lambda: (
            all(v == info.alpha for v in oracle.values()),
            {"alpha": str(info.alpha), "central": info.central,
             "as_central": str(info.as_central) if info.as_central is not None else None}))


def cmd_finite_dim(args, algebra, report):
    if not _admissibility(report, algebra):
        return
    lam, mu = _scalar(args.lam, QQ), _scalar(args.mu, algebra.field)
    if lam.denominator == 1:
        lam = int(lam)

    def run():
        rep = finite_dim_test(algebra, lam, mu, args.m_max)
        return True, {
            "lambda_nonneg_integer": rep.lam_admissible,
            "f_nilpotent_on_V": rep.f_nilpotent,
            "witness_m": rep.witness,
            "verdict": rep.verdict,
            "alpha": [f"m={m}: {a} (central={c}, kills V={k})" for m, a, c, k in rep.per_m],
        }
    _check(report, "finite-dim", run)


def cmd_maximal_vectors(args, algebra, report):
    if not _admissibility(report, algebra):
        return
    lam, mu = _scalar(args.lam, algebra.field), _scalar(args.mu, algebra.field)

    def run():
        vecs = maximal_vectors(algebra, lam, mu, args.depth)
        has_top = any(set(v.coeffs) == {(0, 0, 0)} for v in vecs)
        return has_top, {"count": len(vecs), "vectors": [str(v) for v in vecs]}
    _check(report, "maximal-vectors", run)


def cmd_modp(args, algebra, report):
    rep = modp_suite(algebra.c, args.p_mod)
    report.c = rep.c
    report.field = f"GF({args.p_mod})"
    for i, e in enumerate(rep.entries):
        w = {"element": e.element}
        if e.residual is not None:
            w["residual"] = e.residual
        _check(report, f"modp[{i:02d}] {e.claim}", lambda e=e, w=w: (e.passed, w))


COMMANDS = {
    "normalize": cmd_normalize,
    "commutator": cmd_commutator,
    "fg": cmd_fg,
    "fg-table": cmd_fg_table,
    "jacobi": cmd_jacobi,
    "pbw-check": cmd_pbw_check,
    "center-b": cmd_center_b,
    "center-d": cmd_center_d,
    "center-scan": cmd_center_scan,
    "alpha-m": cmd_alpha_m,
    "finite-dim": cmd_finite_dim,
    "maximal-vectors": cmd_maximal_vectors,
    "modp": cmd_modp,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--c", default="0", help="deformation parameter, a polynomial in Delta and tau")
    common.add_argument("--field", choices=("q", "fp"), default="q")
    common.add_argument("--p", type=int, default=None, help="prime for --field fp")
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--json", action="store_true")
    common.add_argument("--step-budget", type=int, default=DEFAULT_STEP_BUDGET)
    common.add_argument("--order", choices=tuple(ORDERS), default="default")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="icherednik", description=__doc__)
    parser.add_argument("--version", action="version", version=f"icherednik {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("normalize", parents=[common]).add_argument("expr")
    p = sub.add_parser("commutator", parents=[common])
    p.add_argument("a")
    p.add_argument("b")
    sub.add_parser("fg", parents=[common]).add_argument("alpha")
    for name in ("fg-table", "jacobi", "pbw-check", "center-b", "center-d"):
        sub.add_parser(name, parents=[common])
    p = sub.add_parser("center-scan", parents=[common])
    p.add_argument("--v-degree", type=int, default=None)
    p.add_argument("--ug-degree", type=int, default=None)
    sub.add_parser("alpha-m", parents=[common]).add_argument("--m", type=int, default=3)
    p = sub.add_parser("finite-dim", parents=[common])
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", default="0")
    p.add_argument("--m-max", type=int, default=3)
    p = sub.add_parser("maximal-vectors", parents=[common])
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", default="0")
    p.add_argument("--depth", type=int, default=2)
    sub.add_parser("modp", parents=[common])
    return parser


def run(argv=None) -> tuple[Report | None, int]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return None, 2 if exc.code else 0
    try:
        if args.command == "modp":
            if args.p is None:
                raise InputError("modp needs --p")
            args.p_mod = args.p
            field = QQ
        else:
            field = field_from_options(args.field, args.p)
        c = to_central(parse(args.c), field)
        algebra = build_algebra(c, field, args.step_budget)
        report = Report(args.command, repr(field), str(c))
        COMMANDS[args.command](args, algebra, report)
    except (ExprSyntaxError, EvaluationError, InputError, FieldMismatch,
            ZeroDivisionError, ValueError) as exc:
        print(f"icherednik: error: {exc}", file=sys.stderr)
        return None, 2
    except (NormalizationError, ExtractionError, CentralityError, ArithmeticError) as exc:
        report = Report(args.command, repr(field), args.c)
        report.checks.append(Check("error", "fail", {"message": str(exc)}))
        _emit(report, args)
        return report, 1
    _emit(report, args)
    return report, report.exit_code


def _emit(report: Report, args) -> None:
    text = report.to_json() if args.json else report.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    _, code = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
