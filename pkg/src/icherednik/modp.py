"""Checks in positive characteristic: p-th and p^2-th powers that become central."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Gl2CherednikAlgebra, build_algebra
from .central import CentralPoly
from .fields import GF
from .pbw import NcPoly, commutator

DEFAULT_PRIMES = (2, 3, 5)
MAX_PRIME = 5


@dataclass
class ModpEntry:
    claim: str
    element: str
    passed: bool
    residual: str | None = None  # first nonzero residual, as text, when failed

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class ModpReport:
    p: int
    c: str
    entries: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


def _require_prime_field(algebra: Gl2CherednikAlgebra) -> int:
    p = algebra.field.characteristic
    if not p:
        raise ValueError("mod-p checks need an algebra over GF(p)")
    return p


def _centrality_entry(claim: str, z: NcPoly, label: str) -> ModpEntry:
    table = z.table
    for g in table.order:
        r = commutator(z, table.gen(g))
        if r:
            return ModpEntry(claim, label, False, f"[{label}, {g}] = {r}")
    return ModpEntry(claim, label, True)


def p_square_central(algebra: Gl2CherednikAlgebra, v: str) -> ModpEntry:
    """v^(p^2) commutes with all eight generators."""
    if v not in ("x", "y", "x1", "y1"):
        raise ValueError(f"{v} is not a letter of V")
    p = _require_prime_field(algebra)
    label = f"{v}^{p * p}"
    return _centrality_entry(f"{label} is central", algebra.gen(v) ** (p * p), label)


def iterated_bracket(v: NcPoly, w: NcPoly, times: int) -> NcPoly:
    """ad(v)^times (w)."""
    for _ in range(times):
        w = commutator(v, w)
    return w


def p_power_landing(algebra: Gl2CherednikAlgebra, v: str, w: str) -> ModpEntry:
    """[v^p, w] avoids x1, y1 and equals ad(v)^p(w)."""
    if v not in ("x", "y") or w not in ("x1", "y1"):
        raise ValueError("need v in {x, y} and w in {x1, y1}")
    p = _require_prime_field(algebra)
    gv, gw = algebra.gen(v), algebra.gen(w)
    direct = commutator(gv ** p, gw)
    claim = f"[{v}^{p}, {w}] lies in U(g x k^2) and equals ad({v})^{p}({w})"
    stray = direct.letters() & {"x1", "y1"}
    if stray:
        return ModpEntry(claim, f"[{v}^{p}, {w}]", False, f"contains {sorted(stray)}: {direct}")
    iterated = iterated_bracket(gv, gw, p)
    if iterated != direct:
        return ModpEntry(claim, f"[{v}^{p}, {w}]", False, f"difference {direct - iterated}")
    return ModpEntry(claim, f"[{v}^{p}, {w}] = {direct}", True)


def restricted_powers_central(algebra: Gl2CherednikAlgebra) -> list[ModpEntry]:
    """e^p, f^p, h^p - h and tau^p - tau commute with all eight generators."""
    p = _require_prime_field(algebra)
    if p < 3:
        raise ValueError("restricted powers are checked for p >= 3")
    g = algebra.gens()
    elements = {
        f"e^{p}": g["e"] ** p,
        f"f^{p}": g["f"] ** p,
        f"h^{p} - h": g["h"] ** p - g["h"],
        f"tau^{p} - tau": g["tau"] ** p - g["tau"],
    }
    return [_centrality_entry(f"{label} is central", z, label) for label, z in elements.items()]


def modp_suite(c: CentralPoly, p: int) -> ModpReport:
    """All mod-p claims for c reduced into GF(p)."""
    if p > MAX_PRIME:
        raise ValueError(f"primes above {MAX_PRIME} exceed the desk-scale ceiling")
    field = GF(p)
    algebra = build_algebra(c.reduce(field) if c.field != field else c, field)
    report = ModpReport(p, str(algebra.c))
    report.entries.append(ModpEntry(
        "c is admissible in this characteristic", f"jacobi residual {algebra.jacobi_residual}",
        algebra.admissible, None if algebra.admissible else str(algebra.jacobi_residual)))
    for v in ("x", "y", "x1", "y1"):
        report.entries.append(p_square_central(algebra, v))
    for v in ("x", "y"):
        for w in ("x1", "y1"):
            report.entries.append(p_power_landing(algebra, v, w))
    if p >= 3:
        report.entries.extend(restricted_powers_central(algebra))
    return report
