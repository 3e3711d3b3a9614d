"""Central elements of H_c: B = b - c, the lift D of d, and bounded center scans."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import calculus, linalg
from .algebra import Gl2CherednikAlgebra, distinguished_elements, embed_central
from .central import CentralPoly
from .pbw import (NcPoly, RelationTable, box_monomials, commutator, echelon_elements,
                  solve_centrality)


class CentralityError(AssertionError):
    def __init__(self, what: str, generator: str, residual: NcPoly):
        super().__init__(f"{what} does not commute with {generator}: residual {residual}")
        self.generator = generator
        self.residual = residual


class ExtractionError(ArithmeticError):
    pass


class InadmissibleParameter(ValueError):
    pass


def _require_admissible(algebra):
    if not algebra.admissible:
        raise InadmissibleParameter(
            f"c = {algebra.c} fails the Jacobi condition (residual {algebra.jacobi_residual})")


def central_box(field, max_delta: int, max_tau: int):
    return [(n, m) for n in range(max_delta + 1) for m in range(max_tau + 1)]


def express_central(element: NcPoly, max_delta: int, max_tau: int) -> CentralPoly | None:
    """Write a U(gl2)-element as an embedded polynomial in Delta, tau, if possible."""
    table = element.table
    field = table.field
    columns = {}
    for n, m in central_box(field, max_delta, max_tau):
        columns[(n, m)] = embed_central(CentralPoly.monomial(n, m, field), table).terms
    sol = linalg.solve(columns, element.terms, field)
    if sol is None:
        return None
    return CentralPoly(sol, field)


def fg_extract(alpha: CentralPoly, algebra: Gl2CherednikAlgebra):
    """F(alpha), G(alpha) read off the normal form of [alpha, x]."""
    field = algebra.field
    if field.characteristic == 2:
        raise ExtractionError("extraction divides by 2 and 4; unavailable in characteristic 2")
    table = algebra.table
    bracket = commutator(embed_central(alpha, table), table.gen("x"))
    ix, iy = table.index["x"], table.index["y"]
    A, B = {}, {}
    for mono, c in bracket.terms.items():
        if table.mono_vdegree(mono) != 1 or not (mono[ix] or mono[iy]):
            raise ExtractionError(f"monomial {table.mono_text(mono)} is not (U g) x or (U g) y")
        stripped = list(mono)
        target = A if mono[ix] else B
        stripped[ix if mono[ix] else iy] -= 1
        target[tuple(stripped)] = c
    A = NcPoly(table, A)
    B = NcPoly(table, B)
    nd, nt = alpha.degree_delta(), max(alpha.degree_tau(), 0)
    e, h = table.gen("e"), table.gen("h")
    # solve 4 e F = B over the central box
    columns = {k: (e * embed_central(CentralPoly.monomial(*k, field), table) * 4).terms
               for k in central_box(field, max(nd, 0), nt)}
    sol = linalg.solve(columns, B.terms, field)
    if sol is None:
        raise ExtractionError(f"y-coefficient {B} is not 4e times a central element")
    Fa = CentralPoly(sol, field)
    rest = A - h * embed_central(Fa, table) * 2
    Ga = express_central(rest, max(nd, 0), nt + 1)
    if Ga is None:
        raise ExtractionError(f"x-coefficient remainder {rest} is not central")
    return Fa, Ga


def central_b(algebra: Gl2CherednikAlgebra) -> NcPoly:
    """B = y1 x - x1 y - c, checked against all eight generators."""
    _require_admissible(algebra)
    B = distinguished_elements(algebra).b - algebra.embed(algebra.c)
    verify_central(B, "B")
    return B


def verify_central(z: NcPoly, what: str = "element") -> None:
    table = z.table
    for g in table.order:
        r = commutator(z, table.gen(g))
        if r:
            raise CentralityError(what, g, r)


def central_failures(z: NcPoly) -> list:
    table = z.table
    out = []
    for g in table.order:
        r = commutator(z, table.gen(g))
        if r:
            out.append((g, r))
    return out


@dataclass
class DLift:
    z: CentralPoly
    D: NcPoly
    alpha: CentralPoly | None
    variants: dict = dc_field(default_factory=dict)  # name -> Delta-dependent part of z - candidate

    def matching_variants(self):
        return sorted(name for name, r in self.variants.items() if r is not None and r.is_zero())

    def __iter__(self):
        yield self.z
        yield self.D


def _lift_variants(c: CentralPoly, alpha: CentralPoly, z: CentralPoly) -> dict:
    field = c.field
    tau = CentralPoly.tau(field)
    delta = CentralPoly.delta(field)
    half = field(Fraction(1, 2))
    three_halves = field(Fraction(3, 2))
    candidates = {
        "(tau + 3/2) c + alpha/2": (tau + three_halves) * c + alpha * half,
        "tau + (3/2) c + alpha/2": tau + c * three_halves + alpha * half,
        "(tau + 3/2) c - alpha/2": (tau + three_halves) * c - alpha * half,
        "(tau + 3/2) c + Delta c/2 - alpha/2": (tau + three_halves) * c + delta * c * half - alpha * half,
    }
    out = {}
    for name, cand in candidates.items():
        diff = z - cand
        out[name] = diff - diff.pure_tau_part()
    return out


def central_d_lift(algebra: Gl2CherednikAlgebra, bound: int | None = None) -> DLift:
    """Find central z with [d - z, x] = 0 by a linear solve over {Delta^n tau^m : n + m <= bound}.

    The additive-constant ambiguity is fixed by giving z no constant term.
    The hand-derived closed form alpha with F(alpha) = c + Delta F(c) is
    computed separately and compared, modulo k[tau], against a few
    readings of the lift formula.
    """
    _require_admissible(algebra)
    field = algebra.field
    table = algebra.table
    c = algebra.c
    if bound is None:
        bound = max(c.total_degree(), 0) + 2
    x = table.gen("x")
    d = distinguished_elements(algebra).d
    target = commutator(d, x)
    columns = {}
    for n in range(bound + 1):
        for m in range(bound + 1 - n):
            if (n, m) == (0, 0):
                continue
            img = embed_central(CentralPoly.monomial(n, m, field), table)
            columns[(n, m)] = commutator(img, x).terms
    sol = linalg.solve(columns, target.terms, field)
    if sol is None:
        raise ArithmeticError(f"no central z with [d - z, x] = 0 in the box of degree {bound}")
    z = CentralPoly(sol, field)
    D = d - embed_central(z, table)
    verify_central(D, "D")
    alpha = None
    variants = {}
    if field.characteristic != 2:
        try:
            alpha = calculus.solve_F(c + CentralPoly.delta(field) * algebra.F_c)
            variants = _lift_variants(c, alpha, z)
        except calculus.UnsolvableF:
            alpha = None
    return DLift(z, D, alpha, variants)


@dataclass
class ScanResult:
    basis: list
    monomials: int
    expected: list | None = None

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def matches_expected(self):
        if self.expected is None:
            return None
        return self.basis == self.expected


def span_in_box(table: RelationTable, elements, box) -> list:
    """Echelon basis of span(elements) intersected with the coordinate span of ``box``."""
    inside = {next(iter(m.terms)) for m in box}
    columns = {}
    for i, z in enumerate(elements):
        columns[i] = {m: c for m, c in z.terms.items() if m not in inside}
    found = []
    for vec in linalg.nullspace(columns, table.field):
        w = table.zero()
        for i, c in vec.items():
            w = w + elements[i] * c
        found.append(w)
    return echelon_elements(table, found)


def center_scan(algebra: Gl2CherednikAlgebra, v_degree_bound=None, ug_degree_bound=None,
                total_degree=None, compare: bool = True) -> ScanResult:
    """Central elements among all normal monomials of the box.

    With ``compare`` and an admissible algebra, also computes the span of
    the products B^i D^j meeting the box, for comparison.
    """
    table = algebra.table
    box = box_monomials(table, v_degree_bound, ug_degree_bound, total_degree)
    basis = solve_centrality(table, box)
    expected = None
    if compare and algebra.admissible:
        B = central_b(algebra)
        D = central_d_lift(algebra).D
        vmax = max(table.mono_vdegree(next(iter(m.terms))) for m in box)
        products = []
        for i, j in itertools.product(range(vmax // 2 + 1), repeat=2):
            if 2 * (i + j) <= vmax:
                products.append(B ** i * D ** j)
        expected = span_in_box(table, products, box)
    return ScanResult(basis, len(box), expected)
