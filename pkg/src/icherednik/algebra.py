"""Relation tables for H = U(gl2 x V) and its deformations H_c.

Conventions: ``x, y`` span k^2 and ``x1, y1`` span (k^2)*, both with ``x``,
``x1`` of h-weight +1; tau acts by +1 on k^2 and by -1 on (k^2)*.  The
V x V sector is driven by ``F(c), G(c)``:

    [y1, x] = 2h F(c) + G(c)      [x1, x] = -4e F(c)
    [y1, y] = 4f F(c)             [x1, y] = 2h F(c) - G(c)
"""

from __future__ import annotations

from dataclasses import dataclass

from . import calculus
from .central import CentralPoly
from .fields import QQ, Field, FieldMismatch
from .pbw import (DEFAULT_ORDER, DEFAULT_STEP_BUDGET, TRIANGULAR_ORDER, NcPoly,
                  RelationTable, commutator, normalize)

# gl2 sector plus gl2 acting on V; the table pairs are unordered facts.
BASE_BRACKETS = {
    ("h", "e"): {("e",): 2},
    ("h", "f"): {("f",): -2},
    ("e", "f"): {("h",): 1},
    ("h", "x"): {("x",): 1},
    ("h", "y"): {("y",): -1},
    ("h", "x1"): {("x1",): 1},
    ("h", "y1"): {("y1",): -1},
    ("e", "y"): {("x",): 1},
    ("e", "y1"): {("x1",): 1},
    ("f", "x"): {("y",): 1},
    ("f", "x1"): {("y1",): 1},
    ("tau", "x"): {("x",): 1},
    ("tau", "y"): {("y",): 1},
    ("tau", "x1"): {("x1",): -1},
    ("tau", "y1"): {("y1",): -1},
}

ETA = {"tau": ("tau", 1), "h": ("h", 1), "e": ("f", 1), "f": ("e", 1),
       "x": ("y1", 1), "x1": ("y", -1), "y": ("x1", -1), "y1": ("x", 1)}

J = {"h": ("h", 1), "e": ("f", -1), "f": ("e", -1), "x": ("y", 1), "y": ("x", 1)}


def base_table(field: Field = QQ, order=DEFAULT_ORDER,
               step_budget: int = DEFAULT_STEP_BUDGET) -> RelationTable:
    return RelationTable(BASE_BRACKETS, field, order, step_budget, name="H")


def casimir(table: RelationTable) -> NcPoly:
    """Delta = h^2 + 4ef - 2h, normal-ordered in ``table``."""
    h, e, f = table.gen("h"), table.gen("e"), table.gen("f")
    return h * h + e * f * 4 - h * 2


def embed_central(p: CentralPoly, table: RelationTable) -> NcPoly:
    """Image of ``p`` under Delta -> h^2 + 4ef - 2h, tau -> tau."""
    if p.field != table.field:
        raise FieldMismatch(f"cannot embed a {p.field!r} polynomial into a {table.field!r} table")
    cache = table.__dict__.setdefault("_embed_cache", {})
    out = table.zero()
    for (n, m), c in p.terms.items():
        img = cache.get((n, m))
        if img is None:
            img = _power(cache, "delta", n, lambda: casimir(table), table) * \
                _power(cache, "tau", m, lambda: table.gen("tau"), table)
            cache[(n, m)] = img
        out = out + img * c
    return out


def _power(cache, label, n, make, table):
    key = (label, n)
    hit = cache.get(key)
    if hit is None:
        hit = table.one() if n == 0 else _power(cache, label, n - 1, make, table) * make()
        cache[key] = hit
    return hit


def deformed_brackets(Fc: NcPoly, Gc: NcPoly) -> dict:
    """The V x V sector as word dicts, given embedded F(c), G(c)."""
    t = Fc.table
    h, e, f = t.gen("h"), t.gen("e"), t.gen("f")
    values = {
        ("y1", "x"): h * Fc * 2 + Gc,
        ("x1", "x"): e * Fc * -4,
        ("y1", "y"): f * Fc * 4,
        ("x1", "y"): h * Fc * 2 - Gc,
    }
    return {pair: dict(v.items()) for pair, v in values.items()}


class Gl2CherednikAlgebra:
    """H_c for a central parameter ``c``; immutable after construction."""

    def __init__(self, c: CentralPoly, field: Field | None = None,
                 step_budget: int = DEFAULT_STEP_BUDGET):
        field = field or c.field
        if c.field != field:
            c = c.reduce(field)
        self.c = c
        self.field = field
        self.step_budget = step_budget
        self.F_c, self.G_c = calculus.fg(c)
        self.jacobi_residual = calculus.jacobi_residual(c)
        self.admissible = self.jacobi_residual.is_zero()
        self._tables: dict = {}
        self.table = self.table_for(DEFAULT_ORDER)

    def table_for(self, order=DEFAULT_ORDER) -> RelationTable:
        order = tuple(order)
        table = self._tables.get(order)
        if table is None:
            base = base_table(self.field, order, self.step_budget)
            brackets = dict(BASE_BRACKETS)
            brackets.update(deformed_brackets(embed_central(self.F_c, base),
                                              embed_central(self.G_c, base)))
            table = RelationTable(brackets, self.field, order, self.step_budget,
                                  name=f"H_c, c = {self.c}")
            self._tables[order] = table
        return table

    @property
    def triangular(self) -> RelationTable:
        return self.table_for(TRIANGULAR_ORDER)

    def gen(self, name: str) -> NcPoly:
        return self.table.gen(name)

    def gens(self) -> dict:
        return self.table.gens_dict()

    def embed(self, p: CentralPoly, order=DEFAULT_ORDER) -> NcPoly:
        return embed_central(p, self.table_for(order))

    def bracket(self, a: str, b: str) -> NcPoly:
        return self.table.bracket(a, b)

    def __repr__(self):
        flag = "admissible" if self.admissible else "inadmissible"
        return f"<Gl2CherednikAlgebra c = {self.c} over {self.field!r}, {flag}>"


def build_algebra(c: CentralPoly, field: Field | None = None,
                  step_budget: int = DEFAULT_STEP_BUDGET) -> Gl2CherednikAlgebra:
    return Gl2CherednikAlgebra(c, field, step_budget)


def undeformed(field: Field = QQ) -> Gl2CherednikAlgebra:
    return Gl2CherednikAlgebra(CentralPoly({}, field), field)


def _apply_anti(a: NcPoly, table: RelationTable, images: dict) -> NcPoly:
    out = table.zero()
    for word, c in a.items():
        sign = 1
        letters = []
        for g in reversed(word):
            img, s = images[g]
            sign *= s
            letters.append(img)
        out = out + table.word(tuple(letters), c * sign)
    return out


def apply_eta(a: NcPoly, algebra: Gl2CherednikAlgebra | None = None) -> NcPoly:
    """The anti-involution x -> y1, x1 -> -y, y -> -x1, y1 -> x, e <-> f."""
    table = algebra.table if algebra is not None else a.table
    return _apply_anti(normalize(a, table), table, ETA)


def apply_j(a: NcPoly) -> NcPoly:
    """The anti-involution of U(sl2 x k^2): x <-> y, h -> h, e -> -f, f -> -e."""
    bad = a.letters() - set(J)
    if bad:
        raise ValueError(f"j is only defined on the subalgebra in e, f, h, x, y (got {sorted(bad)})")
    return _apply_anti(a, a.table, J)


def eta_preserves_table(algebra: Gl2CherednikAlgebra):
    """Pairs (a, b) for which eta([a, b]) != [eta(b), eta(a)]; empty when eta is well defined."""
    table = algebra.table
    bad = []
    order = table.order
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            lhs = apply_eta(table.bracket(a, b), algebra)
            ea = table.gen(ETA[a][0]) * ETA[a][1]
            eb = table.gen(ETA[b][0]) * ETA[b][1]
            rhs = commutator(eb, ea)
            if lhs != rhs:
                bad.append(((a, b), lhs - rhs))
    return bad


@dataclass
class Distinguished:
    b: NcPoly
    d: NcPoly
    t1: NcPoly
    t2: NcPoly

    def as_dict(self):
        return {"b": self.b, "d": self.d, "t1": self.t1, "t2": self.t2}


def distinguished_elements(algebra: Gl2CherednikAlgebra) -> Distinguished:
    g = algebra.gens()
    tau, h, e, f = g["tau"], g["h"], g["e"], g["f"]
    x, y, x1, y1 = g["x"], g["y"], g["x1"], g["y1"]
    b = y1 * x - x1 * y
    d = tau * b - (e * y1 * y * 2 + h * (y1 * x + x1 * y) - f * x1 * x * 2)
    t1 = e * y * y + h * x * y - f * x * x
    t2 = e * y1 * y1 + h * x1 * y1 - f * x1 * x1
    return Distinguished(b, d, t1, t2)
