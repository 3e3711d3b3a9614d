"""Verma modules, the obstructions alpha_m, and finite-dimensionality checks."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg
from .algebra import Gl2CherednikAlgebra
from .center import express_central
from .central import CentralPoly
from .pbw import (DEFAULT_ORDER, TRIANGULAR_ORDER, NcPoly, commutator, normalize,
                  rewrite_naive)

_BOREL_KILLERS = ("e", "x", "y")


@dataclass
class VermaElement:
    """Finite combination of f^a x1^b y1^c v in M(lam, mu)."""

    lam: object
    mu: object
    coeffs: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    @classmethod
    def highest(cls, lam, mu, one=1):
        return cls(lam, mu, {(0, 0, 0): one})

    @classmethod
    def basis(cls, lam, mu, triple, one=1):
        return cls(lam, mu, {tuple(triple): one})

    def _check(self, other):
        if (self.lam, self.mu) != (other.lam, other.mu):
            raise ValueError("vectors live in different Verma modules")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return VermaElement(self.lam, self.mu, out)

    def __neg__(self):
        return VermaElement(self.lam, self.mu, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        return VermaElement(self.lam, self.mu, {k: v * s for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VermaElement):
            return NotImplemented
        return (self.lam, self.mu, self.coeffs) == (other.lam, other.mu, other.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def weight_of(self, triple):
        a, b, c = triple
        return self.lam - 2 * a + b - c, self.mu - b - c

    def weights(self):
        return {self.weight_of(t) for t in self.coeffs}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b, c), v in sorted(self.coeffs.items()):
            letters = [f"{g}^{k}" if k > 1 else g for g, k in (("f", a), ("x1", b), ("y1", c)) if k]
            parts.append(f"({v})*{'*'.join(letters + ['v'])}")
        return " + ".join(parts)


def _evaluate_on_highest(poly: NcPoly, lam, mu) -> dict:
    """Apply a triangular-order element to the highest-weight vector."""
    t = poly.table
    idx = t.index
    kill = [idx[g] for g in _BOREL_KILLERS]
    out = {}
    for mono, c in poly.terms.items():
        if any(mono[i] for i in kill):
            continue
        val = c
        if mono[idx["h"]]:
            val = val * lam ** mono[idx["h"]]
        if mono[idx["tau"]]:
            val = val * mu ** mono[idx["tau"]]
        key = (mono[idx["f"]], mono[idx["x1"]], mono[idx["y1"]])
        s = out.get(key, 0) + val
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def verma_act(g: NcPoly, w: VermaElement, algebra: Gl2CherednikAlgebra) -> VermaElement:
    """g . w in M(lam, mu), computed in the triangular order f < x1 < y1 < tau < h < e < x < y."""
    tri = algebra.triangular
    g = normalize(g, tri)
    field = algebra.field
    lam, mu = field(w.lam), field(w.mu)
    out = {}
    for (a, b, c), coeff in w.coeffs.items():
        vec = tri.word(("f",) * a + ("x1",) * b + ("y1",) * c)
        for k, v in _evaluate_on_highest(g * vec, lam, mu).items():
            s = out.get(k, 0) + v * coeff
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return VermaElement(w.lam, w.mu, out)


def alpha_m(algebra: Gl2CherednikAlgebra, m: int) -> NcPoly:
    """Component of [y^m, x1^m] with no V-letter (i.e. modulo the left ideal H_c V)."""
    if m < 1:
        raise ValueError("m must be positive")
    y, x1 = algebra.gen("y"), algebra.gen("x1")
    return commutator(y ** m, x1 ** m).v_part(0)


def alpha_m_oracle(algebra: Gl2CherednikAlgebra, m: int) -> dict:
    """alpha_m by naive adjacent-swap rewriting, once per generator order."""
    raw = {("y",) * m + ("x1",) * m: 1, ("x1",) * m + ("y",) * m: -1}
    default = algebra.table_for(DEFAULT_ORDER)
    tri = algebra.table_for(TRIANGULAR_ORDER)
    via_default = rewrite_naive(raw, default, "leftmost").v_part(0)
    # x1 precedes the gl2 letters in the triangular order, so project only
    # after returning to the default order
    via_tri = normalize(rewrite_naive(raw, tri, "rightmost"), default).v_part(0)
    return {"default": via_default, "triangular": via_tri}


@dataclass
class AlphaInfo:
    m: int
    alpha: NcPoly
    central: bool
    as_central: CentralPoly | None


def alpha_info(algebra: Gl2CherednikAlgebra, m: int) -> AlphaInfo:
    a = alpha_m(algebra, m)
    t = a.table
    central = all(commutator(a, t.gen(g)).is_zero() for g in ("e", "f", "h"))
    poly = None
    if central:
        deg = max(a.ug_degree(), 0)
        poly = express_central(a, deg // 2, deg)
    return AlphaInfo(m, a, central, poly)


class Gl2Irrep:
    """V(lam, mu): basis v_0..v_lam, h v_i = (lam - 2i) v_i, f v_i = v_{i+1},
    e v_i = i (lam - i + 1) v_{i-1}, tau acts by mu."""

    def __init__(self, lam: int, mu, field):
        if not isinstance(lam, int) or lam < 0:
            raise ValueError("highest weight lam must be a non-negative integer")
        self.lam = lam
        self.field = field
        self.mu = field(mu)
        self.dim = lam + 1

    def act_letter(self, g: str, vec: dict) -> dict:
        F = self.field
        out = {}
        for i, c in vec.items():
            if g == "h":
                k, v = i, c * F(self.lam - 2 * i)
            elif g == "tau":
                k, v = i, c * self.mu
            elif g == "f":
                k, v = i + 1, c
                if k > self.lam:
                    continue
            elif g == "e":
                k, v = i - 1, c * F(i * (self.lam - i + 1))
                if k < 0:
                    continue
            else:
                raise ValueError(f"{g} does not act on a gl2-module")
            if v:
                out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v}

    def act(self, element: NcPoly, vec: dict) -> dict:
        out = {}
        for word, c in element.items():
            w = dict(vec)
            for g in reversed(word):
                w = self.act_letter(g, w)
                if not w:
                    break
            for k, v in w.items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def matrix(self, element: NcPoly):
        one = self.field.one
        cols = [self.act(element, {j: one}) for j in range(self.dim)]
        return [[cols[j].get(i, self.field.zero) for j in range(self.dim)] for i in range(self.dim)]

    def annihilates(self, element: NcPoly) -> bool:
        one = self.field.one
        return all(not self.act(element, {j: one}) for j in range(self.dim))


@dataclass
class FiniteDimReport:
    lam: object
    mu: object
    lam_admissible: bool
    f_nilpotent: bool | None
    witness: int | None
    per_m: list = dc_field(default_factory=list)  # [(m, alpha_m, central, annihilates)]

    @property
    def finite_dimensional(self) -> bool:
        return self.lam_admissible and self.witness is not None

    @property
    def verdict(self) -> str:
        if not self.lam_admissible:
            return "lambda is not a non-negative integer: L(lambda, mu) is infinite dimensional"
        if self.witness is None:
            return f"no witness m <= {len(self.per_m)}"
        return f"finite dimensional: alpha_{self.witness} kills V(lambda, mu)"


def _as_nonneg_int(lam):
    if isinstance(lam, bool):
        return None
    if isinstance(lam, int):
        return lam if lam >= 0 else None
    if isinstance(lam, Fraction) and lam.denominator == 1 and lam >= 0:
        return int(lam)
    return None


def finite_dim_test(algebra: Gl2CherednikAlgebra, lam, mu, m_max: int) -> FiniteDimReport:
    n = _as_nonneg_int(lam)
    if n is None:
        return FiniteDimReport(lam, mu, False, None, None)
    V = Gl2Irrep(n, mu, algebra.field)
    f_power = algebra.gen("f") ** (n + 1)
    report = FiniteDimReport(lam, mu, True, V.annihilates(f_power), None)
    for m in range(1, m_max + 1):
        info = alpha_info(algebra, m)
        kills = V.annihilates(info.alpha)
        report.per_m.append((m, info.alpha, info.central, kills))
        if kills and report.witness is None:
            report.witness = m
            break
    return report


def _slices(lam, mu, depth):
    slices: dict = {}
    for a in range(depth + 1):
        for b in range(depth + 1 - a):
            for c in range(depth + 1 - a - b):
                slices.setdefault((-2 * a + b - c, -b - c), []).append((a, b, c))
    return slices


def maximal_vectors(algebra: Gl2CherednikAlgebra, lam, mu, depth: int) -> list[VermaElement]:
    """Vectors w with e w = x w = y w = 0 among basis triples of total degree <= depth.

    Images are computed exactly (nothing is truncated), so every returned
    vector is genuinely maximal in M(lam, mu).
    """
    field = algebra.field
    lam, mu = field(lam), field(mu)
    tri = algebra.triangular
    killers = [tri.gen(g) for g in _BOREL_KILLERS]
    found = []
    slices = _slices(lam, mu, depth)
    for key in sorted(slices, reverse=True):
        triples = slices[key]
        columns = {}
        for t in triples:
            w = VermaElement.basis(lam, mu, t, field.one)
            col = {}
            for gi, g in enumerate(killers):
                for k, v in verma_act(g, w, algebra).coeffs.items():
                    col[(gi, k)] = v
            columns[t] = col
        for vec in linalg.nullspace(columns, field):
            found.append(VermaElement(lam, mu, vec))
    return found
