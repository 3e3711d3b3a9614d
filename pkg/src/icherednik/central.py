"""Commutative polynomials in the Casimir ``Delta`` and the central ``tau``.

The center of U(gl2) is the polynomial ring k[Delta, tau]; a
:class:`CentralPoly` is a sparse map ``(n_delta, m_tau) -> coefficient``.
"""

from __future__ import annotations

from math import comb

from .fields import QQ, Field, FieldMismatch

DELTA = "Delta"
TAU = "tau"


class CentralPoly:
    __slots__ = ("field", "terms")

    def __init__(self, terms=None, field: Field = QQ):
        self.field = field
        clean = {}
        for (n, m), c in (terms or {}).items():
            if n < 0 or m < 0:
                raise ValueError("exponents must be non-negative")
            c = field(c)
            if c:
                clean[(n, m)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, terms, field):
        obj = cls.__new__(cls)
        obj.field = field
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c, field: Field = QQ) -> "CentralPoly":
        return cls({(0, 0): c}, field)

    @classmethod
    def delta(cls, field: Field = QQ) -> "CentralPoly":
        return cls({(1, 0): 1}, field)

    @classmethod
    def tau(cls, field: Field = QQ) -> "CentralPoly":
        return cls({(0, 1): 1}, field)

    @classmethod
    def monomial(cls, n: int, m: int, field: Field = QQ, coeff=1) -> "CentralPoly":
        return cls({(n, m): coeff}, field)

    @classmethod
    def from_tau_poly(cls, coeffs, field: Field = QQ) -> "CentralPoly":
        """``coeffs[i]`` is the coefficient of tau**i."""
        return cls({(0, i): c for i, c in enumerate(coeffs)}, field)

    # -- arithmetic ---------------------------------------------------

    def _lift(self, other) -> "CentralPoly":
        if isinstance(other, CentralPoly):
            if other.field != self.field:
                raise FieldMismatch(f"cannot mix {self.field!r} and {other.field!r}")
            return other
        return CentralPoly.const(self.field(other), self.field)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return CentralPoly._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return CentralPoly._raw({k: -c for k, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, CentralPoly):
            s = self.field(other)
            if not s:
                return CentralPoly._raw({}, self.field)
            return CentralPoly._raw({k: c * s for k, c in self.terms.items()}, self.field)
        other = self._lift(other)
        out = {}
        for (n1, m1), c1 in self.terms.items():
            for (n2, m2), c2 in other.terms.items():
                k = (n1 + n2, m1 + m2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return CentralPoly._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = CentralPoly.const(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CentralPoly):
            return self.field == other.field and self.terms == other.terms
        try:
            return self == self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection ---------------------------------------------------

    def degree_delta(self) -> int:
        return max((n for n, _ in self.terms), default=-1)

    def degree_tau(self) -> int:
        return max((m for _, m in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((n + m for n, m in self.terms), default=-1)

    def coeff(self, n: int, m: int):
        return self.terms.get((n, m), self.field.zero)

    def delta_coefficient(self, n: int) -> "CentralPoly":
        """The tau-polynomial multiplying Delta**n."""
        return CentralPoly._raw({(0, m): c for (k, m), c in self.terms.items() if k == n}, self.field)

    def pure_tau_part(self) -> "CentralPoly":
        return self.delta_coefficient(0)

    def without_constant(self) -> "CentralPoly":
        return CentralPoly._raw({k: c for k, c in self.terms.items() if k != (0, 0)}, self.field)

    def reduce(self, field: Field) -> "CentralPoly":
        """Re-coerce every coefficient (rational -> GF(p) reduction)."""
        return CentralPoly(self.terms, field)

    # -- substitutions -------------------------------------------------

    def substitute_shift(self, variable: str, shift) -> "CentralPoly":
        """Replace ``variable`` by ``variable + shift`` and expand."""
        if variable not in (DELTA, TAU):
            raise ValueError(f"unknown variable {variable!r}")
        shift = self.field(shift)
        pos = 0 if variable == DELTA else 1
        out = CentralPoly._raw({}, self.field)
        for (n, m), c in self.terms.items():
            k = (n, m)[pos]
            expanded = {}
            for i in range(k + 1):
                coeff = c * comb(k, i) * shift ** (k - i)
                if coeff:
                    key = (i, m) if pos == 0 else (n, i)
                    expanded[key] = coeff
            out = out + CentralPoly._raw(expanded, self.field)
        return out

    def discrete_derivative(self) -> "CentralPoly":
        """``psi(tau) - psi(tau - 1)`` for a pure-tau polynomial ``psi``."""
        if self.degree_delta() > 0:
            raise ValueError("discrete_derivative expects a polynomial in tau only")
        return self - self.substitute_shift(TAU, -1)

    # -- printing -----------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (n, m), c in self.sorted_terms():
            letters = []
            if n:
                letters.append(DELTA if n == 1 else f"{DELTA}^{n}")
            if m:
                letters.append(TAU if m == 1 else f"{TAU}^{m}")
            pieces.append((c, "*".join(letters)))
        return format_linear_combination(pieces, self.field)

    def __repr__(self):
        return f"CentralPoly({self})"


def discrete_derivative(psi: CentralPoly) -> CentralPoly:
    return psi.discrete_derivative()


def substitute_shift(psi: CentralPoly, variable: str, shift) -> CentralPoly:
    return psi.substitute_shift(variable, shift)


def format_linear_combination(pieces, field: Field) -> str:
    """Render ``[(coeff, monomial_text), ...]``; an empty monomial text is 1."""
    out = []
    for i, (c, mono) in enumerate(pieces):
        negative = field.is_negative(c)
        mag = -c if negative else c
        text = field.fmt(mag)
        if mono:
            body = mono if text == "1" else f"{text}*{mono}"
        else:
            body = text
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out) if out else "0"
