"""The F/G endomorphisms of Z(U gl2) = k[Delta, tau].

For a central ``alpha`` the bracket with ``x`` has the shape

    [alpha, x] = (2h F(alpha) + G(alpha)) x + 4e F(alpha) y,

and F, G are computed here without touching the noncommutative engine:
powers of Delta by the recursion

    F(Delta b) = b + (Delta - 1) F(b) - G(b)
    G(Delta b) = -3 b - 4 Delta F(b) + (Delta + 3) G(b)

and tau-dependence by the twist F(psi b) = psi(tau-1) F(b),
G(psi b) = psi(tau-1) G(b) + (psi(tau) - psi(tau-1)) b.  Everything is
division-free, so the same code runs over GF(p).
"""

from __future__ import annotations

from .central import CentralPoly, TAU
from .fields import QQ, Field


class FGTable:
    """Memoized rows ``n -> (F(Delta**n), G(Delta**n))``; append-only."""

    def __init__(self, field: Field = QQ):
        self.field = field
        zero = CentralPoly({}, field)
        self.rows = [(zero, zero)]

    def row(self, n: int):
        while len(self.rows) <= n:
            k = len(self.rows) - 1
            F, G = self.rows[k]
            beta = CentralPoly.monomial(k, 0, self.field)
            delta = CentralPoly.delta(self.field)
            F_next = beta + (delta - 1) * F - G
            G_next = beta * -3 - delta * F * 4 + (delta + 3) * G
            self.rows.append((F_next, G_next))
        return self.rows[n]

    def extend(self, n: int):
        self.row(n)
        return self.rows[: n + 1]


_TABLES: dict = {}


def fg_table(field: Field = QQ) -> FGTable:
    table = _TABLES.get(field)
    if table is None:
        table = _TABLES[field] = FGTable(field)
    return table


def fg(alpha: CentralPoly, table: FGTable | None = None):
    """``(F(alpha), G(alpha))`` by recursion and tau-twist."""
    field = alpha.field
    table = table or fg_table(field)
    F = CentralPoly({}, field)
    G = CentralPoly({}, field)
    shifted_tau = CentralPoly.tau(field) - 1
    tau = CentralPoly.tau(field)
    for (n, m), c in alpha.terms.items():
        Fn, Gn = table.row(n)
        psi_shift = shifted_tau ** m
        psi_diff = tau ** m - psi_shift
        delta_n = CentralPoly.monomial(n, 0, field)
        F = F + psi_shift * Fn * c
        G = G + (psi_shift * Gn + psi_diff * delta_n) * c
    return F, G


def F(alpha: CentralPoly) -> CentralPoly:
    return fg(alpha)[0]


def G(alpha: CentralPoly) -> CentralPoly:
    return fg(alpha)[1]


def jacobi_residual(c: CentralPoly) -> CentralPoly:
    """4 Delta F(F(c)) + 6 F(c) - 6 G(F(c)) - G(G(c)); zero iff c is admissible."""
    Fc, Gc = fg(c)
    FFc, GFc = fg(Fc)
    _, GGc = fg(Gc)
    delta = CentralPoly.delta(c.field)
    return delta * FFc * 4 + Fc * 6 - GFc * 6 - GGc


def is_admissible(c: CentralPoly) -> bool:
    return jacobi_residual(c).is_zero()


class UnsolvableF(ValueError):
    pass


def solve_F(beta: CentralPoly, max_delta_degree: int | None = None) -> CentralPoly:
    """Some ``alpha`` with ``F(alpha) == beta`` and no pure-tau part.

    F lowers the Delta-degree by one with leading coefficient n on
    tau**m Delta**n, so the top Delta-layer of the residual fixes the next
    term of alpha.
    """
    field = beta.field
    if max_delta_degree is None:
        max_delta_degree = beta.degree_delta() + 1
    alpha = CentralPoly({}, field)
    residual = beta
    while residual:
        k = residual.degree_delta()
        if k + 1 > max_delta_degree:
            raise UnsolvableF(f"needs Delta-degree {k + 1} > bound {max_delta_degree}")
        lead = field(k + 1)
        if not lead:
            raise UnsolvableF(f"leading coefficient {k + 1} vanishes in characteristic {field.characteristic}")
        # psi(tau - 1) * (k+1) must equal the top coefficient r_k(tau)
        psi = residual.delta_coefficient(k).substitute_shift(TAU, 1) * (field.one / lead)
        term = psi * CentralPoly.monomial(k + 1, 0, field)
        alpha = alpha + term
        residual = residual - fg(term)[0]
        if residual.degree_delta() >= k and residual.delta_coefficient(k):
            raise UnsolvableF("triangular elimination did not clear the top layer")
    return alpha


def fg_identity_residuals(alpha: CentralPoly):
    """Residuals of the two Delta-recursions at ``alpha`` and of
    G(F(alpha)) = F(G(alpha)) + 2 F(F(alpha)), all computed from :func:`fg`."""
    delta = CentralPoly.delta(alpha.field)
    Fa, Ga = fg(alpha)
    Fd, Gd = fg(delta * alpha)
    r_F = Fd - (alpha + (delta - 1) * Fa - Ga)
    r_G = Gd - (alpha * -3 - Fa * delta * 4 + (delta + 3) * Ga)
    FFa, GFa = fg(Fa)
    FGa, _ = fg(Ga)
    r_comm = GFa - (FGa + FFa * 2)
    return r_F, r_G, r_comm
