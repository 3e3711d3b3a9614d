import pytest
from hypothesis import given, settings, strategies as st

from icherednik import calculus
from icherednik.calculus import (UnsolvableF, fg, fg_identity_residuals, fg_table,
                                 is_admissible, jacobi_residual, solve_F)
from icherednik.center import ExtractionError, fg_extract
from icherednik.central import CentralPoly
from icherednik.fields import GF, QQ

from conftest import algebra_for, central, central_polys

BASIS = [CentralPoly.monomial(n, m) for n in range(6) for m in range(6)]


def pair(f, g):
    return central(f), central(g)


@pytest.mark.parametrize("alpha, F, G", [
    ("tau", "0", "1"),
    ("Delta^2", "2*Delta + 2", "-10*Delta - 9"),
    ("1", "0", "0"),
    ("Delta", "1", "-3"),
    ("tau^2", "0", "2*tau - 1"),
    ("0", "0", "0"),
])
def test_fg_examples(alpha, F, G):
    assert fg(central(alpha)) == pair(F, G)


@pytest.mark.parametrize("alpha, F, G", [
    ("Delta", "1", "-3"),
    ("tau^2", "0", "2*tau - 1"),
    ("1", "0", "0"),
    ("Delta^2", "2*Delta + 2", "-10*Delta - 9"),
])
def test_fg_extract_examples(alpha, F, G):
    assert fg_extract(central(alpha), algebra_for("0")) == pair(F, G)


def test_fg_extract_unavailable_in_char_2():
    with pytest.raises(ExtractionError):
        fg_extract(CentralPoly.delta(GF(2)), algebra_for("0", GF(2)))


def test_fg_extract_agrees_over_gf5():
    field = GF(5)
    H = algebra_for("0", field)
    for n in range(4):
        for m in range(3):
            a = CentralPoly.monomial(n, m, field)
            assert fg_extract(a, H) == fg(a)


def test_table_invariants():
    t = fg_table()
    assert t.row(0) == (CentralPoly(), CentralPoly())
    assert t.row(1) == pair("1", "-3")
    for n in range(1, 9):
        Fn, _ = t.row(n)
        assert Fn.degree_delta() == n - 1
        assert Fn.coeff(n - 1, 0) == n
        assert Fn.degree_tau() <= 0
    assert len(t.extend(4)) == 5


def test_recursion_is_characteristic_free():
    for p in (2, 3, 5):
        F = GF(p)
        for n in range(6):
            a = CentralPoly.monomial(n, 2, QQ)
            expected = tuple(v.reduce(F) for v in fg(a))
            assert fg(a.reduce(F)) == expected


@pytest.mark.parametrize("alpha", BASIS, ids=str)
def test_fg_identities_on_basis(alpha):
    for r in fg_identity_residuals(alpha):
        assert r.is_zero()


def test_identity_spot_value_at_delta_squared():
    a = central("Delta^2")
    Fa, Ga = fg(a)
    lhs = calculus.G(Fa)
    assert lhs == central("-6")
    assert calculus.F(Ga) == central("-10")
    assert calculus.F(Fa) * 2 == central("4")


@settings(max_examples=50, deadline=None)
@given(central_polys(max_degree=4))
def test_kernel_of_F_is_k_tau(alpha):
    assert calculus.F(alpha).is_zero() == (alpha.degree_delta() <= 0)


@settings(max_examples=50, deadline=None)
@given(central_polys(max_degree=4), central_polys(max_degree=4), st.integers(-4, 4))
def test_fg_is_linear(a, b, k):
    Fa, Ga = fg(a)
    Fb, Gb = fg(b)
    assert fg(a * k + b) == (Fa * k + Fb, Ga * k + Gb)


@pytest.mark.parametrize("beta, alpha", [
    ("1", "Delta"),
    ("Delta", "1/2*Delta^2 - Delta"),
    ("0", "0"),
])
def test_solve_F_examples(beta, alpha):
    assert solve_F(central(beta)) == central(alpha)


@settings(max_examples=50, deadline=None)
@given(central_polys(max_degree=4))
def test_solve_F_round_trip(beta):
    alpha = solve_F(beta)
    assert calculus.F(alpha) == beta
    assert alpha.pure_tau_part().is_zero()


def test_solve_F_bound():
    with pytest.raises(UnsolvableF):
        solve_F(central("Delta^3"), max_delta_degree=2)


@pytest.mark.parametrize("c, residual", [
    ("tau", "0"),
    ("Delta", "6"),
    ("Delta + 3*tau^2", "0"),
    ("0", "0"),
    ("tau^2", "-2"),
])
def test_jacobi_examples(c, residual):
    assert jacobi_residual(central(c)) == central(residual)


def test_jacobi_family_closed_form():
    # residual of a*Delta + q*tau^2 + b*tau + k is 6a - 2q
    for a in range(4):
        for q in range(8):
            for b in range(2):
                c = central(f"{a}*Delta + {q}*tau^2 + {b}*tau + 5")
                assert jacobi_residual(c) == central(str(6 * a - 2 * q))
                assert is_admissible(c) == (q == 3 * a)
