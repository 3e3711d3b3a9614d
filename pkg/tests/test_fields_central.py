from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from icherednik.central import CentralPoly, discrete_derivative, substitute_shift
from icherednik.fields import GF, QQ, FieldMismatch, Mod, field_from_options, is_prime

from conftest import central, central_polys, fractions, tau_polys

PRIMES = (2, 3, 5, 7, 13)


def evaluate(poly, delta, tau):
    return sum((c * delta ** n * tau ** m for (n, m), c in poly.terms.items()), Fraction(0))


# -- scalars --------------------------------------------------------------

def test_rationals_stay_reduced():
    v = QQ(Fraction(6, -4))
    assert (v.numerator, v.denominator) == (-3, 2)
    assert QQ("10/4") == Fraction(5, 2)


@given(st.integers(-10**6, 10**6), st.sampled_from(PRIMES))
def test_mod_values_in_range(n, p):
    assert 0 <= GF(p)(n).v < p


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 15, -3])
def test_prime_field_validates(bad):
    with pytest.raises(ValueError):
        GF(bad)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(fractions, fractions, fractions)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, x, y, z):
    F = GF(p)
    a, b, c = F(x), F(y), F(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a:
        assert a * a.inverse() == 1
        assert b / a * a == b


def test_fraction_reduces_into_prime_field():
    assert GF(5)(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        GF(3)(Fraction(1, 3))


def test_mixing_fields_is_a_type_error():
    with pytest.raises(FieldMismatch):
        Mod(1, 3) + Mod(1, 5)
    with pytest.raises(FieldMismatch):
        Mod(1, 3) + Fraction(1, 2)
    with pytest.raises(FieldMismatch):
        QQ(Mod(1, 3))
    with pytest.raises(FieldMismatch):
        CentralPoly.delta(QQ) + CentralPoly.delta(GF(3))
    assert isinstance(FieldMismatch("x"), TypeError)


def test_field_options():
    assert field_from_options("q") is QQ
    assert field_from_options("fp", 7) == GF(7)
    with pytest.raises(ValueError):
        field_from_options("fp")


# -- CentralPoly -----------------------------------------------------------

def test_canonical_form_drops_zeros():
    p = CentralPoly({(1, 0): 0, (0, 2): 3})
    assert p.terms == {(0, 2): Fraction(3)}
    assert central("Delta - Delta") == CentralPoly()
    assert central("Delta - Delta").terms == {}


@given(central_polys(), central_polys(), central_polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == CentralPoly()


@given(central_polys(max_degree=2), central_polys(max_degree=2),
       st.integers(-3, 3), st.integers(-3, 3))
def test_arithmetic_matches_evaluation(a, b, d, t):
    assert evaluate(a * b, d, t) == evaluate(a, d, t) * evaluate(b, d, t)
    assert evaluate(a + b * 3, d, t) == evaluate(a, d, t) + 3 * evaluate(b, d, t)


@pytest.mark.parametrize("psi, expected", [
    ("1", "0"),
    ("tau", "1"),
    ("tau^2", "2*tau - 1"),
    ("3*tau^2", "6*tau - 3"),
    ("tau^3", "3*tau^2 - 3*tau + 1"),
])
def test_discrete_derivative_examples(psi, expected):
    assert discrete_derivative(central(psi)) == central(expected)


def test_discrete_derivative_rejects_delta():
    with pytest.raises(ValueError):
        discrete_derivative(central("Delta*tau"))


@pytest.mark.parametrize("psi, shift, expected", [
    ("tau^2", -1, "tau^2 - 2*tau + 1"),
    ("1", -1, "1"),
    ("tau", 3, "tau + 3"),
])
def test_substitute_shift_examples(psi, shift, expected):
    assert substitute_shift(central(psi), "tau", shift) == central(expected)


@given(central_polys(max_degree=3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-4, 4))
def test_shift_matches_evaluation(p, d, t, s):
    assert evaluate(substitute_shift(p, "tau", s), d, t) == evaluate(p, d, t + s)
    assert evaluate(substitute_shift(p, "Delta", s), d, t) == evaluate(p, d + s, t)


@given(tau_polys(), st.integers(-6, 6))
def test_discrete_derivative_is_a_difference(psi, t):
    assert discrete_derivative(psi) == psi - substitute_shift(psi, "tau", -1)
    assert evaluate(discrete_derivative(psi), 0, t) == evaluate(psi, 0, t) - evaluate(psi, 0, t - 1)


@given(tau_polys(), tau_polys(), st.integers(-4, 4))
def test_discrete_derivative_linear_and_lowers_degree(a, b, k):
    assert discrete_derivative(a * k + b) == discrete_derivative(a) * k + discrete_derivative(b)
    if a.degree_tau() >= 1:
        assert discrete_derivative(a).degree_tau() == a.degree_tau() - 1


def test_printing_and_queries():
    p = central("Delta + 3*tau^2 - 1/2")
    assert str(p) == "3*tau^2 + Delta - 1/2"
    assert p.total_degree() == 2
    assert p.degree_delta() == 1
    assert p.coeff(0, 2) == 3
    assert p.pure_tau_part() == central("3*tau^2 - 1/2")
    assert p.without_constant() == central("Delta + 3*tau^2")
    assert str(CentralPoly()) == "0"


def test_reduction_mod_p():
    p = central("Delta + 3*tau^2")
    assert p.reduce(GF(3)) == CentralPoly.delta(GF(3))
    assert p.reduce(GF(2)) == central("Delta + tau^2", GF(2))
    assert p.reduce(GF(3)).field == GF(3)
