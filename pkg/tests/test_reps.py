import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from icherednik.fields import QQ
from icherednik.pbw import GENERATORS, commutator
from icherednik.reps import (Gl2Irrep, VermaElement, alpha_info, alpha_m, alpha_m_oracle,
                             finite_dim_test, maximal_vectors, verma_act)

from conftest import ADMISSIBLE, algebra_for, central

LETTERS = tuple(GENERATORS)


def random_verma(rng, lam, mu, depth=3):
    coeffs = {}
    for _ in range(rng.randint(1, 3)):
        a = rng.randint(0, depth)
        b = rng.randint(0, depth - a)
        c = rng.randint(0, depth - a - b)
        coeffs[(a, b, c)] = Fraction(rng.randint(-3, 3))
    return VermaElement(lam, mu, coeffs)


def test_verma_examples():
    alg = algebra_for("tau")
    lam, mu = Fraction(3, 2), Fraction(-2)
    v = VermaElement.highest(lam, mu)
    assert verma_act(alg.gen("h"), v, alg) == v * lam
    assert verma_act(alg.gen("tau"), v, alg) == v * mu
    for g in ("e", "x", "y"):
        assert not verma_act(alg.gen(g), v, alg)
    w = VermaElement.basis(lam, mu, (1, 2, 0))
    assert verma_act(alg.gen("f"), w, alg) == VermaElement.basis(lam, mu, (2, 2, 0))


def test_verma_weights():
    v = VermaElement.basis(5, 1, (1, 1, 2))
    assert v.weights() == {(5 - 2 + 1 - 2, 1 - 3)}
    with pytest.raises(ValueError):
        v + VermaElement.highest(4, 1)


@pytest.mark.parametrize("c", ADMISSIBLE)
def test_verma_action_respects_brackets(c):
    alg = algebra_for(c)
    rng = random.Random(ADMISSIBLE.index(c))
    for _ in range(25):
        lam, mu = Fraction(rng.randint(-3, 3), rng.choice((1, 2))), Fraction(rng.randint(-3, 3))
        g1 = alg.gen(rng.choice(LETTERS))
        g2 = alg.gen(rng.choice(LETTERS))
        w = random_verma(rng, lam, mu)
        lhs = verma_act(g1, verma_act(g2, w, alg), alg) - verma_act(g2, verma_act(g1, w, alg), alg)
        assert lhs == verma_act(commutator(g1, g2), w, alg)


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from(LETTERS))
def test_verma_action_shifts_weights(rnd, g):
    alg = algebra_for("Delta + 3*tau^2")
    lam, mu = Fraction(rnd.randint(-4, 4)), Fraction(rnd.randint(-4, 4))
    t = (rnd.randint(0, 2), rnd.randint(0, 2), rnd.randint(0, 2))
    w = VermaElement.basis(lam, mu, t)
    out = verma_act(alg.gen(g), w, alg)
    gw = GENERATORS[g]
    (h0, t0), = w.weights()
    assert out.weights() <= {(h0 + gw.h_weight, t0 + gw.tau_weight)}


def test_verma_action_is_linear():
    alg = algebra_for("tau")
    rng = random.Random(3)
    for _ in range(10):
        w1, w2 = random_verma(rng, 2, 1), random_verma(rng, 2, 1)
        g = alg.gen("x1") * alg.gen("e") + alg.gen("y") * 3
        assert verma_act(g, w1 + w2 * 2, alg) == verma_act(g, w1, alg) + verma_act(g, w2, alg) * 2


def test_alpha_examples():
    assert alpha_m(algebra_for("tau"), 1) == algebra_for("tau").table.one()
    assert alpha_m(algebra_for("0"), 1).is_zero()
    with pytest.raises(ValueError):
        alpha_m(algebra_for("0"), 0)


@pytest.mark.parametrize("c", ADMISSIBLE)
def test_alpha_one_general_formula(c):
    alg = algebra_for(c)
    expected = alg.embed(alg.G_c) - alg.gen("h") * alg.embed(alg.F_c) * 2
    assert alpha_m(alg, 1) == expected


@pytest.mark.parametrize("c", ADMISSIBLE)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_alpha_matches_oracle(c, m):
    alg = algebra_for(c)
    oracle = alpha_m_oracle(alg, m)
    assert oracle["default"] == alpha_m(alg, m)
    assert oracle["triangular"] == alpha_m(alg, m)


def test_alpha_for_tau_is_central_constant():
    alg = algebra_for("tau")
    values = [alpha_info(alg, m) for m in (1, 2, 3)]
    assert all(v.central for v in values)
    assert [v.as_central for v in values] == [central("1"), central("-2"), central("6")]


def test_alpha_centrality_is_reported_not_assumed():
    info = alpha_info(algebra_for("Delta + 3*tau^2"), 1)
    assert not info.central and info.as_central is None


def sub(u, v):
    out = dict(u)
    for k, c in v.items():
        out[k] = out.get(k, 0) - c
    return {k: c for k, c in out.items() if c}


def test_irrep_relations():
    alg = algebra_for("0")
    for lam in range(5):
        V = Gl2Irrep(lam, Fraction(1, 3), QQ)
        for a, b in (("h", "e"), ("h", "f"), ("e", "f"), ("tau", "e"), ("tau", "f")):
            br = alg.bracket(a, b)
            for j in range(V.dim):
                v = {j: Fraction(1)}
                ab = V.act_letter(a, V.act_letter(b, v))
                ba = V.act_letter(b, V.act_letter(a, v))
                assert sub(ab, ba) == V.act(br, v)
        assert V.matrix(alg.gen("h"))[0][0] == lam
        assert V.annihilates(alg.gen("f") ** (lam + 1))
    with pytest.raises(ValueError):
        Gl2Irrep(-1, 0, QQ)
    with pytest.raises(ValueError):
        V.act_letter("x", {0: 1})


def test_finite_dim_examples():
    report = finite_dim_test(algebra_for("tau"), 2, 0, 1)
    assert report.lam_admissible and report.witness is None
    assert not report.finite_dimensional
    report = finite_dim_test(algebra_for("0"), -1, 0, 3)
    assert not report.lam_admissible and not report.per_m
    report = finite_dim_test(algebra_for("0"), 0, 0, 1)
    assert report.witness == 1 and report.finite_dimensional
    assert report.f_nilpotent
    assert not finite_dim_test(algebra_for("0"), Fraction(1, 2), 0, 1).lam_admissible


def test_finite_dim_tau_no_witness_up_to_three():
    report = finite_dim_test(algebra_for("tau"), 1, 5, 3)
    assert report.witness is None
    assert [m for m, *_ in report.per_m] == [1, 2, 3]


def test_maximal_vectors_examples():
    alg = algebra_for("tau")
    v = VermaElement.highest(Fraction(1, 2), 0)
    assert maximal_vectors(alg, Fraction(1, 2), 0, 0) == [v]
    assert maximal_vectors(alg, Fraction(1, 2), 0, 3) == [v]
    found = maximal_vectors(algebra_for("0"), 0, 0, 2)
    assert len(found) > 1
    assert VermaElement.highest(0, 0) in found
    assert VermaElement.basis(0, 0, (1, 0, 0)) in found


@pytest.mark.parametrize("c", ADMISSIBLE)
def test_maximal_vectors_are_maximal(c):
    alg = algebra_for(c)
    for w in maximal_vectors(alg, 0, 0, 2):
        for g in ("e", "x", "y"):
            assert not verma_act(alg.gen(g), w, alg)
