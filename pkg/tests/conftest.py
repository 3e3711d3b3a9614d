import random

import pytest
from hypothesis import strategies as st

from icherednik.algebra import build_algebra
from icherednik.central import CentralPoly
from icherednik.expr import to_central
from icherednik.fields import QQ
from icherednik.pbw import DEFAULT_ORDER

ADMISSIBLE = ("0", "tau", "Delta + 3*tau^2")

ACCEPTANCE_LINES: dict = {}


def central(text, field=QQ):
    return to_central(text, field)


_ALGEBRAS: dict = {}


def algebra_for(text, field=QQ):
    key = (text, field)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = build_algebra(central(text, field), field)
    return _ALGEBRAS[key]


@pytest.fixture(params=ADMISSIBLE)
def admissible_algebra(request):
    return algebra_for(request.param)


def random_word(rng: random.Random, max_len=4, letters=DEFAULT_ORDER):
    return tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len)))


def random_element(rng: random.Random, table, terms=3, max_len=4, letters=DEFAULT_ORDER):
    out = table.zero()
    for _ in range(rng.randint(1, terms)):
        out = out + table.word(random_word(rng, max_len, letters), rng.randint(-3, 3))
    return out


def random_homogeneous(rng: random.Random, table, terms=3, max_len=4):
    """Sum of permutations of one random word: biweight-homogeneous by construction."""
    word = list(random_word(rng, max_len))
    out = table.zero()
    for _ in range(rng.randint(1, terms)):
        rng.shuffle(word)
        out = out + table.word(tuple(word), rng.randint(-3, 3))
    return out


small_ints = st.integers(min_value=-5, max_value=5)
fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def central_polys(draw, max_degree=3, field=QQ):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, max_degree), st.integers(0, max_degree)),
        small_ints, max_size=5))
    return CentralPoly({k: field(v) for k, v in terms.items()}, field)


@st.composite
def tau_polys(draw, max_degree=5, field=QQ):
    coeffs = draw(st.lists(small_ints, max_size=max_degree + 1))
    return CentralPoly.from_tau_poly(coeffs, field)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
