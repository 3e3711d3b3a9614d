"""Noncommutative polynomials over the eight-letter gl2-Cherednik alphabet.

A :class:`RelationTable` fixes a total order on the generators
``tau h e f x y x1 y1`` together with the bracket ``[a, b]`` for every pair
``a > b``.  Elements (:class:`NcPoly`) are kept in PBW normal form: every
stored monomial is an exponent vector over the generators in table order.

Normal ordering is done by the rule ``a b -> b a + [a, b]`` for ``a > b``.
Each step lowers the measure (V-degree, length, inversions), so rewriting
terminates whenever every bracket value has lower measure than the two
letter word it replaces; the table constructor checks exactly that.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass, field as dc_field

from .fields import QQ, Field, FieldMismatch
from .central import format_linear_combination
from . import linalg

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@dataclass(frozen=True)
class Generator:
    name: str
    h_weight: int
    tau_weight: int
    v_degree: int


GENERATORS = {
    g.name: g
    for g in (
        Generator("tau", 0, 0, 0),
        Generator("h", 0, 0, 0),
        Generator("e", 2, 0, 0),
        Generator("f", -2, 0, 0),
        Generator("x", 1, 1, 1),
        Generator("y", -1, 1, 1),
        Generator("x1", 1, -1, 1),
        Generator("y1", -1, -1, 1),
    )
}

DEFAULT_ORDER = ("tau", "h", "e", "f", "x", "y", "x1", "y1")
TRIANGULAR_ORDER = ("f", "x1", "y1", "tau", "h", "e", "x", "y")
DEFAULT_STEP_BUDGET = 10**7

UG_LETTERS = frozenset(("tau", "h", "e", "f"))
V_LETTERS = frozenset(("x", "y", "x1", "y1"))


class NormalizationError(RuntimeError):
    """Rewriting exceeded its step budget; the table is probably malformed."""


class MalformedTable(ValueError):
    pass


def _acc(out: dict, key, value) -> None:
    s = out.get(key, 0) + value
    if s:
        out[key] = s
    else:
        out.pop(key, None)


class RelationTable:
    """Generator order plus brackets; also the parent ring of its NcPolys.

    ``brackets`` maps name pairs ``(a, b)`` to ``[a, b]`` given as a dict
    ``{word: coefficient}`` whose words (tuples of names) are normal in
    ``order``.  Either orientation of a pair may be supplied; missing pairs
    commute.
    """

    def __init__(self, brackets, field: Field = QQ, order=DEFAULT_ORDER,
                 step_budget: int = DEFAULT_STEP_BUDGET, name: str = ""):
        order = tuple(order)
        if sorted(order) != sorted(GENERATORS):
            raise MalformedTable(f"order must be a permutation of {sorted(GENERATORS)}")
        self.order = order
        self.field = field
        self.name = name
        self.step_budget = step_budget
        self.index = {g: i for i, g in enumerate(order)}
        self.gens = [GENERATORS[g] for g in order]
        n = len(order)
        self._zero_mono = (0,) * n
        # _br[i][j] = [g_i, g_j] as internal terms, stored for i > j
        self._br = [[None] * n for _ in range(n)]
        seen = set()
        for (a, b), value in brackets.items():
            ia, ib = self.index[a], self.index[b]
            if ia == ib:
                raise MalformedTable(f"bracket [{a},{a}] must not be given")
            if (min(ia, ib), max(ia, ib)) in seen:
                raise MalformedTable(f"bracket [{a},{b}] given twice")
            seen.add((min(ia, ib), max(ia, ib)))
            sign = 1 if ia > ib else -1
            terms = {}
            for word, c in value.items():
                c = field(c) * sign
                if c:
                    _acc(terms, self._word_to_mono(word, require_normal=True), c)
            self._check_bracket(max(ia, ib), min(ia, ib), terms)
            self._br[max(ia, ib)][min(ia, ib)] = terms or None
        self._lmul_cache: dict = {}
        self._mul_cache: dict = {}
        self._steps = 0

    # -- validation ---------------------------------------------------

    def _word_to_mono(self, word, require_normal=False):
        if isinstance(word, str):
            word = (word,) if word else ()
        exps = [0] * len(self.order)
        last = -1
        for letter in word:
            i = self.index[letter]
            if require_normal and i < last:
                raise MalformedTable(f"word {word} is not normal for order {self.order}")
            last = i
            exps[i] += 1
        return tuple(exps)

    def _check_bracket(self, i, j, terms):
        a, b = self.gens[i], self.gens[j]
        wt = (a.h_weight + b.h_weight, a.tau_weight + b.tau_weight)
        vdeg = a.v_degree + b.v_degree
        for mono in terms:
            if self.mono_weight(mono) != wt:
                raise MalformedTable(f"[{a.name},{b.name}] is not homogeneous of weight {wt}")
            measure = (self.mono_vdegree(mono), sum(mono))
            # a normal term has no inversions, and the rewritten word 'ab' has one
            if measure > (vdeg, 2):
                raise MalformedTable(f"[{a.name},{b.name}] does not lower the rewriting measure")

    # -- monomial bookkeeping --------------------------------------------

    def mono_weight(self, mono):
        hw = tw = 0
        for g, k in zip(self.gens, mono):
            if k:
                hw += k * g.h_weight
                tw += k * g.tau_weight
        return hw, tw

    def mono_vdegree(self, mono):
        return sum(k for g, k in zip(self.gens, mono) if g.v_degree)

    def mono_ugdegree(self, mono):
        return sum(k for g, k in zip(self.gens, mono) if not g.v_degree)

    def mono_word(self, mono):
        return tuple(itertools.chain.from_iterable([g] * k for g, k in zip(self.order, mono)))

    def mono_text(self, mono):
        parts = []
        for g, k in zip(self.order, mono):
            if k == 1:
                parts.append(g)
            elif k:
                parts.append(f"{g}^{k}")
        return "*".join(parts)

    def mono_sort_key(self, mono):
        word = tuple(itertools.chain.from_iterable([i] * k for i, k in enumerate(mono)))
        return (len(word), word)

    # -- element constructors -------------------------------------------

    def zero(self) -> "NcPoly":
        return NcPoly(self, {})

    def one(self) -> "NcPoly":
        return NcPoly(self, {self._zero_mono: self.field.one})

    def scalar(self, c) -> "NcPoly":
        c = self.field(c)
        return NcPoly(self, {self._zero_mono: c} if c else {})

    def gen(self, name: str) -> "NcPoly":
        return NcPoly(self, {self._word_to_mono((name,)): self.field.one})

    def gens_dict(self) -> dict:
        return {g: self.gen(g) for g in self.order}

    def word(self, letters, coeff=1) -> "NcPoly":
        """Normal form of an arbitrary (possibly unordered) word."""
        if isinstance(letters, str):
            letters = (letters,)
        self._steps = 0
        terms = {self._zero_mono: self.field(coeff)}
        for letter in reversed(letters):
            g = self.index[letter]
            new = {}
            for m, c in terms.items():
                for t, c2 in self._lmul(g, m).items():
                    _acc(new, t, c * c2)
            terms = new
        return NcPoly(self, terms)

    def bracket(self, a: str, b: str) -> "NcPoly":
        """Table value of [a, b] as an element."""
        ia, ib = self.index[a], self.index[b]
        if ia == ib:
            return self.zero()
        if ia > ib:
            return NcPoly(self, dict(self._br[ia][ib] or {}))
        return NcPoly(self, {m: -c for m, c in (self._br[ib][ia] or {}).items()})

    # -- rewriting core -------------------------------------------------

    def _tick(self):
        self._steps += 1
        if self._steps > self.step_budget:
            raise NormalizationError(
                f"normalization exceeded {self.step_budget} rewriting steps")

    def _lmul(self, g: int, m: tuple) -> dict:
        """Normal form of (generator g) * (normal monomial m)."""
        first = next((i for i, k in enumerate(m) if k), None)
        if first is None or g <= first:
            mm = list(m)
            mm[g] += 1
            return {tuple(mm): self.field.one}
        key = (g, m)
        hit = self._lmul_cache.get(key)
        if hit is not None:
            return hit
        self._tick()
        rest = list(m)
        rest[first] -= 1
        rest = tuple(rest)
        out: dict = {}
        # g a rest = a (g rest) + [g, a] rest
        for t, c in self._lmul(g, rest).items():
            for t2, c2 in self._lmul(first, t).items():
                _acc(out, t2, c * c2)
        br = self._br[g][first]
        if br:
            for w, c in br.items():
                for t2, c2 in self._mul_mono(w, rest).items():
                    _acc(out, t2, c * c2)
        self._lmul_cache[key] = out
        return out

    def _mul_mono(self, m1: tuple, m2: tuple) -> dict:
        last = next((i for i in range(len(m1) - 1, -1, -1) if m1[i]), None)
        if last is None:
            return {m2: self.field.one}
        first = next((i for i, k in enumerate(m2) if k), None)
        if first is None or last <= first:
            return {tuple(a + b for a, b in zip(m1, m2)): self.field.one}
        key = (m1, m2)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        head = list(m1)
        head[last] -= 1
        head = tuple(head)
        out: dict = {}
        for t, c in self._lmul(last, m2).items():
            for t2, c2 in self._mul_mono(head, t).items():
                _acc(out, t2, c * c2)
        self._mul_cache[key] = out
        return out

    def _mul_terms(self, p: dict, q: dict) -> dict:
        self._steps = 0
        out: dict = {}
        for m1, c1 in p.items():
            for m2, c2 in q.items():
                c = c1 * c2
                for t, c3 in self._mul_mono(m1, m2).items():
                    _acc(out, t, c * c3)
        return out

    def clear_cache(self):
        self._lmul_cache.clear()
        self._mul_cache.clear()

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<RelationTable{label} over {self.field!r}, order {' < '.join(self.order)}>"


class NcPoly:
    """An element of the algebra defined by ``table``, in PBW normal form."""

    __slots__ = ("table", "terms")

    def __init__(self, table: RelationTable, terms: dict):
        self.table = table
        self.terms = {m: c for m, c in terms.items() if c}

    @property
    def field(self):
        return self.table.field

    def _coerce(self, other) -> "NcPoly | None":
        if isinstance(other, NcPoly):
            if other.table is not self.table:
                if other.table.field != self.table.field:
                    raise FieldMismatch("elements live over different fields")
                raise ValueError("elements belong to different relation tables; normalize first")
            return other
        if isinstance(other, (int,)) or self.table.field.contains(other):
            return self.table.scalar(other)
        try:
            return self.table.scalar(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return NcPoly(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            other = self._coerce(other)
            return NcPoly(self.table, self.table._mul_terms(self.terms, other.terms))
        s = self.table.field(other)
        return NcPoly(self.table, {m: c * s for m, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, NcPoly):
            return other.__mul__(self)
        s = self.table.field(other)
        return NcPoly(self.table, {m: s * c for m, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.table.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.table is other.table and self.terms == other.terms
        try:
            other = self.table.scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((id(self.table), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ------------------------------------------------------

    def v_degree(self) -> int:
        return max((self.table.mono_vdegree(m) for m in self.terms), default=-1)

    def ug_degree(self) -> int:
        return max((self.table.mono_ugdegree(m) for m in self.terms), default=-1)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def weights(self) -> set:
        return {self.table.mono_weight(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def v_part(self, k: int) -> "NcPoly":
        """Component of V-degree exactly ``k``."""
        t = self.table
        return NcPoly(t, {m: c for m, c in self.terms.items() if t.mono_vdegree(m) == k})

    def leading_part(self) -> "NcPoly":
        """Top V-degree component (leading term for the filtration)."""
        return self.v_part(self.v_degree())

    def letters(self) -> set:
        return {g for m in self.terms for g, k in zip(self.table.order, m) if k}

    def items(self):
        """(word, coefficient) pairs in canonical print order."""
        t = self.table
        for m in sorted(self.terms, key=t.mono_sort_key):
            yield t.mono_word(m), self.terms[m]

    def coefficient(self, word):
        return self.terms.get(self.table._word_to_mono(word), self.table.field.zero)

    def __str__(self):
        t = self.table
        pieces = [(self.terms[m], t.mono_text(m)) for m in sorted(self.terms, key=t.mono_sort_key)]
        return format_linear_combination(pieces, t.field)

    def __repr__(self):
        return f"NcPoly({self})"


# -- public operations ------------------------------------------------------

def normalize(element, table: RelationTable) -> NcPoly:
    """PBW normal form of ``element`` with respect to ``table``.

    ``element`` may be an NcPoly of this table (returned unchanged), an
    NcPoly of another table over the same field (re-normalized word by word),
    a single word (tuple of generator names), or a mapping / iterable of
    ``(word, coefficient)`` pairs with arbitrary words.
    """
    if isinstance(element, NcPoly):
        if element.table is table:
            return element
        if element.table.field != table.field:
            raise FieldMismatch("cannot move an element between fields")
        pairs = list(element.items())
    elif isinstance(element, tuple) and all(isinstance(a, str) for a in element):
        pairs = [(element, 1)]
    elif isinstance(element, dict):
        pairs = list(element.items())
    else:
        pairs = list(element)
    out = table.zero()
    for word, c in pairs:
        out = out + table.word(word, c)
    return out


def commutator(a: NcPoly, b: NcPoly, table: RelationTable | None = None) -> NcPoly:
    if table is not None:
        a, b = normalize(a, table), normalize(b, table)
    return a * b - b * a


def rewrite_naive(element, table: RelationTable, strategy: str = "leftmost") -> NcPoly:
    """Normal form by direct adjacent-swap rewriting of raw words.

    Independent of the memoized multiplication in :class:`RelationTable`;
    used as an oracle and for strategy-independence checks.
    ``strategy`` picks the leftmost or rightmost inversion at each step.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    field = table.field
    if isinstance(element, NcPoly):
        pairs = list(element.items())
    elif isinstance(element, dict):
        pairs = list(element.items())
    else:
        pairs = list(element)
    pending: dict = {}
    for word, c in pairs:
        _acc(pending, tuple(table.index[g] for g in word), field(c))
    bracket_words = {}
    for i in range(len(table.order)):
        for j in range(i):
            br = table._br[i][j]
            if br:
                bracket_words[(i, j)] = [
                    (tuple(itertools.chain.from_iterable([k] * e for k, e in enumerate(m))), c)
                    for m, c in br.items()
                ]
    done: dict = {}
    steps = 0
    while pending:
        word, c = pending.popitem()
        positions = range(len(word) - 1)
        if strategy == "rightmost":
            positions = reversed(positions)
        hit = next((i for i in positions if word[i] > word[i + 1]), None)
        if hit is None:
            mono = [0] * len(table.order)
            for k in word:
                mono[k] += 1
            _acc(done, tuple(mono), c)
            continue
        steps += 1
        if steps > table.step_budget:
            raise NormalizationError(f"naive rewriting exceeded {table.step_budget} steps")
        a, b = word[hit], word[hit + 1]
        head, tail = word[:hit], word[hit + 2:]
        _acc(pending, head + (b, a) + tail, c)
        for w, c2 in bracket_words.get((a, b), ()):
            _acc(pending, head + w + tail, c * c2)
    return NcPoly(table, done)


@dataclass
class PBWReport:
    passed: bool
    triples_checked: int
    failures: list = dc_field(default_factory=list)  # [((a, b, c), residual NcPoly)]
    assumption: str = ("Jacobi-triple residuals are taken as the PBW certificate; "
                       "completeness for non-quadratic bracket tails is assumed, not proven.")


def jacobi_triple(table: RelationTable, a: str, b: str, c: str) -> NcPoly:
    """[[a,b],c] + [[b,c],a] + [[c,a],b] with inner brackets read off the table."""
    ga, gb, gc = table.gen(a), table.gen(b), table.gen(c)
    return (commutator(table.bracket(a, b), gc)
            + commutator(table.bracket(b, c), ga)
            + commutator(table.bracket(c, a), gb))


def pbw_check(table: RelationTable) -> PBWReport:
    failures = []
    triples = list(itertools.combinations(table.order, 3))
    for a, b, c in triples:
        r = jacobi_triple(table, a, b, c)
        if r:
            failures.append(((a, b, c), r))
    return PBWReport(passed=not failures, triples_checked=len(triples), failures=failures)


def _weight_classes(table, elements):
    classes: dict = {}
    for idx, z in enumerate(elements):
        ws = z.weights()
        key = next(iter(ws)) if len(ws) == 1 else None
        classes.setdefault(key, []).append(idx)
    if None in classes and len(classes) > 1:
        return {None: list(range(len(elements)))}
    return classes


def solve_centrality(table: RelationTable, search_space, generators=None) -> list[NcPoly]:
    """Echelonized basis of the elements in span(search_space) commuting with every generator.

    Commutators with h and tau act diagonally on homogeneous monomials and
    other generators shift weight uniformly, so the search is split into
    biweight classes when every basis element is biweight-homogeneous.
    """
    space = [normalize(z, table) for z in search_space]
    gens = [table.gen(g) for g in (generators or table.order)]
    found = []
    for idxs in _weight_classes(table, space).values():
        columns = {}
        for i in idxs:
            col = {}
            for gi, g in enumerate(gens):
                for m, c in commutator(space[i], g).terms.items():
                    col[(gi, m)] = c
            columns[i] = col
        for vec in linalg.nullspace(columns, table.field):
            z = table.zero()
            for i, c in vec.items():
                z = z + space[i] * c
            found.append(z)
    return echelon_elements(table, found)


def echelon_elements(table: RelationTable, elements) -> list[NcPoly]:
    """Reduced echelon basis (canonical) of the span of ``elements``."""
    key = table.mono_sort_key
    rows = linalg.echelonize([dict(z.terms) for z in elements], table.field,
                             key=lambda m: _neg_key(key(m)))
    return [NcPoly(table, r) for r in rows]


def _neg_key(k):
    # pivot on the largest monomial so leading (top-degree) terms are pivots
    length, word = k
    return (-length, tuple(-i for i in word))


def same_span(table: RelationTable, first, second) -> bool:
    return echelon_elements(table, first) == echelon_elements(table, second)


def box_monomials(table: RelationTable, v_degree_bound=None, ug_degree_bound=None,
                  total_degree=None) -> list[NcPoly]:
    """All normal monomials inside the degree box, as elements."""
    if total_degree is None:
        if v_degree_bound is None or ug_degree_bound is None:
            raise ValueError("give a total degree or both partial bounds")
        total_degree = v_degree_bound + ug_degree_bound
    vb = total_degree if v_degree_bound is None else v_degree_bound
    ub = total_degree if ug_degree_bound is None else ug_degree_bound
    vpos = [i for i, g in enumerate(table.gens) if g.v_degree]
    upos = [i for i, g in enumerate(table.gens) if not g.v_degree]
    out = []
    for ud in range(min(ub, total_degree) + 1):
        for ucomb in itertools.combinations_with_replacement(upos, ud):
            for vd in range(min(vb, total_degree - ud) + 1):
                for vcomb in itertools.combinations_with_replacement(vpos, vd):
                    mono = [0] * len(table.order)
                    for i in ucomb + vcomb:
                        mono[i] += 1
                    out.append(NcPoly(table, {tuple(mono): table.field.one}))
    return out
