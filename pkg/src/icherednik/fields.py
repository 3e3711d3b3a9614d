"""Coefficient fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values.  Prime-field
scalars are :class:`Mod` instances.  Arithmetic between a ``Mod`` and a
``Fraction`` (or a ``Mod`` of a different modulus) raises ``TypeError``;
plain ``int`` is accepted by both since it lives in every prime subring.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class FieldMismatch(TypeError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Mod:
    """Residue class modulo a prime, stored in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, float)):
            raise FieldMismatch(f"cannot mix GF({self.p}) with {type(other).__name__}")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Mod":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Mod(pow(self.v, n, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """Base class; instances are callables that coerce values into the field."""

    characteristic = 0

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, value) -> bool:
        raise NotImplementedError

    def fmt(self, value) -> str:
        raise NotImplementedError

    def is_negative(self, value) -> bool:
        return False


class RationalField(Field):
    characteristic = 0
    name = "QQ"

    def __call__(self, value):
        if isinstance(value, Mod):
            raise FieldMismatch("cannot coerce a GF(p) element into QQ")
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def contains(self, value) -> bool:
        return isinstance(value, (int, Fraction))

    def fmt(self, value) -> str:
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def is_negative(self, value) -> bool:
        return value < 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"{p!r} is not a prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value):
        if isinstance(value, Mod):
            if value.p != self.p:
                raise FieldMismatch(f"cannot coerce GF({value.p}) element into GF({self.p})")
            return value
        if isinstance(value, int):
            return Mod(value, self.p)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            # reduction of a rational literal: needs p not dividing the denominator
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
            return Mod(value.numerator, self.p) / value.denominator
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def contains(self, value) -> bool:
        return isinstance(value, Mod) and value.p == self.p

    def fmt(self, value) -> str:
        return str(self(value).v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_options(kind: str = "q", p: int | None = None) -> Field:
    if kind in ("q", "QQ", "Q"):
        return QQ
    if kind in ("fp", "GF"):
        if p is None:
            raise ValueError("a prime-field request needs p")
        return GF(p)
    raise ValueError(f"unknown field kind {kind!r}")
