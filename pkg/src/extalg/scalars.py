"""Exact scalar fields: the rationals and prime fields GF(p), p odd.

Linear algebra in this package works on *raw* values (``Fraction`` for the
rationals, ``int`` in ``[0, p)`` for GF(p)) and passes the field around
explicitly; that keeps the inner loops free of wrapper objects.  The
:class:`Scalar` type is the user-facing value that carries its field along.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """A field of characteristic 0 (the rationals) or an odd prime."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if p != 0 and not _is_prime(p):
            raise FieldError(f"{p} is not prime")

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def order(self) -> int | None:
        return self.characteristic or None

    @property
    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def __str__(self) -> str:
        return f"gf {self.characteristic}" if self.characteristic else "Q"

    def __repr__(self) -> str:
        return f"GF({self.characteristic})" if self.characteristic else "QQ"

    # raw-value arithmetic

    def coerce(self, x: Any):
        p = self.characteristic
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldError(f"cannot coerce {x.field!r} scalar into {self!r}")
            return x.value
        if p:
            if isinstance(x, Fraction):
                if x.denominator % p == 0:
                    raise FieldError(f"{x} has no image in GF({p})")
                return x.numerator * pow(x.denominator, -1, p) % p
            if isinstance(x, int):
                return x % p
            raise FieldError(f"cannot coerce {x!r} into GF({p})")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise FieldError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return (a + b) % self.characteristic if self.characteristic else a + b

    def sub(self, a, b):
        return (a - b) % self.characteristic if self.characteristic else a - b

    def mul(self, a, b):
        return (a * b) % self.characteristic if self.characteristic else a * b

    def neg(self, a):
        return (-a) % self.characteristic if self.characteristic else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(a, -1, self.characteristic)
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        if not self.characteristic:
            raise FieldError("Q is infinite")
        return range(self.characteristic)

    def random(self, rng: random.Random, nonzero: bool = False, height: int = 9):
        """A random element; rationals have numerator and denominator bounded by ``height``."""
        p = self.characteristic
        while True:
            if p:
                v = rng.randrange(p)
            else:
                v = Fraction(rng.randint(-height, height), rng.randint(1, height))
            if v or not nonzero:
                return v

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            value = Fraction(int(num), int(den))
        else:
            value = int(text)
        return self.coerce(value)

    def format(self, a) -> str:
        return str(a)


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    if p == 0:
        raise FieldError("use QQ for characteristic 0")
    return Field(p)


def field_from_text(text: str) -> Field:
    """Parse ``Q`` or ``gf p`` (also ``GF(p)``, ``gf7``)."""
    t = text.strip().lower().replace("(", " ").replace(")", " ")
    if t in ("q", "qq", "rationals"):
        return QQ
    if t.startswith("gf"):
        return GF(int(t[2:].strip()))
    raise FieldError(f"unknown field {text!r}")


@dataclass(frozen=True)
class Scalar:
    field: Field
    value: Any

    @classmethod
    def of(cls, field: Field, x) -> "Scalar":
        return cls(field, field.coerce(x))

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def _wrap(self, v) -> "Scalar":
        return Scalar(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field!r} and {other.field!r}")
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"Scalar({self.field!r}, {self.value})"

    def __str__(self):
        return str(self.value)
