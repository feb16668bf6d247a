"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are :class:`fractions.Fraction` values, which are kept in
lowest terms with a positive denominator.  Prime field scalars are
:class:`Residue` values reduced into ``[0, p)``.  Both support the usual
arithmetic operators, so the linear algebra code never needs to know which
field it is working over.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, Optional, Tuple, Union

from .errors import DivisionByZero, MixedFieldsError

_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


class Residue:
    """An element of GF(p), stored as its canonical residue."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise MixedFieldsError(f"cannot combine GF({self.p}) and GF({other.p}) scalars")
            return other.value
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise MixedFieldsError(f"cannot combine GF({self.p}) scalar with a rational")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) * self.inverse()

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return Residue(pow(self.value, self.p - 2, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Residue]


@dataclass(frozen=True)
class FieldSpec:
    """An exact field: ``kind`` is ``"Q"`` or ``"GF"``; ``p`` is set for GF only."""

    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "GF":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"GF(p) requires a prime p, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    @property
    def order(self) -> Optional[int]:
        return self.p if self.kind == "GF" else None

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    @property
    def label(self) -> str:
        return "Q" if self.kind == "Q" else f"GF:{self.p}"

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.p})"

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction, scalar string or own-field scalar into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "Q":
            if isinstance(value, Residue):
                raise MixedFieldsError(f"GF({value.p}) scalar is not rational")
            if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
                return Fraction(value)
            raise TypeError(f"cannot convert {value!r} to a rational")
        if isinstance(value, Residue):
            if value.p != self.p:
                raise MixedFieldsError(f"GF({value.p}) scalar is not in {self}")
            return value
        if isinstance(value, Fraction):
            return Residue(value.numerator, self.p) / value.denominator
        if isinstance(value, int) and not isinstance(value, bool):
            return Residue(value, self.p)
        raise TypeError(f"cannot convert {value!r} to {self}")

    def contains(self, a) -> bool:
        if self.kind == "Q":
            return isinstance(a, Fraction)
        return isinstance(a, Residue) and a.p == self.p

    def parse(self, text: str) -> Scalar:
        """Parse ``[sign]digits[/digits]``; floats are never accepted."""
        m = _SCALAR_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a scalar literal: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return self(Fraction(num, den)) if self.kind == "Q" else self(num) / self(den)

    def format(self, a: Scalar) -> str:
        return str(a)

    def elements(self) -> Iterator[Scalar]:
        if self.kind != "GF":
            raise ValueError("only finite fields can be enumerated")
        return (Residue(v, self.p) for v in range(self.p))

    def is_square(self, a: Scalar) -> Tuple[bool, Optional[Scalar]]:
        """Return ``(True, r)`` with ``r * r == a`` if ``a`` is a square, else ``(False, None)``."""
        a = self(a)
        if self.kind == "Q":
            m, n = a.numerator, a.denominator
            if m < 0:
                return False, None
            rm, rn = isqrt(m), isqrt(n)
            if rm * rm == m and rn * rn == n:
                return True, Fraction(rm, rn)
            return False, None
        for r in self.elements():
            if r * r == a:
                return True, r
        return False, None

    def is_2_closed(self) -> bool:
        # 2 is never a rational square, so Q fails immediately.
        if self.kind == "Q":
            return False
        return all(self.is_square(a)[0] for a in self.elements())


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p)


def field_from_label(label: str) -> FieldSpec:
    """Accept ``Q`` or ``GF:p`` (also ``GF p`` and ``GF(p)``)."""
    text = label.strip()
    if text.upper() in ("Q", "QQ"):
        return QQ
    m = re.match(r"^GF\s*(?::|\s|\()\s*(\d+)\s*\)?$", text, re.IGNORECASE)
    if not m:
        raise ValueError(f"unrecognised field {label!r}; use Q or GF:<p>")
    return GF(int(m.group(1)))


def characteristic(F: FieldSpec) -> int:
    return F.characteristic


def is_square(F: FieldSpec, a) -> Tuple[bool, Optional[Scalar]]:
    return F.is_square(a)


def is_2_closed(F: FieldSpec) -> bool:
    return F.is_2_closed()


def arith(F: FieldSpec, op: str, a: Scalar, b: Scalar) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div} to two scalars of ``F``."""
    for x in (a, b):
        if not F.contains(x):
            raise MixedFieldsError(f"{x!r} is not an element of {F}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero(f"division by zero in {F}")
        return a / b
    raise ValueError(f"unknown operation {op!r}")
