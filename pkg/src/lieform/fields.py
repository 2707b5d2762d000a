"""Exact scalar arithmetic over Q and GF(p).

Scalars are raw payloads: ``fractions.Fraction`` over Q, plain ``int`` in
{0, ..., p-1} over GF(p).  A Field instance supplies the operations.  Keeping
payloads unwrapped matters: the verification sweeps spend nearly all their
time in row reduction inner loops.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldMismatchError, ParseError

_SCALAR_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?\Z")
_FIELD_RE = re.compile(r"GF\(([0-9]+)\)\Z")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (p is None) or a prime field GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p):
                raise ParseError("field order must be prime, got %r" % (p,))
        self.p = p

    @staticmethod
    def rationals() -> "Field":
        return _Q

    @staticmethod
    def gf(p: int) -> "Field":
        return Field(p)

    @staticmethod
    def from_string(text: str) -> "Field":
        text = text.strip()
        if text == "Q":
            return _Q
        m = _FIELD_RE.match(text)
        if m is None:
            raise ParseError("unrecognised field %r" % (text,))
        return Field(int(m.group(1)))

    def __str__(self) -> str:
        return "Q" if self.p is None else "GF(%d)" % self.p

    def __repr__(self) -> str:
        return "Field(%s)" % self

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    # Element constructors

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def from_int(self, n: int):
        return Fraction(n) if self.p is None else n % self.p

    # Arithmetic.  GF(p) payloads are canonical representatives, so results
    # are reduced mod p on the way out.

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    # Text form.  Integers print bare, non-integers as num/den; over GF(p)
    # a/b is shorthand for a * b^-1.

    def parse(self, text: str):
        if not isinstance(text, str) or _SCALAR_RE.match(text) is None:
            raise ParseError("bad scalar literal %r" % (text,))
        if "/" in text:
            num_s, den_s = text.split("/")
            num, den = int(num_s), int(den_s)
            if self.p is None:
                return Fraction(num, den)
            return self.div(num % self.p, den % self.p)
        n = int(text)
        return Fraction(n) if self.p is None else n % self.p

    def format(self, a) -> str:
        if self.p is None:
            if a.denominator == 1:
                return str(a.numerator)
            return "%d/%d" % (a.numerator, a.denominator)
        return str(a % self.p)

    def check_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError("%s vs %s" % (self, other))


_Q = Field(None)
