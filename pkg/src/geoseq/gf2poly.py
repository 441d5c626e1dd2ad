"""Dense polynomials over GF(2), packed into a Python int.

Bit i of ``value`` is the coefficient of x^i, so the constant term is the least
significant bit.  Over GF(2), x^n - 1 and x^n + 1 are the same polynomial; this
module always spells it with a plus.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterError

# Degree of the zero polynomial. A float on purpose: using it as an index or a
# range bound fails loudly.
NEG_INF = float("-inf")


@dataclass(frozen=True)
class Gf2Poly:
    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("coefficient bit vector must be non-negative")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Gf2Poly":
        """Constant term first."""
        v = 0
        for i, b in enumerate(bits):
            if b & 1:
                v |= 1 << i
        return cls(v)

    @classmethod
    def from_exponents(cls, *exps: int) -> "Gf2Poly":
        v = 0
        for e in exps:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def from_hex(cls, text: str) -> "Gf2Poly":
        return cls(int(text, 16))

    @property
    def degree(self) -> int | float:
        return self.value.bit_length() - 1 if self.value else NEG_INF

    def is_zero(self) -> bool:
        return self.value == 0

    def bits(self) -> list[int]:
        return [(self.value >> i) & 1 for i in range(self.value.bit_length())]

    def to_hex(self) -> str:
        return format(self.value, "x")

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(_mul(self.value, other.value))

    def __divmod__(self, other: "Gf2Poly") -> tuple["Gf2Poly", "Gf2Poly"]:
        return gf2_divmod(self, other)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        return gf2_divmod(self, other)[0]

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return gf2_divmod(self, other)[1]

    def __str__(self) -> str:
        if not self.value:
            return "0"
        terms = []
        for i in range(self.value.bit_length() - 1, -1, -1):
            if (self.value >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def gf2_divmod(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Long division: a = q*b + r with deg r < deg b."""
    if not b.value:
        raise ZeroDivisionError("division by the zero polynomial")
    r = a.value
    db = b.value.bit_length() - 1
    q = 0
    while r and r.bit_length() - 1 >= db:
        shift = r.bit_length() - 1 - db
        q |= 1 << shift
        r ^= b.value << shift
    return Gf2Poly(q), Gf2Poly(r)


def gf2_gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    if not a.value and not b.value:
        raise ParameterError("gcd(0, 0) is undefined")
    x, y = a.value, b.value
    while y:
        x, y = y, gf2_divmod(Gf2Poly(x), Gf2Poly(y))[1].value
    return Gf2Poly(x)


def xn_minus_1(n: int) -> Gf2Poly:
    """x^n + 1, which equals x^n - 1 over GF(2)."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return Gf2Poly((1 << n) | 1)
