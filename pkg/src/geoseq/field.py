"""Arithmetic in GF(p) and GF(p^m).

Polynomials and field elements are coefficient tuples with the constant term
first, e.g. x^2 + 2x + 3 is ``(3, 2, 1)``.  An element of GF(p^m) is a length-m
tuple of residues; the field itself is fixed by a monic irreducible modulus.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import FieldConstructionError, ParameterError

DEFAULT_MAX_ORDER = 2**31


# ---------------------------------------------------------------------------
# integers
# ---------------------------------------------------------------------------

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


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n > 0, ascending (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def legendre(p: int, a: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p <= 2 or not is_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def underline_mod(a: int, n: int) -> int:
    """The representative of a mod n taken from {1, ..., n} (n itself, not 0)."""
    if n <= 1:
        raise ParameterError(f"modulus must be > 1, got {n}")
    return (a - 1) % n + 1


def parse_coeffs(text: str) -> tuple[int, ...]:
    """Parse the ``"3,2,1"`` coefficient-list format (constant term first)."""
    try:
        vals = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParameterError(f"bad coefficient list {text!r}") from None
    if not vals:
        raise ParameterError("empty coefficient list")
    return vals


def format_coeffs(coeffs: Iterable[int]) -> str:
    return ",".join(str(c) for c in coeffs)


# ---------------------------------------------------------------------------
# GF(p)[x], used for the irreducibility test
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _pmod(prod, f, p)


def _ppowmod(a: Sequence[int], k: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        k >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over GF(p)."""
    m = len(f) - 1
    if m < 1 or f[-1] % p != 1:
        return False
    x = [0, 1]
    for q in prime_factors(m):
        h = _ppowmod(x, p ** (m // q), f, p)
        if len(_pgcd(f, _psub(h, x, p), p)) != 1:
            return False
    return not _psub(_ppowmod(x, p**m, f, p), _pmod(x, f, p), p)


def _check_params(p: int, m: int, max_order: int) -> None:
    if not isinstance(p, int) or p <= 2 or not is_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p}")
    if not isinstance(m, int) or m <= 1:
        raise ParameterError(f"m must be an integer > 1, got {m}")
    if p**m > max_order:
        raise ParameterError(f"p^m = {p**m} exceeds the configured bound {max_order}")


def find_irreducible(p: int, m: int, max_order: int = DEFAULT_MAX_ORDER) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m (constant term first)."""
    _check_params(p, m, max_order)
    for low in itertools.product(range(p), repeat=m):
        f = low + (1,)
        if low[0] and is_irreducible(f, p):
            return f
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


# ---------------------------------------------------------------------------
# GF(p^m)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtFieldElement:
    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        return format_coeffs(self.coeffs)


@dataclass(frozen=True)
class FieldContext:
    """GF(p^m) = GF(p)[x]/(f) together with a primitive element omega.

    Build it with :meth:`build`, which validates user overrides and otherwise
    picks ``f`` and ``omega`` by deterministic search.
    """

    p: int
    m: int
    f_coeffs: tuple[int, ...]
    omega: ExtFieldElement
    order: int = field(init=False)
    N: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "order", self.p**self.m)
        object.__setattr__(self, "N", 2 * (self.p**self.m - 1) // (self.p - 1))

    @classmethod
    def build(
        cls,
        p: int,
        m: int,
        irreducible: Sequence[int] | None = None,
        omega: Sequence[int] | None = None,
        max_order: int = DEFAULT_MAX_ORDER,
    ) -> "FieldContext":
        _check_params(p, m, max_order)
        if irreducible is None:
            f = find_irreducible(p, m, max_order)
        else:
            f = tuple(int(c) for c in irreducible)
            if len(f) != m + 1 or f[-1] != 1 or any(not 0 <= c < p for c in f):
                raise FieldConstructionError(
                    f"modulus must be monic of degree {m} with coefficients in [0, {p})"
                )
            if not is_irreducible(f, p):
                raise FieldConstructionError(
                    f"polynomial {format_coeffs(f)} is reducible over GF({p})"
                )
        if omega is None:
            w = find_primitive(p, m, f).coeffs
        else:
            w = tuple(int(c) for c in omega)
            if len(w) > m or any(not 0 <= c < p for c in w):
                raise FieldConstructionError(
                    f"omega needs at most {m} coefficients in [0, {p})"
                )
            w = w + (0,) * (m - len(w))
            if not is_primitive(p, m, f, w):
                raise FieldConstructionError(
                    f"omega {format_coeffs(w)} is not a primitive element"
                )
        return cls(p, m, f, ExtFieldElement(w))

    def element(self, coeffs: Iterable[int]) -> ExtFieldElement:
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.m:
            raise ParameterError(f"element has more than {self.m} coefficients")
        return ExtFieldElement(tuple(c + [0] * (self.m - len(c))))

    def scalar(self, c: int) -> ExtFieldElement:
        return self.element([c])

    @property
    def zero(self) -> ExtFieldElement:
        return ExtFieldElement((0,) * self.m)

    @property
    def one(self) -> ExtFieldElement:
        return self.scalar(1)

    @property
    def alpha(self) -> ExtFieldElement:
        """The class of x, i.e. a root of the modulus."""
        return self.element([0, 1])

    def elements(self) -> Iterable[ExtFieldElement]:
        for c in itertools.product(range(self.p), repeat=self.m):
            yield ExtFieldElement(c)

    def describe(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "f": format_coeffs(self.f_coeffs),
            "omega": str(self.omega),
        }


def _mul_raw(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int, m: int) -> tuple[int, ...]:
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(2 * m - 2, m - 1, -1):
        c = prod[k] % p
        if c:
            for i in range(m):
                prod[k - m + i] -= c * f[i]
    return tuple(c % p for c in prod[:m])


def _pow_raw(a: Sequence[int], k: int, f: Sequence[int], p: int, m: int) -> tuple[int, ...]:
    result = (1,) + (0,) * (m - 1)
    base = tuple(a)
    while k:
        if k & 1:
            result = _mul_raw(result, base, f, p, m)
        base = _mul_raw(base, base, f, p, m)
        k >>= 1
    return result


def is_primitive(p: int, m: int, f: Sequence[int], w: Sequence[int]) -> bool:
    """True iff w has multiplicative order exactly p^m - 1 modulo f."""
    w = tuple(w) + (0,) * (m - len(w))
    if not any(w):
        return False
    one = (1,) + (0,) * (m - 1)
    n = p**m - 1
    if _pow_raw(w, n, f, p, m) != one:
        return False
    return all(_pow_raw(w, n // q, f, p, m) != one for q in prime_factors(n))


def find_primitive(p: int, m: int, f: Sequence[int]) -> ExtFieldElement:
    """First element in lexicographic coefficient order with order p^m - 1."""
    for w in itertools.product(range(p), repeat=m):
        if is_primitive(p, m, f, w):
            return ExtFieldElement(w)
    raise AssertionError("unreachable: GF(p^m)* is cyclic")


def ext_add(ctx: FieldContext, a: ExtFieldElement, b: ExtFieldElement) -> ExtFieldElement:
    return ExtFieldElement(tuple((x + y) % ctx.p for x, y in zip(a.coeffs, b.coeffs)))


def ext_mul(ctx: FieldContext, a: ExtFieldElement, b: ExtFieldElement) -> ExtFieldElement:
    return ExtFieldElement(_mul_raw(a.coeffs, b.coeffs, ctx.f_coeffs, ctx.p, ctx.m))


def ext_pow(ctx: FieldContext, a: ExtFieldElement, k: int) -> ExtFieldElement:
    if k < 0:
        return ext_pow(ctx, ext_inverse(ctx, a), -k)
    return ExtFieldElement(_pow_raw(a.coeffs, k, ctx.f_coeffs, ctx.p, ctx.m))


def ext_inverse(ctx: FieldContext, a: ExtFieldElement) -> ExtFieldElement:
    if not any(a.coeffs):
        raise ZeroDivisionError("zero has no inverse in GF(p^m)")
    return ext_pow(ctx, a, ctx.order - 2)


def trace(ctx: FieldContext, a: ExtFieldElement) -> int:
    """Absolute trace a + a^p + ... + a^(p^(m-1)), returned as an int in [0, p)."""
    total = ctx.zero
    conj = a
    for _ in range(ctx.m):
        total = ext_add(ctx, total, conj)
        conj = ext_pow(ctx, conj, ctx.p)
    if any(total.coeffs[1:]):
        raise AssertionError(f"trace left the prime field: {total}")
    return total.coeffs[0]


def multiplicative_order(ctx: FieldContext, a: ExtFieldElement) -> int:
    n = ctx.order - 1
    if ext_pow(ctx, a, n) != ctx.one:
        raise ParameterError("element is zero")
    order = n
    for q in prime_factors(n):
        while order % q == 0 and ext_pow(ctx, a, order // q) == ctx.one:
            order //= q
    return order


def omega_powers(ctx: FieldContext, count: int) -> list[ExtFieldElement]:
    """[omega^0, omega^1, ..., omega^(count-1)]."""
    out = []
    cur = ctx.one.coeffs
    w = ctx.omega.coeffs
    for _ in range(count):
        out.append(ExtFieldElement(cur))
        cur = _mul_raw(cur, w, ctx.f_coeffs, ctx.p, ctx.m)
    return out

