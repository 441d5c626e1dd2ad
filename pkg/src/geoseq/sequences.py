"""Legendre-binarized geometric sequences and their interleavings.

A sequence is stored as exactly one period; indices are taken modulo it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import ParameterError, PeriodError
from .field import FieldContext, legendre, omega_powers, trace

# legendre((Tr omega^n)/p) -> bit.  The two types differ only on Tr = 0.
TYPE1_TABLE = {1: 0, -1: 1, 0: 0}
TYPE2_TABLE = {1: 0, -1: 1, 0: 1}


@dataclass(frozen=True)
class BinarySequence:
    bits: tuple[int, ...]
    period: int
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.period < 1:
            raise ParameterError("period must be >= 1")
        if len(self.bits) != self.period:
            raise ParameterError(
                f"{len(self.bits)} bits supplied for declared period {self.period}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ParameterError("bits must be 0 or 1")

    @classmethod
    def of(cls, bits: Sequence[int], label: str = "") -> "BinarySequence":
        bits = tuple(int(b) for b in bits)
        return cls(bits, len(bits), label)

    def __len__(self) -> int:
        return self.period

    def __getitem__(self, n: int) -> int:
        return self.bits[n % self.period]

    def ones(self) -> int:
        return sum(self.bits)

    def zeros(self) -> int:
        return self.period - self.ones()

    def repeat(self, periods: int) -> list[int]:
        return list(self.bits) * periods

    def to_string(self) -> str:
        return "".join(map(str, self.bits))


def least_period(bits: Sequence[int]) -> int:
    n = len(bits)
    for d in range(1, n + 1):
        if n % d == 0 and all(bits[i] == bits[i % d] for i in range(d, n)):
            return d
    return n


def require_least_period(seq: BinarySequence, expected: int) -> BinarySequence:
    lp = least_period(seq.bits)
    if lp != expected:
        raise PeriodError(
            f"{seq.label or 'sequence'}: least period {lp}, expected {expected}"
        )
    return seq


@lru_cache(maxsize=64)
def trace_symbols(ctx: FieldContext) -> tuple[int, ...]:
    """Legendre symbol of Tr(omega^n) for n in [0, N)."""
    return tuple(
        legendre(ctx.p, trace(ctx, w)) for w in omega_powers(ctx, ctx.N)
    )


@lru_cache(maxsize=64)
def gen_t1(ctx: FieldContext) -> BinarySequence:
    bits = tuple(TYPE1_TABLE[s] for s in trace_symbols(ctx))
    return require_least_period(BinarySequence(bits, ctx.N, "T1"), ctx.N)


@lru_cache(maxsize=64)
def gen_t2(ctx: FieldContext) -> BinarySequence:
    bits = tuple(TYPE2_TABLE[s] for s in trace_symbols(ctx))
    return require_least_period(BinarySequence(bits, ctx.N, "T2"), ctx.N)


def left_shift(s: BinarySequence, e: int) -> BinarySequence:
    """L^e(s): output[n] = s[n + e]."""
    if not 0 <= e < s.period:
        raise ParameterError(f"shift {e} outside [0, {s.period})")
    label = f"L^{e}({s.label})" if s.label else ""
    return BinarySequence(s.bits[e:] + s.bits[:e], s.period, label)


def interleave(family: Sequence[BinarySequence]) -> BinarySequence:
    """u[j*T + i] = family[i][j] for a family of T equal-period sequences."""
    if not family:
        raise ParameterError("cannot interleave an empty family")
    n = family[0].period
    if any(s.period != n for s in family):
        raise ParameterError("all interleaved sequences must share one period")
    t = len(family)
    bits = tuple(family[j % t].bits[j // t] for j in range(t * n))
    return BinarySequence(bits, t * n)


def deinterleave(s: BinarySequence, t: int) -> list[BinarySequence]:
    if t < 1 or s.period % t:
        raise ParameterError(f"period {s.period} is not a multiple of {t}")
    return [BinarySequence(s.bits[i::t], s.period // t) for i in range(t)]


def check_shift(ctx: FieldContext, e: int) -> None:
    if not isinstance(e, int) or not 0 <= e < ctx.N:
        raise ParameterError(f"shift e={e} outside [0, {ctx.N - 1}]")


@lru_cache(maxsize=1024)
def gen_se(ctx: FieldContext, e: int) -> BinarySequence:
    """S^e: the interleaving of T1 with the left shift of T2 by e."""
    check_shift(ctx, e)
    s = interleave([gen_t1(ctx), left_shift(gen_t2(ctx), e)])
    s = BinarySequence(s.bits, s.period, f"S^{e}")
    return require_least_period(s, 2 * ctx.N)


def type1_counts(p: int, m: int) -> tuple[int, int]:
    """(zeros, ones) in one period of T1, closed form."""
    q = p ** (m - 1)
    return q + 2 * (q - 1) // (p - 1), q
