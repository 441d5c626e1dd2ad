"""Linear complexity of S^e by three independent routes.

1. closed form   L = 2N - G(N, e)
2. gcd method    L = P - deg gcd(x^P + 1, S(x)), m(x) = (x^P + 1) / gcd
3. Berlekamp-Massey on two periods

Over GF(2), x^P - 1 is written x^P + 1 throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import ParameterError, VerificationError
from .field import FieldContext, underline_mod
from .gf2poly import Gf2Poly, gf2_divmod, gf2_gcd, xn_minus_1
from .sequences import BinarySequence, check_shift, gen_se


def nu2(n: int) -> int:
    """2-adic valuation of n >= 1."""
    if n < 1:
        raise ParameterError(f"nu2 needs n >= 1, got {n}")
    return (n & -n).bit_length() - 1


def g_of(N: int, e: int) -> int:
    """G(N, e) = gcd(M, (-2e + 1) umod M), M the odd part of N."""
    if N < 2 or N % 2:
        raise ParameterError(f"N must be even and positive, got {N}")
    if not 0 <= e < N:
        raise ParameterError(f"e={e} outside [0, {N})")
    odd = N >> nu2(N)
    if odd == 1:
        # umod needs a modulus > 1; every integer is 0 mod 1 and gcd(1, .) = 1
        return 1
    return gcd(odd, underline_mod(-2 * e + 1, odd))


def minimal_poly_gcd(s: BinarySequence | Sequence[int]) -> tuple[Gf2Poly, int]:
    """Minimal polynomial and linear complexity of one period of s."""
    bits = s.bits if isinstance(s, BinarySequence) else tuple(s)
    if not bits:
        raise ParameterError("empty sequence")
    period = len(bits)
    sx = Gf2Poly.from_bits(bits)
    if sx.is_zero():
        return Gf2Poly(1), 0
    modulus = xn_minus_1(period)
    g = gf2_gcd(modulus, sx)
    mx, rem = gf2_divmod(modulus, g)
    assert rem.is_zero()
    return mx, period - g.degree


def berlekamp_massey(bits: Sequence[int], period: int | None = None) -> int:
    """Length of the shortest LFSR over GF(2) producing ``bits``.

    When ``period`` is given, at least two periods are required so that the
    result is the linear complexity of the periodic sequence.
    """
    if period is not None and len(bits) < 2 * period:
        raise ParameterError(
            f"need at least two periods ({2 * period} bits), got {len(bits)}"
        )
    # Connection polynomials as ints; window bit i holds s[n - i].
    c, b = 1, 1
    L, m = 0, -1
    window = 0
    for n, bit in enumerate(bits):
        window = (window << 1) | (bit & 1)
        d = (c & window).bit_count() & 1
        if d:
            t = c
            c ^= b << (n - m)
            if 2 * L <= n:
                L = n + 1 - L
                b, m = t, n
    return L


def linear_complexity_bm(s: BinarySequence) -> int:
    return berlekamp_massey(s.repeat(2), s.period)


@dataclass(frozen=True)
class LinearComplexityReport:
    p: int
    m: int
    e: int
    N: int
    L_closed_form: int
    L_gcd_method: int
    L_berlekamp_massey: int
    minimal_poly: Gf2Poly
    G: int
    nu2_N: int

    @property
    def agreement(self) -> bool:
        return self.L_closed_form == self.L_gcd_method == self.L_berlekamp_massey

    def to_json(self, ctx: FieldContext | None = None) -> dict:
        out = {
            "p": self.p,
            "m": self.m,
            "e": self.e,
            "N": self.N,
            "nu2": self.nu2_N,
            "G": self.G,
            "L_closed": self.L_closed_form,
            "L_gcd": self.L_gcd_method,
            "L_bm": self.L_berlekamp_massey,
            "minimal_poly_hex": self.minimal_poly.to_hex(),
            "agreement": self.agreement,
        }
        if ctx is not None:
            out["f"] = ctx.describe()["f"]
            out["omega"] = ctx.describe()["omega"]
        return out


def lc_report(ctx: FieldContext, e: int, seq: BinarySequence | None = None) -> LinearComplexityReport:
    """Run all three routes on S^e; raise VerificationError unless they agree.

    ``seq`` substitutes the sequence under test (used to exercise failure paths).
    """
    check_shift(ctx, e)
    s = gen_se(ctx, e) if seq is None else seq
    n = ctx.N
    G = g_of(n, e)
    mx, l_gcd = minimal_poly_gcd(s)
    report = LinearComplexityReport(
        p=ctx.p,
        m=ctx.m,
        e=e,
        N=n,
        L_closed_form=2 * n - G,
        L_gcd_method=l_gcd,
        L_berlekamp_massey=linear_complexity_bm(s),
        minimal_poly=mx,
        G=G,
        nu2_N=nu2(n),
    )
    if not report.agreement:
        raise VerificationError(
            f"linear complexity disagreement for e={e}: closed={report.L_closed_form} "
            f"gcd={report.L_gcd_method} bm={report.L_berlekamp_massey}"
        )
    expected_mx, rem = gf2_divmod(xn_minus_1(2 * n), xn_minus_1(G))
    if rem or mx != expected_mx:
        raise VerificationError(f"minimal polynomial mismatch for e={e}")
    return report
