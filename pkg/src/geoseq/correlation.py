"""Periodic correlation: brute force, a packed popcount kernel, and closed forms.

Closed forms are expressed through three integers per field:

    N  = 2(p^m - 1)/(p - 1)
    N1 = -2 p^(m-1) + 2(p^(m-1) - 1)/(p - 1)
    N2 = 2(p^(m-2) - 1)/(p - 1)

Every predicted entry carries a branch label naming the case that produced
it.  Labels are part of the output schema; see ``THM1_LABELS`` and
``THM2_LABELS``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .field import FieldContext
from .sequences import BinarySequence, check_shift, gen_t1

T1_LABELS = ("eq2:N", "eq2:N1", "eq2:N2")

THM1_LABELS = (
    "thm1:even:2N",
    "thm1:even:2N1",
    "thm1:even:2N2",
    "thm1:odd:-N-N2",
    "thm1:odd:-N1-N2",
    "thm1:odd:-2N2",
    "thm1:odd-special:-N-N1",
    "thm1:odd-special:-2N2",
)

THM2_LABELS = (
    "thm2:even:N+N2",
    "thm2:even:N1+N2",
    "thm2:even:2N2",
    "thm2:even-half:N+N1",
    "thm2:even-half:2N2",
    "thm2:odd:-N-N2",
    "thm2:odd:-N1-N2",
    "thm2:odd:-2N2",
    "thm2:odd-sum1:-2N",
    "thm2:odd-sum1:-2N1",
    "thm2:odd-sum1:-2N2",
    "thm2:odd-sumhalf:-N-N1",
    "thm2:odd-sumhalf:-2N2",
)


@dataclass(frozen=True)
class CorrelationProfile:
    values: tuple[int, ...]
    kind: str  # "auto" | "cross"
    lhs_id: str = ""
    rhs_id: str = ""

    def __post_init__(self):
        p = len(self.values)
        if self.kind == "auto" and self.values[0] != p:
            raise AssertionError("autocorrelation at shift 0 must equal the period")
        if any((v - p) % 2 for v in self.values):
            raise AssertionError("correlation value with the wrong parity")


@dataclass(frozen=True)
class CorrelationPrediction:
    values: tuple[int, ...]
    case_labels: tuple[str, ...]


def autocorrelation_constants(p: int, m: int) -> tuple[int, int, int]:
    """(N, N1, N2); every division is exact."""
    n = 2 * (p**m - 1) // (p - 1)
    n1 = -2 * p ** (m - 1) + 2 * (p ** (m - 1) - 1) // (p - 1)
    n2 = 2 * (p ** (m - 2) - 1) // (p - 1)
    return n, n1, n2


# ---------------------------------------------------------------------------
# observed correlation
# ---------------------------------------------------------------------------

def _check_pair(a: BinarySequence, b: BinarySequence) -> int:
    if a.period != b.period:
        raise ParameterError(f"period mismatch: {a.period} vs {b.period}")
    return a.period


def correlate(a: BinarySequence, b: BinarySequence) -> CorrelationProfile:
    """R(tau) = sum_i (-1)^(a[i] + b[i + tau]) for tau in [0, P), by direct summation."""
    period = _check_pair(a, b)
    sa = 1 - 2 * np.asarray(a.bits, dtype=np.int64)
    sb = 1 - 2 * np.asarray(b.bits, dtype=np.int64)
    idx = np.arange(period)
    values = []
    # Row blocks keep the P x P index matrix bounded for long periods.
    block = max(1, (1 << 22) // period)
    for start in range(0, period, block):
        taus = np.arange(start, min(period, start + block))
        shifted = sb[(idx[None, :] + taus[:, None]) % period]
        values.extend((shifted @ sa).tolist())
    kind = "auto" if a.bits == b.bits else "cross"
    return CorrelationProfile(tuple(int(v) for v in values), kind, a.label, b.label)


def _pack(bits) -> int:
    v = 0
    for i, bit in enumerate(bits):
        if bit:
            v |= 1 << i
    return v


def correlate_packed(a: BinarySequence, b: BinarySequence) -> tuple[int, ...]:
    """Same profile as :func:`correlate` via XOR + popcount on packed ints."""
    period = _check_pair(a, b)
    mask = (1 << period) - 1
    pa, pb = _pack(a.bits), _pack(b.bits)
    out = []
    for tau in range(period):
        # bit i of the rotation is b[i + tau]
        rot = ((pb >> tau) | (pb << (period - tau))) & mask
        out.append(period - 2 * (pa ^ rot).bit_count())
    return tuple(out)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _constants(ctx: FieldContext) -> tuple[int, int, int]:
    return autocorrelation_constants(ctx.p, ctx.m)


def predict_t1_autocorrelation(ctx: FieldContext) -> CorrelationPrediction:
    n, n1, n2 = _constants(ctx)
    values, labels = [], []
    for tau in range(n):
        if tau == 0:
            values.append(n)
            labels.append("eq2:N")
        elif tau == n // 2:
            values.append(n1)
            labels.append("eq2:N1")
        else:
            values.append(n2)
            labels.append("eq2:N2")
    return CorrelationPrediction(tuple(values), tuple(labels))


def predict_se_autocorrelation(ctx: FieldContext, e: int) -> CorrelationPrediction:
    """Autocorrelation of S^e over tau in [0, 2N)."""
    check_shift(ctx, e)
    n, n1, n2 = _constants(ctx)
    half = n // 2
    special = (2 * e - (1 - half)) % n == 0
    big = {(-e - half) % n, (e - 1 + half) % n}
    small = {(-e) % n, (e - 1) % n}
    values, labels = [], []
    for tau in range(2 * n):
        t0, odd = divmod(tau, 2)
        if not odd:
            if t0 == 0:
                v, lab = 2 * n, "thm1:even:2N"
            elif t0 == half:
                v, lab = 2 * n1, "thm1:even:2N1"
            else:
                v, lab = 2 * n2, "thm1:even:2N2"
        elif special:
            if t0 in small:
                v, lab = -n - n1, "thm1:odd-special:-N-N1"
            else:
                v, lab = -2 * n2, "thm1:odd-special:-2N2"
        elif t0 in big:
            v, lab = -n - n2, "thm1:odd:-N-N2"
        elif t0 in small:
            v, lab = -n1 - n2, "thm1:odd:-N1-N2"
        else:
            v, lab = -2 * n2, "thm1:odd:-2N2"
        values.append(v)
        labels.append(lab)
    return CorrelationPrediction(tuple(values), tuple(labels))


def predict_cross_correlation(ctx: FieldContext, e1: int, e2: int) -> CorrelationPrediction:
    """Cross-correlation of S^e1 and S^e2 (e1 < e2) over tau in [0, 2N)."""
    check_shift(ctx, e1)
    check_shift(ctx, e2)
    if e1 >= e2:
        raise ParameterError(f"need e1 < e2, got e1={e1}, e2={e2}")
    n, n1, n2 = _constants(ctx)
    half = n // 2
    even_half = (e2 - e1 - half) % n == 0
    s = (e1 + e2) % n
    sum1 = s == 1
    sumhalf = s == (1 - half) % n

    even_big = {0, (e1 - e2) % n}
    even_small = {half, (e1 - e2 + half) % n}
    odd_big = {(-e2 - half) % n, (e1 - 1 + half) % n}
    odd_small = {(-e2) % n, (e1 - 1) % n}

    values, labels = [], []
    for tau in range(2 * n):
        t0, odd = divmod(tau, 2)
        if not odd:
            if even_half:
                if t0 in (0, half):
                    v, lab = n + n1, "thm2:even-half:N+N1"
                else:
                    v, lab = 2 * n2, "thm2:even-half:2N2"
            elif t0 in even_big:
                v, lab = n + n2, "thm2:even:N+N2"
            elif t0 in even_small:
                v, lab = n1 + n2, "thm2:even:N1+N2"
            else:
                v, lab = 2 * n2, "thm2:even:2N2"
        elif sum1:
            if t0 == (-e2 - half) % n:
                v, lab = -2 * n, "thm2:odd-sum1:-2N"
            elif t0 == (-e2) % n:
                v, lab = -2 * n1, "thm2:odd-sum1:-2N1"
            else:
                v, lab = -2 * n2, "thm2:odd-sum1:-2N2"
        elif sumhalf:
            if t0 in ((-e2 - half) % n, (-e2) % n):
                v, lab = -n - n1, "thm2:odd-sumhalf:-N-N1"
            else:
                v, lab = -2 * n2, "thm2:odd-sumhalf:-2N2"
        elif t0 in odd_big:
            v, lab = -n - n2, "thm2:odd:-N-N2"
        elif t0 in odd_small:
            v, lab = -n1 - n2, "thm2:odd:-N1-N2"
        else:
            v, lab = -2 * n2, "thm2:odd:-2N2"
        values.append(v)
        labels.append(lab)
    return CorrelationPrediction(tuple(values), tuple(labels))


def lemma2_decompose(ctx: FieldContext, e1: int, e2: int, tau: int,
                     t1_profile: tuple[int, ...] | None = None) -> int:
    """R_{S^e1, S^e2}(tau) rebuilt from the observed autocorrelation of T1.

    Even tau = 2*t0:  R_T1(t0) + R_T1(e2 - e1 + t0)
    Odd tau = 2*t0+1: -R_T1(e2 + t0 + N/2) - R_T1(e1 - t0 - 1 + N/2)
    """
    check_shift(ctx, e1)
    check_shift(ctx, e2)
    n = ctx.N
    if not 0 <= tau < 2 * n:
        raise ParameterError(f"tau={tau} outside [0, {2 * n})")
    if t1_profile is None:
        t1 = gen_t1(ctx)
        t1_profile = correlate(t1, t1).values
    r = t1_profile
    t0, odd = divmod(tau, 2)
    if not odd:
        return r[t0 % n] + r[(e2 - e1 + t0) % n]
    return -r[(e2 + t0 + n // 2) % n] - r[(e1 - t0 - 1 + n // 2) % n]
