"""One-shot cross-check of every closed form against brute force for one field."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .complexity import lc_report, linear_complexity_bm, nu2
from .correlation import (
    THM1_LABELS,
    THM2_LABELS,
    correlate,
    lemma2_decompose,
    predict_cross_correlation,
    predict_se_autocorrelation,
    predict_t1_autocorrelation,
)
from .errors import ParameterError, VerificationError
from .field import FieldContext
from .sequences import (
    BinarySequence,
    check_shift,
    gen_se,
    gen_t1,
    gen_t2,
    least_period,
    type1_counts,
)

MAX_FULL_SWEEP_N = 4096
ALL_PAIRS_LIMIT = 64

CHECK_ORDER = (
    "lemma1",
    "eq2",
    "prop1",
    "cor1",
    "lc_t1",
    "thm1",
    "lemma2",
    "thm2",
    "thm3",
    "balance",
    "period",
)

Fault = Callable[[int, BinarySequence], BinarySequence]


@dataclass
class CheckResult:
    checked: int = 0
    failure: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def record(self, ok: bool, **detail) -> None:
        self.checked += 1
        if not ok and self.failure is None:
            self.failure = detail


@dataclass
class VerificationReport:
    params: dict
    checks: dict[str, CheckResult]
    coverage: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def first_failure(self) -> dict | None:
        for name in CHECK_ORDER:
            c = self.checks[name]
            if not c.passed:
                return {"theorem": name, **c.failure}
        return None

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "passed": self.passed,
            "checks": {
                name: {"passed": c.passed, "checked": c.checked}
                for name, c in self.checks.items()
            },
            "branch_coverage": {
                lab: self.coverage.get(lab, 0) for lab in THM1_LABELS + THM2_LABELS
            },
            "first_failure": self.first_failure,
        }


def flip_bit(index: int) -> Fault:
    """Fault hook that flips one bit of the sequence it is applied to."""

    def fault(e: int, s: BinarySequence) -> BinarySequence:
        bits = list(s.bits)
        bits[index % s.period] ^= 1
        return BinarySequence(tuple(bits), s.period, s.label)

    return fault


def select_pairs(n: int, es: list[int]) -> list[tuple[int, int]]:
    """All pairs when few shifts are requested, else pairs aimed at each branch."""
    if len(es) <= ALL_PAIRS_LIMIT:
        return [(a, b) for i, a in enumerate(es) for b in es[i + 1:]]
    allowed = set(es)
    pairs = set()
    for e in es:
        for other in (e + 1, e + n // 2, 1 - e, 1 - n // 2 - e):
            other %= n
            if other != e and other in allowed:
                pairs.add((min(e, other), max(e, other)))
    return sorted(pairs)


def _first_diff(expected, observed) -> int | None:
    for i, (x, y) in enumerate(zip(expected, observed)):
        if x != y:
            return i
    return None


def verify_instance(
    ctx: FieldContext,
    e_list: Iterable[int] | None = None,
    pairs: Iterable[tuple[int, int]] | None = None,
    fault: Fault | None = None,
    fault_e: Iterable[int] | None = None,
) -> VerificationReport:
    """Check every identity and closed form on ``ctx``.

    ``fault`` (with the shifts it applies to in ``fault_e``, default all) is a
    test hook that tampers with S^e before any check sees it.
    """
    n = ctx.N
    if e_list is None:
        if n > MAX_FULL_SWEEP_N:
            raise ParameterError(
                f"N={n} exceeds {MAX_FULL_SWEEP_N}; pass an explicit e-list"
            )
        es = list(range(n))
    else:
        es = sorted(set(e_list))
        for e in es:
            check_shift(ctx, e)
    pairs = select_pairs(n, es) if pairs is None else sorted(pairs)
    tamper = set(es if fault_e is None else fault_e)

    def se(e: int) -> BinarySequence:
        s = gen_se(ctx, e)
        return fault(e, s) if fault is not None and e in tamper else s

    checks = {name: CheckResult() for name in CHECK_ORDER}
    report = VerificationReport(
        params={**ctx.describe(), "N": n, "e_count": len(es), "pair_count": len(pairs)},
        checks=checks,
    )
    t1, t2 = gen_t1(ctx), gen_t2(ctx)
    half = n // 2

    for i in range(n):
        expected = t1[i + half] ^ 1
        checks["lemma1"].record(t2[i] == expected, n=i, expected=expected, observed=t2[i])

    r1 = correlate(t1, t1).values
    pred = predict_t1_autocorrelation(ctx).values
    i = _first_diff(pred, r1)
    checks["eq2"].record(i is None, tau=i, expected=None if i is None else pred[i],
                         observed=None if i is None else r1[i])

    r12 = correlate(t1, t2).values
    for tau in range(n):
        expected = -r1[(tau + half) % n]
        checks["prop1"].record(r12[tau] == expected, tau=tau, expected=expected,
                               observed=r12[tau])

    r2 = correlate(t2, t2).values
    i = _first_diff(r1, r2)
    checks["cor1"].record(i is None, tau=i, expected=None if i is None else r1[i],
                          observed=None if i is None else r2[i])

    for name, s in (("T1", t1), ("T2", t2)):
        lc = linear_complexity_bm(s)
        checks["lc_t1"].record(lc == n, sequence=name, expected=n, observed=lc)

    seqs = {e: se(e) for e in es}
    for e in es:
        s = seqs[e]
        obs = correlate(s, s).values
        pr = predict_se_autocorrelation(ctx, e)
        report.coverage.update(pr.case_labels)
        i = _first_diff(pr.values, obs)
        checks["thm1"].record(i is None, e=e, tau=i,
                              expected=None if i is None else pr.values[i],
                              observed=None if i is None else obs[i])
        lem = [lemma2_decompose(ctx, e, e, tau, r1) for tau in range(2 * n)]
        i = _first_diff(lem, obs)
        checks["lemma2"].record(i is None, e1=e, e2=e, tau=i,
                                expected=None if i is None else lem[i],
                                observed=None if i is None else obs[i])

    for e1, e2 in pairs:
        a = seqs.get(e1) or se(e1)
        b = seqs.get(e2) or se(e2)
        obs = correlate(a, b).values
        pr = predict_cross_correlation(ctx, e1, e2)
        report.coverage.update(pr.case_labels)
        i = _first_diff(pr.values, obs)
        checks["thm2"].record(i is None, e1=e1, e2=e2, tau=i,
                              expected=None if i is None else pr.values[i],
                              observed=None if i is None else obs[i])
        lem = [lemma2_decompose(ctx, e1, e2, tau, r1) for tau in range(2 * n)]
        i = _first_diff(lem, obs)
        checks["lemma2"].record(i is None, e1=e1, e2=e2, tau=i,
                                expected=None if i is None else lem[i],
                                observed=None if i is None else obs[i])

    lower = 2 * n - (n >> nu2(n))
    for e in es:
        try:
            rep = lc_report(ctx, e, seqs[e])
        except VerificationError as exc:
            checks["thm3"].record(False, e=e, expected=None, observed=str(exc))
            continue
        L = rep.L_closed_form
        checks["thm3"].record(lower <= L <= 2 * n - 1, e=e,
                              expected=[lower, 2 * n - 1], observed=L)

    zeros, ones = type1_counts(ctx.p, ctx.m)
    checks["balance"].record(
        (t1.zeros(), t1.ones()) == (zeros, ones), sequence="T1",
        expected=[zeros, ones], observed=[t1.zeros(), t1.ones()],
    )
    for e in es:
        s = seqs[e]
        checks["balance"].record(s.ones() == n and s.zeros() == n, e=e,
                                 expected=[n, n], observed=[s.zeros(), s.ones()])

    for name, s in (("T1", t1), ("T2", t2)):
        lp = least_period(s.bits)
        checks["period"].record(lp == n, sequence=name, expected=n, observed=lp)
    for e in es:
        lp = least_period(seqs[e].bits)
        checks["period"].record(lp == 2 * n, e=e, expected=2 * n, observed=lp)

    return report
