"""Exhaustive finite sweeps of the inequalities behind the minimality of F.

Every sweep returns a VerificationReport. Profiles are enumerated as sorted
multisets since F is symmetric in its arguments. Counterexamples are
stored up to MAX_STORED_COUNTEREXAMPLES; the count is always exact.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import PreconditionError
from .formulas import JoinProfile, abcde, f_value, generic_slice_rank
from .series import ci_quotient_series, geometric, inclusion_exclusion_coeff, mul, p_k

MAX_STORED_COUNTEREXAMPLES = 100

IntOrRange = Union[int, Iterable[int]]


@dataclass
class VerificationReport:
    check: str
    params: dict
    instances: int = 0
    counterexample_count: int = 0
    counterexamples: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample_count == 0

    def record(self, ok: bool, params: dict, lhs, rhs):
        self.instances += 1
        if not ok:
            self.counterexample_count += 1
            if len(self.counterexamples) < MAX_STORED_COUNTEREXAMPLES:
                self.counterexamples.append({"params": params, "lhs": lhs, "rhs": rhs})

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "instances": self.instances,
            "counterexample_count": self.counterexample_count,
            "counterexamples": self.counterexamples,
            "elapsed_ms": self.elapsed_ms,
            "notes": self.notes,
            "passed": self.passed,
        }


def _values(x: IntOrRange) -> list[int]:
    if isinstance(x, int):
        return [x]
    return list(x)


def _describe(values: list[int]):
    if len(values) == 1:
        return values[0]
    return [min(values), max(values)]


class _timed:
    def __init__(self, report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = round((time.perf_counter() - self.t0) * 1000, 3)


def _require_d(ds, lo=5):
    for d in ds:
        if d < lo:
            raise PreconditionError(f"d must be at least {lo}, got {d}")


def verify_minimality(d: IntOrRange, n: IntOrRange) -> VerificationReport:
    """F(profile) > F(1, ..., 1) for every non-all-ones sorted profile of
    every length r < slrk. Strictness also certifies the minimizer is unique."""
    ds, ns = _values(d), _values(n)
    _require_d(ds)
    if any(x < 2 for x in ns):
        raise PreconditionError("n must be at least 2")
    report = VerificationReport("minimality", {"d": _describe(ds), "n": _describe(ns)})
    with _timed(report):
        for dd in ds:
            for nn in ns:
                for r in range(1, generic_slice_rank(dd, nn)):
                    base = f_value(JoinProfile(dd, nn, (1,) * r))
                    for degs in itertools.combinations_with_replacement(range(1, dd // 2 + 1), r):
                        if degs[-1] == 1:
                            continue
                        val = f_value(JoinProfile(dd, nn, degs))
                        report.record(val > base, {"d": dd, "n": nn, "degs": list(degs)}, val, base)
    return report


def theta_lhs(m: int, l_theta: int) -> int:
    """coeff_4 of P_inf^{l_theta} * P_1^{m - l_theta - 1}."""
    s = mul(geometric(l_theta, 4), p_k(1, 4) ** (m - l_theta - 1))
    return s.coeff(4)


def verify_theta_inequality(m_max: int) -> VerificationReport:
    """coeff_4(P_inf^{lt} P_1^{m-lt-1}) > lp + (lt - 1)(2m - 1) over the full
    box lt >= 1, lp >= 0, lp + lt < m <= m_max."""
    if m_max < 2:
        raise PreconditionError("m_max must be at least 2")
    report = VerificationReport("theta", {"m_max": m_max})
    with _timed(report):
        for m in range(2, m_max + 1):
            for lt in range(1, m):
                lhs = theta_lhs(m, lt)
                for lp in range(0, m - lt):
                    rhs = lp + (lt - 1) * (2 * m - 1)
                    report.record(lhs > rhs, {"m": m, "l_theta": lt, "l_theta_minus_1": lp}, lhs, rhs)
    return report


def verify_edcba(d: IntOrRange, n: IntOrRange) -> VerificationReport:
    """Signs of the differences of A: B_{l1,0} > 0 for 1 <= l1 < slrk,
    C >= 0 (l1 >= 2), D >= 0 (l1 >= 3), E >= 2 (l1 >= 4)."""
    ds, ns = _values(d), _values(n)
    _require_d(ds)
    report = VerificationReport("edcba", {"d": _describe(ds), "n": _describe(ns)})
    with _timed(report):
        for dd in ds:
            for nn in ns:
                s = generic_slice_rank(dd, nn)
                for l1 in range(1, nn):
                    for l2 in range(0, nn - l1):
                        rec = abcde(dd, nn, l1, l2)
                        where = {"d": dd, "n": nn, "l1": l1, "l2": l2}
                        if l2 == 0 and l1 < s:
                            report.record(rec.B > 0, {**where, "part": "B>0"}, rec.B, 0)
                        if rec.C is not None:
                            report.record(rec.C >= 0, {**where, "part": "C>=0"}, rec.C, 0)
                        if rec.D is not None:
                            report.record(rec.D >= 0, {**where, "part": "D>=0"}, rec.D, 0)
                        if rec.E is not None:
                            report.record(rec.E >= 2, {**where, "part": "E>=2"}, rec.E, 2)
    return report


def verify_chain(d: IntOrRange, n: IntOrRange) -> VerificationReport:
    """A_{l1,l2} > A_{l1+l2,0} for l1 >= 0, l2 >= 1, l1 + l2 < slrk."""
    ds, ns = _values(d), _values(n)
    _require_d(ds)
    report = VerificationReport("chain", {"d": _describe(ds), "n": _describe(ns)})
    with _timed(report):
        for dd in ds:
            for nn in ns:
                s = generic_slice_rank(dd, nn)
                for total in range(1, s):
                    target = abcde(dd, nn, total, 0).A
                    for l2 in range(1, total + 1):
                        val = abcde(dd, nn, total - l2, l2).A
                        report.record(val > target,
                                      {"d": dd, "n": nn, "l1": total - l2, "l2": l2},
                                      val, target)
    return report


def verify_theta_reduction(d: IntOrRange, n: IntOrRange) -> VerificationReport:
    """F(profile) > F(profile with one maximal entry theta lowered to theta-1)
    for every sorted profile with r < slrk and theta > 2."""
    ds, ns = _values(d), _values(n)
    _require_d(ds)
    report = VerificationReport("theta-reduction", {"d": _describe(ds), "n": _describe(ns)})
    with _timed(report):
        for dd in ds:
            for nn in ns:
                for r in range(1, generic_slice_rank(dd, nn)):
                    for degs in itertools.combinations_with_replacement(range(1, dd // 2 + 1), r):
                        if degs[-1] <= 2:
                            continue
                        lowered = degs[:-1] + (degs[-1] - 1,)
                        lhs = f_value(JoinProfile(dd, nn, degs))
                        rhs = f_value(JoinProfile(dd, nn, lowered))
                        report.record(lhs > rhs, {"d": dd, "n": nn, "degs": list(degs)}, lhs, rhs)
        if report.instances == 0:
            report.notes.append("no profile has an entry above 2; passed vacuously")
    return report


def verify_identity_lemma(n_max: int, e_max: int, deg_max: int, len_max: int) -> VerificationReport:
    """Series coefficient vs inclusion-exclusion sum for 1 <= n <= n_max,
    0 <= e <= e_max and every sorted degree list of length <= len_max with
    entries in [1, deg_max]."""
    if min(n_max, e_max, deg_max, len_max) < 1:
        raise PreconditionError("all bounds must be at least 1")
    report = VerificationReport(
        "identity", {"n_max": n_max, "e_max": e_max, "deg_max": deg_max, "len_max": len_max}
    )
    with _timed(report):
        for nn in range(1, n_max + 1):
            for k in range(len_max + 1):
                for degs in itertools.combinations_with_replacement(range(1, deg_max + 1), k):
                    s = ci_quotient_series(nn, degs, e_max)
                    for e in range(e_max + 1):
                        lhs = s.coeff(e)
                        rhs = inclusion_exclusion_coeff(nn, e, degs)
                        report.record(lhs == rhs, {"n": nn, "e": e, "degs": list(degs)}, lhs, rhs)
    return report
