"""Cross-validation of the closed form against the sieve, and certificate sweeps."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator

import numpy as np

from .arith import U128, NatArith
from .closed_form import _result_from_certificate, build_certificate, check_n, compute_q, verify_certificate
from .errors import NatOverflowError
from .intervals import cardinality
from .oracle import sieve_to_limit
from .result import MaximalSetResult, Method


@dataclass
class VerificationReport:
    """Outcome of the checks run for one n.

    ``None`` in a boolean field means the check did not apply or was not run:
    the |Q| and max(Q) formulas hold only for the closed-form shape, and
    ``oracle_agrees`` is only meaningful when ``oracle_checked`` is true.
    """

    n: int
    method: str | None = None
    certificate_ok: bool = False
    q_cardinality_ok: bool | None = None
    q_max_ok: bool | None = None
    oracle_checked: bool = False
    oracle_agrees: bool | None = None
    first_divergence: int | None = None
    run_length: int | None = None
    slack: int | None = None
    slack_increasing: bool | None = None
    timings: dict[str, float] = field(default_factory=dict)
    error: str | None = None

    @property
    def passed(self) -> bool:
        if self.error is not None:
            return False
        # n = 2 is the one case the closed form is not expected to cover
        if not self.certificate_ok and self.n >= 3:
            return False
        if self.q_cardinality_ok is False or self.q_max_ok is False:
            return False
        if self.slack_increasing is False:
            return False
        if self.oracle_checked and not self.oracle_agrees:
            return False
        return True

    def to_json(self) -> str:
        d = asdict(self)
        d["passed"] = self.passed
        for k in ("run_length", "slack"):
            if d[k] is not None and abs(d[k]) > 2**53 - 1:
                d[k] = str(d[k])
        return json.dumps(d)

    @classmethod
    def from_json(cls, line: str) -> "VerificationReport":
        d = json.loads(line)
        d.pop("passed", None)
        for k in ("run_length", "slack"):
            if isinstance(d.get(k), str):
                d[k] = int(d[k])
        return cls(**d)


def q_cardinality_formula(n: int) -> int:
    return n * n - 1


def q_max_formula(n: int) -> int:
    return n * (n - 1) * (n + 2) // 2


def _closed_form_checks(report: VerificationReport, result: MaximalSetResult) -> None:
    if result.method is Method.CLOSED_FORM:
        report.q_cardinality_ok = cardinality(result.q) == q_cardinality_formula(report.n)
        report.q_max_ok = result.q.max == q_max_formula(report.n)


def membership_mismatch(result: MaximalSetResult, flags: np.ndarray) -> int | None:
    """Smallest x where ``result`` and a sieve membership array disagree."""
    expected = np.ones(len(flags), dtype=bool)
    expected[0] = False
    limit = len(flags) - 1
    for lo, hi in result.q.intervals:
        if lo > limit:
            break
        expected[lo : min(hi, limit) + 1] = False
    diff = np.flatnonzero(expected[1:] != flags[1:])
    return int(diff[0]) + 1 if len(diff) else None


def cross_validate(n: int, margin: int | None = None, cap: int | None = None) -> VerificationReport:
    """Compare compute_q(n) with a fresh sieve up to all_members_from + margin.

    ``margin`` defaults to z, one full extension period past the run onset.
    """
    n = check_n(n)
    report = VerificationReport(n=n)
    t0 = time.perf_counter()
    result = compute_q(n)
    report.timings["closed_form"] = time.perf_counter() - t0
    report.method = result.method.value

    cert = build_certificate(n)
    report.certificate_ok = verify_certificate(cert)
    report.run_length = cert.run_length
    report.slack = cert.slack
    _closed_form_checks(report, result)

    limit = result.all_members_from + (cert.z if margin is None else margin)
    t0 = time.perf_counter()
    state = sieve_to_limit(n, limit, cap=cap)
    report.timings["oracle"] = time.perf_counter() - t0

    report.oracle_checked = True
    report.first_divergence = membership_mismatch(result, state.membership)
    report.oracle_agrees = report.first_divergence is None
    return report


def certificate_report(n: int, arith: NatArith = U128, on_overflow: str = "raise") -> VerificationReport:
    report = VerificationReport(n=n)
    t0 = time.perf_counter()
    try:
        cert = build_certificate(n, arith)
    except NatOverflowError as exc:
        if on_overflow == "raise":
            raise
        report.error = str(exc)
        return report
    report.certificate_ok = verify_certificate(cert)
    report.run_length = cert.run_length
    report.slack = cert.slack
    if report.certificate_ok and n >= 3:
        result = _result_from_certificate(cert)
        report.method = result.method.value
        _closed_form_checks(report, result)
    report.timings["closed_form"] = time.perf_counter() - t0
    return report


def _report_block(args) -> list[VerificationReport]:
    lo, hi, on_overflow = args
    return [certificate_report(n, on_overflow=on_overflow) for n in range(lo, hi + 1)]


def sweep_certificates(n_min: int, n_max: int, *, workers: int = 1, block: int = 5000,
                       on_overflow: str = "raise") -> Iterator[VerificationReport]:
    """Yield one certificate report per n in ``[n_min, n_max]``, in order.

    Reports are streamed.  ``slack_increasing`` records whether
    run_length - z grew relative to the previous n of the sweep.  With
    ``on_overflow="report"`` an overflowing n yields a failed report instead
    of raising.
    """
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min}, {n_max}")
    blocks = [(lo, min(lo + block - 1, n_max), on_overflow) for lo in range(n_min, n_max + 1, block)]
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        chunks = pool.map(_report_block, blocks)
    else:
        pool = None
        chunks = map(_report_block, blocks)
    prev = None
    try:
        for chunk in chunks:
            for report in chunk:
                if report.slack is not None and prev is not None:
                    report.slack_increasing = report.slack > prev
                prev = report.slack
                yield report
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
