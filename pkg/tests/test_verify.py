import json

import pytest

from selfsum.arith import NatArith
from selfsum.errors import NatOverflowError
from selfsum.verify import VerificationReport, certificate_report, cross_validate, sweep_certificates


def test_cross_validate_n4():
    r = cross_validate(4, 50)
    assert r.oracle_checked and r.oracle_agrees
    assert r.first_divergence is None
    assert r.q_cardinality_ok and r.q_max_ok
    assert r.passed
    assert set(r.timings) == {"closed_form", "oracle"}


def test_cross_validate_n2():
    r = cross_validate(2, 20)
    assert r.method == "iterative-sieve"
    assert r.oracle_agrees
    assert not r.certificate_ok
    assert r.q_cardinality_ok is None
    assert r.passed


def test_cross_validate_n10():
    r = cross_validate(10, 100)
    assert r.oracle_agrees and r.q_max_ok


@pytest.mark.parametrize("n", [3, 5])
def test_margin_growth_is_stable(n):
    verdicts = {cross_validate(n, m).oracle_agrees for m in (0, 5, 40, None)}
    assert verdicts == {True}


def test_report_detects_divergence(monkeypatch):
    from selfsum import verify
    from selfsum.intervals import normalize
    from selfsum.result import MaximalSetResult, Method

    wrong = MaximalSetResult(4, normalize([(1, 9), (31, 35)]), 36, Method.CLOSED_FORM)
    monkeypatch.setattr(verify, "compute_q", lambda n: wrong)
    r = verify.cross_validate(4)
    assert r.oracle_agrees is False
    assert r.first_divergence == 36
    assert not r.passed


def test_sweep_small():
    (r3,) = list(sweep_certificates(3, 3))
    assert r3.certificate_ok and r3.run_length == 18 and r3.slack == 18 - 13
    assert r3.oracle_checked is False and r3.oracle_agrees is None
    (r40,) = list(sweep_certificates(40, 40))
    assert r40.run_length == 1245660


def test_sweep_monotone_flags():
    reports = list(sweep_certificates(3, 500))
    assert reports[0].slack_increasing is None
    assert all(r.slack_increasing for r in reports[1:])
    assert [r.n for r in reports] == list(range(3, 501))


def test_sweep_with_workers_keeps_order():
    serial = [r.run_length for r in sweep_certificates(3, 400)]
    parallel = [r.run_length for r in sweep_certificates(3, 400, workers=2, block=50)]
    assert serial == parallel


def test_sweep_rejects_bad_range():
    with pytest.raises(ValueError):
        list(sweep_certificates(2, 5))
    with pytest.raises(ValueError):
        list(sweep_certificates(9, 5))


def test_overflow_report_or_raise():
    narrow = NatArith(16)
    with pytest.raises(NatOverflowError) as info:
        certificate_report(40, arith=narrow)
    assert info.value.n == 40
    r = certificate_report(40, arith=narrow, on_overflow="report")
    assert r.error and not r.passed


def test_report_json_round_trip():
    r = cross_validate(3)
    back = VerificationReport.from_json(r.to_json())
    assert back == r
    assert json.loads(r.to_json())["passed"] is True
    big = next(sweep_certificates(10**5, 10**5))
    assert VerificationReport.from_json(big.to_json()) == big
