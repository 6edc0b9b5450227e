import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import has_n_subset_sum, naive_sieve
from selfsum.closed_form import build_certificate, compute_q
from selfsum.errors import OracleCapExceeded
from selfsum.intervals import IntervalSet, normalize
from selfsum.oracle import (
    CAP_ENV,
    SieveState,
    decide_next,
    exists_n_distinct_sum,
    oracle_cap,
    sieve_to_limit,
    sieve_until_run,
)
from selfsum.result import Method


def test_exists_examples():
    assert exists_n_distinct_sum(normalize([(1, 9)]), 4, 10)
    assert not exists_n_distinct_sum(normalize([(1, 9)]), 4, 31)
    assert exists_n_distinct_sum(normalize([(1, 9), (31, 36)]), 4, 37)
    assert exists_n_distinct_sum(normalize([(1, 2)]), 2, 3)


def test_exists_requires_distinct_elements():
    # 2 + 2 would hit 4, but repeats are not allowed
    assert not exists_n_distinct_sum(normalize([(2, 2)]), 2, 4)
    assert not exists_n_distinct_sum(IntervalSet(), 1, 1)


def test_exists_cap():
    with pytest.raises(OracleCapExceeded):
        exists_n_distinct_sum(normalize([(1, 5)]), 2, 101, cap=100)


@settings(max_examples=300, deadline=None)
@given(st.sets(st.integers(1, 20), max_size=14), st.integers(1, 4), st.integers(1, 60))
def test_exists_matches_enumeration(pool, n, x):
    s = IntervalSet.from_elements(pool)
    assert exists_n_distinct_sum(s, n, x) == has_n_subset_sum(pool, n, x)


def test_decide_next_n2():
    state = SieveState(2)
    decide_next(state)
    decide_next(state)
    assert not state.is_member(1) and not state.is_member(2)
    decide_next(state)
    assert state.is_member(3)
    decide_next(state)
    assert not state.is_member(4)
    assert state.z == 3


def test_decide_next_n4_below_first_member():
    state = sieve_to_limit(4, 9)
    assert not state.is_member(9)
    assert not state.members()


def test_sieve_to_limit_n4():
    s = sieve_to_limit(4, 40)
    assert s.members().intervals == ((10, 30), (37, 40))
    assert s.non_members().intervals == ((1, 9), (31, 36))
    assert s.trailing_run == (37, 4)
    assert s.z == 33


def test_sieve_to_limit_n2():
    s = sieve_to_limit(2, 15)
    assert list(s.non_members()) == [1, 2, 4, 7, 10]
    assert list(s.members()) == [3, 5, 6, 8, 9, 11, 12, 13, 14, 15]


def test_sieve_to_limit_n3():
    s = sieve_to_limit(3, 20)
    assert s.non_members().intervals == ((1, 5), (13, 15))


@pytest.mark.parametrize("n, limit", [(2, 30), (3, 40), (4, 45)])
def test_sieve_matches_naive_enumeration(n, limit):
    members, non = naive_sieve(n, limit)
    s = sieve_to_limit(n, limit)
    assert set(s.members()) == members
    assert set(s.non_members()) == non


@pytest.mark.parametrize("n", range(2, 9))
def test_one_and_two_never_members(n):
    s = sieve_to_limit(n, 2)
    assert not s.is_member(1) and not s.is_member(2)


def test_sieve_is_deterministic():
    a, b = sieve_to_limit(5, 120), sieve_to_limit(5, 120)
    assert (a.membership == b.membership).all()
    assert a.members() == b.members()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_redeciding_against_final_record(n):
    s = sieve_to_limit(n, compute_q(n).all_members_from + 10)
    for x in range(1, s.frontier + 1):
        assert s.rule(x) == s.is_member(x)


def test_sieve_until_run_examples():
    r2 = sieve_until_run(2)
    assert list(r2.q) == [1, 2, 4, 7, 10] and r2.all_members_from == 11
    assert r2.method is Method.ITERATIVE_SIEVE
    r3 = sieve_until_run(3)
    assert r3.q.intervals == ((1, 5), (13, 15)) and r3.all_members_from == 16
    r4 = sieve_until_run(4)
    assert r4.q.intervals == ((1, 9), (31, 36)) and r4.all_members_from == 37


@pytest.mark.parametrize("n", range(2, 9))
def test_run_extends_past_onset(n):
    r = sieve_until_run(n)
    z = build_certificate(n).z
    s = sieve_to_limit(n, r.all_members_from + z)
    assert all(s.is_member(x) for x in range(r.all_members_from, r.all_members_from + z + 1))
    assert not s.is_member(r.all_members_from - 1)


def test_sieve_until_run_hits_cap():
    with pytest.raises(OracleCapExceeded):
        sieve_until_run(4, cap=30)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv(CAP_ENV, "25")
    assert oracle_cap() == 25
    with pytest.raises(OracleCapExceeded):
        sieve_to_limit(3, 26)
    monkeypatch.delenv(CAP_ENV)
    assert oracle_cap() == 10**7


def test_is_member_outside_frontier():
    s = sieve_to_limit(3, 5)
    with pytest.raises(IndexError):
        s.is_member(6)
