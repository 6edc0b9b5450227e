"""Brute-force membership sieve built directly on the defining rule.

x is a member iff it is the sum of n pairwise-distinct naturals that are
either all members or all non-members.  Every summand of such a sum is
smaller than x, so deciding 1, 2, 3, ... in order is well defined.  Each
decision runs a fresh subset-sum DP over the two pools decided so far; no
state is reused between steps, which keeps the oracle easy to audit at the
cost of speed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .closed_form import check_n
from .errors import OracleCapExceeded
from .intervals import IntervalSet
from .result import MaximalSetResult, Method

DEFAULT_ORACLE_CAP = 10**7
CAP_ENV = "SELFSUM_ORACLE_CAP"


def oracle_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CAP


def exists_n_distinct_sum(s: IntervalSet, n: int, x: int, cap: int | None = None) -> bool:
    """True iff some ``n`` pairwise-distinct elements of ``s`` sum to ``x``.

    ``reach[c]`` is a bitset of the sums attainable with exactly ``c``
    distinct elements among those scanned so far, truncated above ``x``.
    """
    cap = oracle_cap() if cap is None else cap
    if x > cap:
        raise OracleCapExceeded(x, cap)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if x < 1:
        return False
    mask = (1 << (x + 1)) - 1
    reach = [1] + [0] * n
    seen = 0
    for lo, hi in s.intervals:
        if lo > x:
            break
        for e in range(lo, min(hi, x) + 1):
            seen += 1
            for c in range(min(seen, n), 0, -1):
                if reach[c - 1]:
                    reach[c] |= (reach[c - 1] << e) & mask
            if (reach[n] >> x) & 1:
                return True
    return False


def _append(runs: list[list[int]], x: int) -> None:
    if runs and runs[-1][1] == x - 1:
        runs[-1][1] = x
    else:
        runs.append([x, x])


@dataclass
class SieveState:
    """Membership of ``1..frontier`` for one n.  Owned by a single sieve."""

    n: int
    cap: int = field(default_factory=oracle_cap)
    frontier: int = 0
    z: int | None = None
    first_members: list[int] = field(default_factory=list)
    run_start: int = 0
    run_length: int = 0
    _flags: np.ndarray = field(default_factory=lambda: np.zeros(64, dtype=bool), repr=False)
    _member_runs: list[list[int]] = field(default_factory=list, repr=False)
    _non_member_runs: list[list[int]] = field(default_factory=list, repr=False)

    @property
    def trailing_run(self) -> tuple[int, int]:
        """(start, length) of the maximal member run ending at the frontier."""
        return self.run_start, self.run_length

    @property
    def membership(self) -> np.ndarray:
        """Boolean view indexed by x; index 0 is unused."""
        return self._flags[: self.frontier + 1]

    def is_member(self, x: int) -> bool:
        if not 1 <= x <= self.frontier:
            raise IndexError(f"x={x} is not decided (frontier {self.frontier})")
        return bool(self._flags[x])

    def members(self) -> IntervalSet:
        return IntervalSet(tuple((a, b) for a, b in self._member_runs))

    def non_members(self) -> IntervalSet:
        return IntervalSet(tuple((a, b) for a, b in self._non_member_runs))

    def rule(self, x: int) -> bool:
        """Evaluate the defining rule for ``x`` against the recorded membership of 1..x-1."""
        below = x - 1
        return (exists_n_distinct_sum(self.members().clip(below), self.n, x, self.cap)
                or exists_n_distinct_sum(self.non_members().clip(below), self.n, x, self.cap))

    def _record(self, x: int, member: bool) -> None:
        if x >= len(self._flags):
            grown = np.zeros(2 * len(self._flags), dtype=bool)
            grown[: len(self._flags)] = self._flags
            self._flags = grown
        self._flags[x] = member
        self.frontier = x
        if member:
            _append(self._member_runs, x)
            if self.run_length == 0:
                self.run_start = x
            self.run_length += 1
            if len(self.first_members) < self.n - 1:
                self.first_members.append(x)
                if len(self.first_members) == self.n - 1:
                    self.z = sum(self.first_members)
        else:
            _append(self._non_member_runs, x)
            self.run_start, self.run_length = 0, 0


def decide_next(state: SieveState) -> SieveState:
    x = state.frontier + 1
    if x > state.cap:
        raise OracleCapExceeded(x, state.cap)
    state._record(x, state.rule(x))
    return state


def sieve_to_limit(n: int, limit: int, cap: int | None = None) -> SieveState:
    n = check_n(n)
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    state = SieveState(n) if cap is None else SieveState(n, cap=cap)
    if limit > state.cap:
        raise OracleCapExceeded(limit, state.cap)
    while state.frontier < limit:
        decide_next(state)
    return state


def run_is_self_extending(state: SieveState) -> bool:
    """Whether the trailing run already forces every larger natural to be a member.

    Needs ``z`` consecutive members all larger than the first n-1 members,
    so that adding those n-1 members to each run element gives distinct
    summands and shifts the run forward by ``z`` indefinitely.
    """
    if state.z is None or state.run_length == 0:
        return False
    start = max(state.run_start, state.first_members[-1] + 1)
    return state.frontier - start + 1 >= state.z


def sieve_until_run(n: int, cap: int | None = None) -> MaximalSetResult:
    n = check_n(n)
    state = SieveState(n) if cap is None else SieveState(n, cap=cap)
    while not run_is_self_extending(state):
        decide_next(state)
    start = state.run_start
    return MaximalSetResult(
        n=n,
        q=state.non_members().clip(start - 1),
        all_members_from=start,
        method=Method.ITERATIVE_SIEVE,
    )
