"""Normalized sets of naturals stored as disjoint closed intervals."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable, Iterator

from .arith import U128, NatArith
from .errors import InvalidInterval, NotEnoughElements

Interval = tuple[int, int]


@dataclass(frozen=True)
class IntervalSet:
    """Sorted, non-adjacent closed intervals ``(lo, hi)`` with ``1 <= lo <= hi``.

    Build through :func:`normalize` (or :meth:`from_pairs`); the constructor
    trusts its input.
    """

    intervals: tuple[Interval, ...] = ()

    @classmethod
    def from_pairs(cls, raw: Iterable[Interval]) -> "IntervalSet":
        return normalize(raw)

    @classmethod
    def from_elements(cls, xs: Iterable[int]) -> "IntervalSet":
        return normalize((x, x) for x in xs)

    def __contains__(self, x: int) -> bool:
        return contains(self, x)

    def __iter__(self) -> Iterator[int]:
        for lo, hi in self.intervals:
            yield from range(lo, hi + 1)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __repr__(self):
        return f"IntervalSet({list(self.intervals)!r})"

    @property
    def cardinality(self) -> int:
        return cardinality(self)

    @property
    def min(self) -> int:
        if not self.intervals:
            raise ValueError("empty IntervalSet has no minimum")
        return self.intervals[0][0]

    @property
    def max(self) -> int:
        if not self.intervals:
            raise ValueError("empty IntervalSet has no maximum")
        return self.intervals[-1][1]

    def find(self, x: int) -> Interval | None:
        """The interval holding ``x``, or None."""
        i = bisect.bisect_right(self.intervals, (x, float("inf"))) - 1
        if i >= 0 and self.intervals[i][1] >= x:
            return self.intervals[i]
        return None

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return normalize(self.intervals + other.intervals)

    def clip(self, hi: int) -> "IntervalSet":
        """Elements ``<= hi``."""
        out = []
        for a, b in self.intervals:
            if a > hi:
                break
            out.append((a, min(b, hi)))
        return IntervalSet(tuple(out))

    def complement_upto(self, limit: int) -> "IntervalSet":
        """Elements of ``1..limit`` not in this set."""
        out = []
        nxt = 1
        for a, b in self.intervals:
            if a > limit:
                break
            if a > nxt:
                out.append((nxt, a - 1))
            nxt = b + 1
        if nxt <= limit:
            out.append((nxt, limit))
        return IntervalSet(tuple(out))


EMPTY = IntervalSet()


def normalize(raw: Iterable[Interval]) -> IntervalSet:
    pairs = []
    for lo, hi in raw:
        lo, hi = int(lo), int(hi)
        if lo < 1 or lo > hi:
            raise InvalidInterval(f"bad interval ({lo}, {hi}): need 1 <= lo <= hi")
        pairs.append((lo, hi))
    pairs.sort()
    out: list[list[int]] = []
    for lo, hi in pairs:
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return IntervalSet(tuple((a, b) for a, b in out))


def contains(s: IntervalSet, x: int) -> bool:
    return s.find(x) is not None


def cardinality(s: IntervalSet) -> int:
    return sum(hi - lo + 1 for lo, hi in s.intervals)


def interval_sum_range(a: int, b: int, k: int, arith: NatArith = U128) -> Interval:
    """Range of sums of ``k`` distinct integers drawn from ``[a, b]``.

    Every value in ``[k*a + k(k-1)/2, k*b - k(k-1)/2]`` is attained and
    nothing else is: start from the ``k`` smallest elements and raise the
    largest movable one by one step at a time.
    """
    if k < 1:
        raise NotEnoughElements(f"k must be >= 1, got {k}")
    if b < a or b - a + 1 < k:
        raise NotEnoughElements(f"[{a}, {b}] has fewer than {k} elements")
    pairs = arith.named("pair_offset", lambda: arith.tri(k - 1))
    lo = arith.named("sum_lo", lambda: arith.add(arith.mul(k, a), pairs))
    hi = arith.named("sum_hi", lambda: arith.sub(arith.mul(k, b), pairs))
    return lo, hi
