from __future__ import annotations

import enum
from dataclasses import dataclass

from .intervals import IntervalSet


class Method(str, enum.Enum):
    CLOSED_FORM = "closed-form"
    ITERATIVE_SIEVE = "iterative-sieve"


@dataclass(frozen=True)
class MaximalSetResult:
    """Q(n) together with the point past which every natural is a member."""

    n: int
    q: IntervalSet
    all_members_from: int
    method: Method

    def is_member(self, x: int) -> bool:
        return x >= 1 and x not in self.q
