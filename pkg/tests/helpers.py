"""Independent reference implementations used only by the tests.

Nothing here imports the package's DP or closed form: membership is decided
by enumerating every n-subset with itertools.
"""

import json
from itertools import combinations
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


def golden():
    raw = json.loads((FIXTURES / "golden_q.json").read_text())
    return {int(k): v for k, v in raw.items()}


def has_n_subset_sum(pool, n, x):
    return any(sum(c) == x for c in combinations(sorted(pool), n))


def naive_sieve(n, limit):
    """(members, non_members) of 1..limit by exhaustive n-subset enumeration."""
    members, non = set(), set()
    for x in range(1, limit + 1):
        if has_n_subset_sum(members, n, x) or has_n_subset_sum(non, n, x):
            members.add(x)
        else:
            non.add(x)
    return members, non


def k_subset_sums(a, b, k):
    return {sum(c) for c in combinations(range(a, b + 1), k)}


def expand(intervals):
    return {x for lo, hi in intervals for x in range(lo, hi + 1)}
