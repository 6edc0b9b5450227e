"""Text and JSON renderings of Q(n)."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ElementDumpTooLarge
from .intervals import IntervalSet, cardinality
from .result import MaximalSetResult

MAX_EXACT_JSON = 2**53 - 1
MAX_ELEMENT_DUMP = 10**6


def _enc(v: int):
    return v if v <= MAX_EXACT_JSON else str(v)


def _dec(v) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValueError(f"expected integer or decimal string, got {v!r}")
    if isinstance(v, str) and not v.isdigit():
        raise ValueError(f"not a decimal natural: {v!r}")
    return int(v)


@dataclass(frozen=True)
class OutputDocument:
    n: int
    method: str
    q_intervals: tuple[tuple[int, int], ...]
    q_cardinality: int
    all_members_from: int

    @classmethod
    def from_result(cls, r: MaximalSetResult) -> "OutputDocument":
        return cls(n=r.n, method=r.method.value, q_intervals=r.q.intervals,
                   q_cardinality=cardinality(r.q), all_members_from=r.all_members_from)

    def to_json(self) -> str:
        return json.dumps({
            "n": _enc(self.n),
            "method": self.method,
            "q_intervals": [[_enc(lo), _enc(hi)] for lo, hi in self.q_intervals],
            "q_cardinality": _enc(self.q_cardinality),
            "all_members_from": _enc(self.all_members_from),
        })

    @classmethod
    def from_json(cls, text: str) -> "OutputDocument":
        d = json.loads(text)
        doc = cls(
            n=_dec(d["n"]),
            method=str(d["method"]),
            q_intervals=tuple((_dec(lo), _dec(hi)) for lo, hi in d["q_intervals"]),
            q_cardinality=_dec(d["q_cardinality"]),
            all_members_from=_dec(d["all_members_from"]),
        )
        if sum(hi - lo + 1 for lo, hi in doc.q_intervals) != doc.q_cardinality:
            raise ValueError("q_cardinality does not match q_intervals")
        return doc


def _guard_dump(q: IntervalSet) -> None:
    size = cardinality(q)
    if size > MAX_ELEMENT_DUMP:
        raise ElementDumpTooLarge(
            f"|Q| = {size} exceeds {MAX_ELEMENT_DUMP} elements; use the intervals or json format")


def as_list(q: IntervalSet) -> str:
    _guard_dump(q)
    return " ".join(map(str, q))


def as_intervals(q: IntervalSet) -> str:
    return ", ".join(f"{lo}..{hi}" if lo != hi else str(lo) for lo, hi in q.intervals)


def as_bfile(q: IntervalSet) -> str:
    """OEIS b-file body: ``index value`` per line, indices from 1, no header."""
    _guard_dump(q)
    return "".join(f"{k} {v}\n" for k, v in enumerate(q, start=1))


def parse_bfile(text: str) -> list[int]:
    values = []
    for k, line in enumerate(text.splitlines(), start=1):
        idx, val = line.split()
        if int(idx) != k:
            raise ValueError(f"b-file index {idx} on line {k}")
        values.append(int(val))
    return values
