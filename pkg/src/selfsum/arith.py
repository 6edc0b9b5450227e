"""Checked unsigned arithmetic with a fixed bit width.

Python integers never wrap, so the width is enforced explicitly: every
intermediate is range-checked and :class:`NatOverflowError` is raised instead
of returning an out-of-range value.  The default width is 128 bits; narrower
instances exist so overflow handling can be exercised at small n.

Instances are immutable and may be shared between threads.
"""

from __future__ import annotations

from typing import Callable

from .errors import NatOverflowError


class NatArith:
    __slots__ = ("bits", "max")

    def __init__(self, bits: int = 128):
        if bits < 2:
            raise ValueError("bit width must be at least 2")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "max", (1 << bits) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("NatArith is immutable")

    def __repr__(self):
        return f"NatArith(bits={self.bits})"

    def check(self, v: int) -> int:
        if v < 0 or v > self.max:
            raise NatOverflowError("value", self.bits, v)
        return v

    def add(self, *terms: int) -> int:
        acc = 0
        for t in terms:
            acc = self.check(acc + self.check(t))
        return acc

    def sub(self, a: int, b: int) -> int:
        return self.check(self.check(a) - self.check(b))

    def mul(self, a: int, b: int) -> int:
        return self.check(self.check(a) * self.check(b))

    def tri(self, k: int) -> int:
        """k(k+1)/2 without forming k(k+1) when that alone would overflow."""
        k = self.check(k)
        if k & 1:
            return self.mul(k, (k + 1) >> 1)
        return self.mul(k >> 1, self.add(k, 1))

    def named(self, field: str, fn: Callable[[], int]) -> int:
        """Evaluate ``fn`` and re-label any overflow with ``field``."""
        try:
            return fn()
        except NatOverflowError as exc:
            raise NatOverflowError(field, self.bits) from exc


U128 = NatArith(128)
