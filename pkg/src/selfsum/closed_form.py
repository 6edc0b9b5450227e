"""Constant-operation construction of Q(n).

For n >= 2 the members start at the triangular number X1 = n(n+1)/2.  Sums of
n distinct naturals below X1 fill ``[X1, U]`` with ``U = (n-1) X1``.  The block
``[U+1, U1-1]`` that follows cannot be reached by either side, and from
``U1`` onwards two runs of members overlap:

* mixed non-member sums: n-1 values from ``[1, X1-1]`` plus one gap value,
  covering ``[U1, T_high]``;
* member sums: n distinct values from ``[X1, U]``, covering ``[U3, U4]``.

If the runs merge and the merged run is at least ``z`` long (the sum of the
first n-1 members), every later natural is a member, which gives
``Q(n) = [1, X1-1] | [U+1, U1-1]``.  The certificate below records every
landmark so the claim can be checked rather than assumed.
"""

from __future__ import annotations

import operator
from dataclasses import asdict, dataclass

from .arith import U128, NatArith
from .errors import BadN, CertificateFailed, NatOverflowError
from .intervals import normalize
from .result import MaximalSetResult, Method


def check_n(n) -> int:
    if isinstance(n, bool):
        raise BadN(n)
    try:
        n = operator.index(n)
    except TypeError:
        raise BadN(n) from None
    if n < 2:
        raise BadN(n)
    return n


def first_member(n: int, arith: NatArith = U128) -> int:
    n = check_n(n)
    return arith.named("X1", lambda: arith.tri(n))


@dataclass(frozen=True)
class ClosedFormCertificate:
    n: int
    X1: int
    z: int
    U: int
    U1: int
    U2: int
    T_high: int
    U3: int
    U4: int
    run_length: int

    @property
    def runs_merge(self) -> bool:
        return self.U3 <= self.T_high + 1 and self.U4 >= self.T_high

    @property
    def long_enough(self) -> bool:
        return self.run_length >= self.z

    @property
    def slack(self) -> int:
        """How far the merged run overshoots the required length (may be negative)."""
        return self.run_length - self.z

    def as_dict(self) -> dict:
        return asdict(self)


def build_certificate(n: int, arith: NatArith = U128) -> ClosedFormCertificate:
    """Compute every landmark for ``n``; no verdict is taken here.

    A :class:`~selfsum.errors.NatOverflowError` names the first field whose
    value (or an intermediate of it) leaves ``arith``'s range.
    """
    n = check_n(n)
    try:
        return _landmarks(n, arith)
    except NatOverflowError as exc:
        raise NatOverflowError(exc.field, exc.bits, n=n) from exc


def _landmarks(n: int, a: NatArith) -> ClosedFormCertificate:
    pairs = a.named("n(n-1)/2", lambda: a.tri(n - 1))
    X1 = a.named("X1", lambda: a.tri(n))
    U = a.named("U", lambda: a.mul(n - 1, X1))
    z = a.named("z", lambda: a.add(U, a.tri(n - 2)))
    U1 = a.named("U1", lambda: a.add(pairs, U, 1))
    U2 = a.named("U2", lambda: a.sub(a.add(pairs, U1), 1))
    T_high = a.named("T_high", lambda: a.sub(a.add(U, U1), a.add(pairs, 1)))
    U3 = a.named("U3", lambda: a.add(a.mul(n, X1), pairs))
    U4 = a.named("U4", lambda: a.sub(a.mul(n, U), pairs))
    run_length = a.named("run_length", lambda: a.sub(a.add(U4, 1), U1))
    return ClosedFormCertificate(n=n, X1=X1, z=z, U=U, U1=U1, U2=U2, T_high=T_high,
                                 U3=U3, U4=U4, run_length=run_length)


def verify_certificate(c: ClosedFormCertificate) -> bool:
    return c.runs_merge and c.long_enough


def closed_form_q(n: int, arith: NatArith = U128) -> MaximalSetResult:
    c = build_certificate(n, arith)
    if n < 3 or not verify_certificate(c):
        raise CertificateFailed(c)
    return _result_from_certificate(c)


def _result_from_certificate(c: ClosedFormCertificate) -> MaximalSetResult:
    q = normalize([(1, c.X1 - 1), (c.U + 1, c.U1 - 1)])
    return MaximalSetResult(n=c.n, q=q, all_members_from=c.U1, method=Method.CLOSED_FORM)


def compute_q(n: int, arith: NatArith = U128, *, _verify=verify_certificate) -> MaximalSetResult:
    """Q(n) by the closed form, falling back to the sieve when the certificate fails.

    The fallback covers n = 2; for n >= 3 it is not expected to trigger.
    ``_verify`` exists for fault injection in tests.
    """
    c = build_certificate(n, arith)
    if n >= 3 and _verify(c):
        return _result_from_certificate(c)
    from .oracle import sieve_until_run

    return sieve_until_run(n)
