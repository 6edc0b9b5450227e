"""Finite complement Q(n) of the maximal set of naturals closed under n-distinct sums.

A natural x belongs to P(n) iff it is the sum of n pairwise-distinct naturals
that are all in P(n) or all outside it.  ``compute_q`` returns the finite
complement Q(n) in constant arithmetic for n >= 3 and by sieving for n = 2.
"""

from .arith import U128, NatArith
from .closed_form import (
    ClosedFormCertificate,
    build_certificate,
    closed_form_q,
    compute_q,
    first_member,
    verify_certificate,
)
from .errors import (
    BadN,
    CertificateFailed,
    ElementDumpTooLarge,
    InvalidInterval,
    NatOverflowError,
    NotEnoughElements,
    OracleCapExceeded,
    SieveCapExceeded,
)
from .intervals import EMPTY, IntervalSet, cardinality, contains, interval_sum_range, normalize
from .oracle import SieveState, decide_next, exists_n_distinct_sum, sieve_to_limit, sieve_until_run
from .result import MaximalSetResult, Method
from .verify import VerificationReport, cross_validate, sweep_certificates

__all__ = [
    "U128", "NatArith",
    "ClosedFormCertificate", "build_certificate", "closed_form_q", "compute_q",
    "first_member", "verify_certificate",
    "BadN", "CertificateFailed", "ElementDumpTooLarge", "InvalidInterval",
    "NatOverflowError", "NotEnoughElements", "OracleCapExceeded", "SieveCapExceeded",
    "EMPTY", "IntervalSet", "cardinality", "contains", "interval_sum_range", "normalize",
    "SieveState", "decide_next", "exists_n_distinct_sum", "sieve_to_limit", "sieve_until_run",
    "MaximalSetResult", "Method",
    "VerificationReport", "cross_validate", "sweep_certificates",
]
