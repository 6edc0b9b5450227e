"""Exception types raised across the package."""


class BadN(ValueError):
    """The problem parameter n is below 2."""

    def __init__(self, n):
        super().__init__(f"n must be an integer >= 2, got {n!r}")
        self.n = n


class InvalidInterval(ValueError):
    pass


class NotEnoughElements(ValueError):
    pass


class NatOverflowError(OverflowError):
    """A checked natural-number computation left the representable range.

    ``field`` names the quantity being computed when the overflow happened.
    """

    def __init__(self, field, bits, value=None, n=None):
        msg = f"{field} overflows {bits}-bit unsigned arithmetic"
        if value is not None and value < 0:
            msg = f"{field} underflows below zero"
        if n is not None:
            msg += f" (n={n})"
        super().__init__(msg)
        self.field = field
        self.bits = bits
        self.n = n


class CertificateFailed(RuntimeError):
    """The closed-form certificate did not verify for this n."""

    def __init__(self, certificate):
        super().__init__(f"closed-form certificate does not verify for n={certificate.n}")
        self.certificate = certificate


class OracleCapExceeded(RuntimeError):
    def __init__(self, x, cap):
        super().__init__(f"sieve needs to decide x={x}, beyond the oracle cap {cap}")
        self.x = x
        self.cap = cap


# the fallback path surfaces the oracle's cap error unchanged
SieveCapExceeded = OracleCapExceeded


class ElementDumpTooLarge(ValueError):
    pass
