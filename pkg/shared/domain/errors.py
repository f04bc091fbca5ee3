"""Domain errors shared by every bounded context.

All validation failures are ``ValueError`` subclasses so callers that only
care about "bad input" can keep catching ``ValueError``. The messages are
part of the command-line contract and must not change.
"""


class InvalidOrderError(ValueError):
    """Raised for a non-positive order, index or degree."""

    def __init__(self, what: str, value):
        super().__init__(f"{what} must be a positive integer, got {value!r}")
        self.value = value


class NotPolynomialDivisorError(ValueError):
    """Raised when a divisor with fractional or negative multiplicities is expanded."""

    def __init__(self):
        super().__init__("not a polynomial divisor")


class InstanceTooLargeError(ValueError):
    """Raised when subset enumeration would exceed the configured bound."""

    def __init__(self, n: int, bound: int):
        super().__init__(f"instance too large: n={n} exceeds subset bound {bound}")
        self.n = n
        self.bound = bound


class RhoNotPolynomialError(ValueError):
    """Raised when the exponent generating function leaves a nonzero remainder."""

    def __init__(self):
        super().__init__("rho not a polynomial")


class DegenerateFamilyError(ValueError):
    """Raised when family parameters violate the closed-form hypotheses."""


class NotCharacteristicPolynomialError(ValueError):
    """Raised when a divisor cannot be a characteristic polynomial."""

    def __init__(self):
        super().__init__("not a characteristic polynomial")


class WeightSystemFormatError(ValueError):
    """Raised for malformed textual input; keeps the offending token."""

    def __init__(self, token: str, reason: str):
        super().__init__(f"invalid input '{token}': {reason}")
        self.token = token
        self.reason = reason


class CrossCheckError(RuntimeError):
    """Raised when two independent computations of the same invariant disagree."""

    def __init__(self, check: str, expected, actual):
        super().__init__(f"cross-check '{check}' failed: expected {expected}, got {actual}")
        self.check = check
        self.expected = expected
        self.actual = actual
