"""Exception hierarchy.

``ValidationError`` subclasses map to CLI exit code 2 and ``PrecisionError``
subclasses to exit code 3.
"""


class ThreeTermError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(ThreeTermError, ValueError):
    pass


class PrecisionError(ThreeTermError, ArithmeticError):
    pass


class NotPrime(ValidationError):
    pass


class ReducibleModulus(ValidationError):
    pass


class ZeroOmega(ValidationError):
    pass


class BadSpec(ValidationError):
    pass


class MixedFields(ValidationError):
    pass


class NonUnitInverse(ValidationError, ZeroDivisionError):
    pass


class NotEisenstein(ValidationError):
    def __init__(self, h, reason):
        super().__init__(f"coefficient c_{h}: {reason}")
        self.h = h
        self.reason = reason


class NotTwoIndex(ValidationError):
    pass


class ThreeIndexInput(NotTwoIndex):
    pass


class NotUniformizer(ValidationError):
    pass


class HypothesisFailed(ValidationError):
    def __init__(self, j, ell):
        super().__init__(f"min(v_p(phi_{j}({ell})), k) != {j}")
        self.j = j
        self.ell = ell


class ExcludedCase(ValidationError):
    pass


class CapExceeded(ValidationError):
    pass


class InsufficientPrecision(PrecisionError):
    def __init__(self, h=None, needed=None, msg=None):
        if msg is None:
            msg = f"coefficient c_{h} needs absolute precision {needed}"
        super().__init__(msg)
        self.h = h
        self.needed = needed


class NotEisensteinResult(PrecisionError):
    pass


class PrecisionExhausted(PrecisionError):
    def __init__(self, ell_reached, msg=None):
        super().__init__(msg or f"precision exhausted at ell = {ell_reached}")
        self.ell_reached = ell_reached


class PostconditionFailed(ThreeTermError, AssertionError):
    pass
