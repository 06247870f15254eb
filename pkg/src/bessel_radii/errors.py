"""Exception hierarchy shared by every module."""


class BesselRadiiError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(BesselRadiiError, ValueError):
    """Parameters or arguments outside the region where a quantity is defined."""


class NonConvergence(BesselRadiiError, ArithmeticError):
    """A power series did not meet its stopping criterion within ``max_terms``."""


class PoleProximity(BesselRadiiError, ArithmeticError):
    """A quotient was requested too close to a zero of its denominator."""


class ScanExhausted(BesselRadiiError, RuntimeError):
    """The zero scan reached its safety cap before finding enough sign changes."""


class BracketFailure(BesselRadiiError, RuntimeError):
    """Both ends of a root bracket carry the same sign."""


class LengthMismatch(BesselRadiiError, ValueError):
    pass


class LengthError(BesselRadiiError, ValueError):
    pass


class IllConditioned(BesselRadiiError, ArithmeticError):
    """Polynomial data too badly scaled for a trustworthy root count."""
