"""Exception hierarchy. Every domain failure is a ``RifError`` subclass named after its case."""


class RifError(ValueError):
    """Base class for all domain errors raised by rif."""


# core
class WrongSetSize(RifError):
    pass


class ElementOutOfRange(RifError):
    pass


class DuplicateSet(RifError):
    pass


class EmptyFamily(RifError):
    pass


class ZeroMinDegree(RifError):
    pass


class InvalidS(RifError):
    pass


class WrongProbeSize(RifError):
    pass


# scheme / bounds
class InvalidParameters(RifError):
    pass


class InvalidIndices(RifError):
    pass


class DimensionMismatch(RifError):
    pass


# construct
class NotPrimePower(RifError):
    pass


class NotRegular(RifError):
    pass


class NotIntersecting(RifError):
    pass


class LTooLarge(RifError):
    pass


class GroundSetExhausted(RifError):
    pass


class RatioMismatch(RifError):
    pass


class SizeCapExceeded(RifError):
    pass


class NoReplacementFound(RifError):
    pass


class ProfileInfeasible(RifError):
    pass


class RemovalNotPresent(RifError):
    pass


class PowerOfTwoK(RifError):
    pass


class KNotPowerOfTwo(RifError):
    pass


# search
class LimitExceeded(RifError):
    pass


class TimeLimitExceeded(RifError):
    """Raised when a search runs out of time; ``result`` holds the best-so-far."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


# io
class ParseError(RifError):
    pass


class InvariantViolation(RifError):
    pass
