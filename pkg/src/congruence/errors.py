"""Exception hierarchy. Every error is a ValueError so callers can catch broadly."""
from __future__ import annotations


class CongruenceError(ValueError):
    """Base class for all library errors."""


class DenominatorNotInvertible(CongruenceError):
    pass


class ModulusMismatch(CongruenceError):
    pass


class NotCoprime(CongruenceError):
    pass


class IndexOutOfRange(CongruenceError):
    pass


class IndexUnsupported(CongruenceError):
    pass


class PrecisionUnsupported(CongruenceError):
    pass


class PreconditionViolated(CongruenceError):
    pass


class MethodUnsupported(CongruenceError):
    pass


class CapExceeded(CongruenceError):
    pass


class RangeExceeded(CongruenceError):
    pass


class NonUnit(CongruenceError):
    pass


class NotSquarefree(CongruenceError):
    pass


class FactorizationFailed(CongruenceError):
    pass


class UnknownClaim(CongruenceError):
    pass
