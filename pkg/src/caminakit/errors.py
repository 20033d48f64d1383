"""Exception hierarchy shared by every module."""


class CaminaError(Exception):
    """Base class for all errors raised by caminakit."""


class MalformedInput(CaminaError, ValueError):
    pass


class NotAGroup(CaminaError, ValueError):
    pass


class OrderCapExceeded(CaminaError, ValueError):
    pass


class InvalidSpec(CaminaError, ValueError):
    pass


class NotNormal(CaminaError, ValueError):
    pass


class InvalidQuery(CaminaError, ValueError):
    """A triple query violating 1 < M <= N < G."""


class InternalError(CaminaError, RuntimeError):
    """Something that must never happen for a valid group."""


class ComplementSearchFailed(InternalError):
    pass


class EigenspaceSplitFailure(InternalError):
    pass


class NonIntegralResult(InternalError):
    pass


class EquivalenceViolation(InternalError):
    """Checkers that must agree returned different verdicts."""


class TheoremViolation(InternalError):
    """A proven statement failed on a concrete group."""
