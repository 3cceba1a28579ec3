"""Exception hierarchy shared by every module."""


class RigidCIError(Exception):
    """Base class for all errors raised by this package."""


class InvalidTypeError(RigidCIError, ValueError):
    """A (series, rank) pair or marking outside the supported Dynkin types."""


class DomainError(RigidCIError, ValueError):
    """An operation was called outside its domain (bad weight, zero vector, ...)."""


class HypothesisError(DomainError):
    """A mathematical hypothesis of a formula fails; the message names it."""


class DataIntegrityError(RigidCIError, RuntimeError):
    """The embedded tables are inconsistent or a required row is missing."""


class InternalInvariantError(RigidCIError, RuntimeError):
    """A construction produced a result that violates its own invariant."""


class ParseError(RigidCIError, ValueError):
    """Malformed textual space or divisor description."""


class NotSupportedError(RigidCIError, NotImplementedError):
    """A marking or space outside the supported scope."""
