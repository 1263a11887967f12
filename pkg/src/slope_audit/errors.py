"""Exception hierarchy shared by every module."""


class AuditError(Exception):
    """Base class for all errors raised by slope_audit."""


class DomainError(AuditError, ValueError):
    """An operation was called outside its mathematical domain."""


class ParameterError(AuditError, ValueError):
    """Invalid family parameters or Fermat triple."""


class PreconditionError(AuditError, ValueError):
    """A caller-side precondition (e.g. a root bracket) does not hold."""


class ToleranceError(AuditError, RuntimeError):
    """A quantity could not be certified at the requested epsilon."""
