"""Exception hierarchy shared by the kernel and the CLI."""


class QArithError(ValueError):
    """Base class for every domain error raised by qarith."""


class EvaluationError(QArithError):
    """An exact evaluation could not be carried out (pole, inexact root)."""


class DomainError(QArithError):
    """An operation was applied outside its domain (zero denominator, m = 0 dilation, ...)."""


class IdentityViolation(QArithError):
    """A self-verifying operation found its identity broken. Indicates a kernel bug."""
