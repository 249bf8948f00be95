"""Exception taxonomy shared across the package.

The CLI maps these onto stable exit codes: usage errors exit 2,
numerical/check failures exit 1, I/O problems exit 3.
"""


class UsageError(ValueError):
    """Caller passed arguments outside an operation's contract."""


class DomainError(ValueError):
    """Input is syntactically fine but outside the supported parameter domain."""


class ExceptionalPointError(DomainError):
    """Non-Hermiticity angle at or beyond the exceptional point (|alpha| >= pi/2)."""


class DegenerateWeightError(ArithmeticError):
    """A state weight (trace) collapsed below the renormalization floor."""


class DegenerateContextError(DegenerateWeightError):
    """An entire measurement context carries vanishing total weight."""
