"""Exception types shared by all g0bound modules.

The CLI maps these onto exit codes: DomainError (and argument errors) exit 2,
every other numeric failure exits 1, verification failures exit 3.
"""


class G0BoundError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(G0BoundError):
    """An input lies outside the mathematical domain of the operation."""


class BracketError(G0BoundError):
    """A root bracket is invalid: the function has the same sign at both ends."""


class ConvergenceError(G0BoundError):
    """An iterative scheme exhausted its budget before reaching its target."""


class DivergenceError(G0BoundError):
    """An integral or sum shows no sign of converging (e.g. rho <= rho0)."""


class PoleZeroError(G0BoundError):
    """Evaluation hit an exact zero of the product (z = -z_n for some n)."""


class InsufficientZerosError(G0BoundError):
    """Fewer zeros could be located than were requested."""


class EvaluationOverflowError(G0BoundError):
    """A partial sum or integrand exceeded the floating-point range."""
