"""Exception types shared across the package.

Two failure classes matter to callers: bad input (rejected up front) and
numerical non-convergence (a computation that started but could not certify
its result). The CLI maps them to exit codes 2 and 1 respectively.
"""


class InvalidInputError(ValueError):
    """Raised when arguments violate a documented precondition."""


class NonConvergenceError(RuntimeError):
    """Raised when an iteration or extrapolation fails its certificate."""
