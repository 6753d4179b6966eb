"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument violates a documented precondition."""


class LimitError(RuntimeError):
    """Raised when an exhaustive routine is asked to exceed its size guard."""
