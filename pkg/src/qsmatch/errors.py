"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class DegenerateError(ArithmeticError):
    """A computation hit a numerically degenerate configuration."""


class PostSelectionImpossible(DegenerateError):
    """The kept measurement branch has (numerically) zero probability."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step
