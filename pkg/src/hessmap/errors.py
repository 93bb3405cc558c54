"""Exception types shared across the package."""


class HessmapError(Exception):
    """Base class for every error raised by this package."""


class ArityMismatch(HessmapError, ValueError):
    pass


class ScalarMismatch(HessmapError, ValueError):
    pass


class OrderMismatch(HessmapError, ValueError):
    """Cyclotomic numbers of different orders were combined."""


class ParseError(HessmapError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DomainError(HessmapError, ValueError):
    pass


class SpecError(HessmapError, ValueError):
    pass


class BudgetExceeded(HessmapError, RuntimeError):
    pass


class ZeroInput(HessmapError, ValueError):
    pass


class SingularMatrix(HessmapError, ValueError):
    pass
