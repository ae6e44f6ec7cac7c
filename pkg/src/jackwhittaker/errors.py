"""Exception types shared across the package."""


class JackWhittakerError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(JackWhittakerError, ZeroDivisionError):
    pass


class PoleAtPoint(DivisionByZero):
    """A rational function was evaluated at one of its poles."""


class DegenerateParameter(DivisionByZero):
    """A parameter value makes a pivot, norm or closed-form factor vanish."""


class ResonantParameter(DegenerateParameter):
    """The recursion prefactor for some partition vanishes.

    The offending partition is kept on ``partition``.
    """

    def __init__(self, message, partition=None):
        super().__init__(message)
        self.partition = partition


class VanishingDenominator(DivisionByZero):
    """A Nekrasov summand has a zero denominator; ``tuple`` names it."""

    def __init__(self, message, tuple_=None):
        super().__init__(message)
        self.tuple = tuple_


class ModeMismatch(JackWhittakerError, TypeError):
    """Scalars living in different parameter fields were combined."""


class RetryBudgetExhausted(JackWhittakerError):
    pass


class DegreeCapExceeded(JackWhittakerError, ValueError):
    pass


class NotOneBoxCover(JackWhittakerError, ValueError):
    pass


class NonSymmetricInput(JackWhittakerError, ValueError):
    pass
