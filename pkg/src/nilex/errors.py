"""Exception hierarchy shared across the package."""


class NilexError(Exception):
    """Base class for every error raised by nilex."""


class FieldMismatchError(NilexError, TypeError):
    """Scalars from two different fields were combined."""


class DimensionMismatchError(NilexError, ValueError):
    pass


class BadPrimeError(NilexError, ValueError):
    """A prime divides a denominator, so reduction mod p is not faithful."""


class SingularMatrixError(NilexError, ValueError):
    pass


class NotInSpanError(NilexError, ValueError):
    pass


class NotACocycleError(NilexError, ValueError):
    pass


class NotCentralError(NilexError, ValueError):
    """A subspace expected to lie in the annihilator does not."""


class TrivialAnnihilatorError(NilexError, ValueError):
    pass


class MissingPlanError(NilexError, ValueError):
    """An operation needs a generator plan and none is available."""


class IsomorphismFailure(NilexError):
    """A candidate map is not an isomorphism; ``reason`` says why."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class UnknownAlgebraError(NilexError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown algebra"


class ExcludedParameterError(NilexError, ValueError):
    pass


class OffLocusError(NilexError, ValueError):
    """A parameter does not give a rational point of the constraint conic."""


class ParseError(NilexError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
