"""Exception hierarchy shared by every subpackage."""


class Susy8vError(Exception):
    """Base class for all errors raised by susy8v."""


class DivisionByZero(Susy8vError, ZeroDivisionError):
    pass


class InexactDivision(Susy8vError, ArithmeticError):
    """A polynomial division that must be exact left a remainder.

    Inside the determinant formulas this always indicates a transcription
    error, so it is never caught internally.
    """


class ZeroFunction(Susy8vError, ValueError):
    pass


class SizeBound(Susy8vError, ValueError):
    pass


class InvalidIndex(Susy8vError, ValueError):
    pass


class ParityError(InvalidIndex):
    pass


class MZeroRequired(InvalidIndex):
    pass


class NonPolynomial(Susy8vError, ArithmeticError):
    pass


class MissingDependency(Susy8vError, KeyError):
    pass


class ZeroDivisor(Susy8vError, ArithmeticError):
    pass


class Unreachable(Susy8vError, RuntimeError):
    pass


class FormatError(Susy8vError, ValueError):
    pass


class DegenerateState(Susy8vError, ArithmeticError):
    pass


class DomainError(Susy8vError, ValueError):
    pass


class NearSingularSample(Susy8vError, ArithmeticError):
    pass


class PrecisionExhausted(Susy8vError, ArithmeticError):
    pass


class ContractViolation(Susy8vError, AssertionError):
    """A self-check that must hold identically failed."""
