"""Domain errors with stable exit codes for the command line."""

from __future__ import annotations


class TwistcalcError(Exception):
    """Base class; ``code`` is the process exit status used by the CLI."""

    code = 1
    name = "ERROR"


class MissingEntryError(TwistcalcError, KeyError):
    code = 10
    name = "MISSING_ENTRY"

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return Exception.__str__(self)


class NegativeCoefficientError(TwistcalcError, ArithmeticError):
    code = 11
    name = "NEGATIVE_COEFFICIENT"


class DegreeExceededError(TwistcalcError, ArithmeticError):
    code = 12
    name = "DEGREE_EXCEEDED"


class MismatchError(TwistcalcError, ArithmeticError):
    code = 13
    name = "MISMATCH"


class DimensionMismatchError(TwistcalcError, ArithmeticError):
    code = 20
    name = "DIMENSION_MISMATCH"


class BudgetError(TwistcalcError, MemoryError):
    code = 21
    name = "BUDGET"


class CrosscheckError(TwistcalcError, AssertionError):
    code = 30
    name = "CROSSCHECK_FAILED"


ALL_ERRORS = (
    MissingEntryError,
    NegativeCoefficientError,
    DegreeExceededError,
    MismatchError,
    DimensionMismatchError,
    BudgetError,
    CrosscheckError,
)
