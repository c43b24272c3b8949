"""Exception hierarchy.

Input problems (bad syntax, unknown names, malformed files) derive from
:class:`InputError`; failed mathematical preconditions derive from
:class:`PreconditionError`. The CLI maps the two families to distinct exit
codes.
"""


class LogChernError(Exception):
    code = "error"


class InputError(LogChernError, ValueError):
    code = "input-error"


class ParseError(InputError):
    code = "parse-error"

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownVariableError(ParseError):
    code = "unknown-variable"

    def __init__(self, name, position=None):
        self.name = name
        super().__init__(f"unknown variable {name!r}", position)


class NegativeExponentError(ParseError):
    code = "negative-exponent"


class ContextMismatchError(InputError):
    code = "context-mismatch"


class NotHomogeneousError(InputError):
    code = "not-homogeneous"


class DimensionMismatchError(InputError):
    code = "dimension-mismatch"


class UnsupportedCountError(InputError):
    code = "unsupported-count"


class PreconditionError(LogChernError):
    code = "precondition-failure"


class NonUnitError(PreconditionError):
    code = "non-unit"


class NotZeroDimensionalError(PreconditionError):
    code = "not-zero-dimensional"


class NotSingularError(PreconditionError):
    code = "not-singular"


class NonIsolatedError(PreconditionError):
    code = "non-isolated"


class SingularitiesAtInfinityError(PreconditionError):
    code = "singularities-at-infinity"


class ChartFailureError(SingularitiesAtInfinityError):
    code = "chart-failure"


class NotRegularSequenceError(PreconditionError):
    code = "not-regular-sequence"


class DegenerateFieldError(PreconditionError):
    code = "degenerate-field"


class NotAZeroError(PreconditionError):
    code = "not-a-zero"


class NotLogarithmicError(PreconditionError):
    code = "not-logarithmic"


class IncompleteZerosError(PreconditionError):
    code = "incomplete-zero-list"


class PointOnSingularLocusError(PreconditionError):
    code = "point-on-singular-locus"


class DegenerateZeroError(PreconditionError):
    code = "degenerate-zero"


class MissingDataError(PreconditionError):
    code = "missing-data"


class RouteDisagreementError(PreconditionError):
    code = "route-disagreement"

    def __init__(self, message, values):
        self.values = dict(values)
        super().__init__(f"{message}: {self.values}")


class IntegralityError(LogChernError, ArithmeticError):
    """A quantity that must be an integer came out fractional."""

    code = "internal-error"
