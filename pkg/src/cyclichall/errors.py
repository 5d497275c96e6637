"""Exception types shared across the package.

ValidationError subclasses map to CLI exit code 2, BudgetExceeded to 3.
The remaining types signal internal inconsistencies: the theory guarantees
they never fire, so seeing one means a bug.
"""


class ValidationError(ValueError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, token=None, position=None):
        self.token = token
        self.position = position
        if token is not None:
            message = f"{message}: {token!r} at position {position}"
        super().__init__(message)


class NonExactDivision(ArithmeticError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class InputNotStronglyPeriodic(ValidationError):
    pass


class InputNotAperiodic(ValidationError):
    pass


class NotPyramidic(ValidationError):
    pass


class NoUniqueMaximum(RuntimeError):
    pass


class LeadingCoefficientNotOne(RuntimeError):
    pass


class NonTermination(RuntimeError):
    pass
