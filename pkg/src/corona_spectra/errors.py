"""Exception hierarchy; each class carries the CLI exit code it maps to."""

from __future__ import annotations


class CoronaError(Exception):
    exit_code = 4


class GraphParseError(CoronaError, ValueError):
    exit_code = 2

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


class ResourceLimitError(CoronaError):
    exit_code = 3


class InvariantError(CoronaError):
    """An identity that must hold exactly did not; indicates a bug."""

    exit_code = 4


class NotDivisibleError(InvariantError, ArithmeticError):
    pass


class InterpolationError(InvariantError, ArithmeticError):
    pass


class NonRealRootsError(InvariantError):
    pass
