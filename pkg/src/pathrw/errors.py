"""Exception hierarchy shared by every pathrw module."""

from __future__ import annotations


class PathError(Exception):
    """Base class for all errors raised by pathrw."""


class EndpointMismatch(PathError):
    pass


class UnknownAtom(PathError):
    pass


class LooseTerm(PathError):
    """Raised when endpoints are requested for an eliminator-form term."""


class PathSyntaxError(PathError):
    def __init__(self, message: str, text: str, offset: int):
        self.offset = offset
        self.line = text.count("\n", 0, offset) + 1
        self.column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class EnvironmentError_(PathError):
    """Malformed environment file or duplicate declaration."""


class IllFormedResult(PathError):
    pass


class BudgetExceeded(PathError):
    def __init__(self, trace):
        self.trace = trace
        super().__init__(f"normalization budget of {trace.budget_used} steps exhausted")


class PreconditionViolated(PathError):
    pass


class GenerationFailed(PathError):
    pass


class NotCirclePath(PathError):
    pass


class NotNatPath(PathError):
    pass


class NotCoprodPath(PathError):
    pass


class EmptyCode(PathError):
    pass
