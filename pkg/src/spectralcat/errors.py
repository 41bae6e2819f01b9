"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An operation would build more nondegenerate simplices than allowed."""


class TruncationError(ValueError):
    """A spectrum level beyond the truncation was requested."""


class StageExceededError(RuntimeError):
    """A pushout-category composite needs more filtration stages than computed."""


class FormatError(ValueError):
    """Malformed interchange text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
