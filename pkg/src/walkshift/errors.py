from __future__ import annotations


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """A search or procedure ran out of its node/step budget.

    ``partial`` carries whatever trace had been produced so far (for the
    shifting procedures: the shift steps emitted before the budget ran out).
    """

    def __init__(self, message: str, partial=None, used: int | None = None):
        super().__init__(message)
        self.partial = partial
        self.used = used
