"""Exception types. The CLI maps each family to a fixed exit code."""


class InputSyntaxError(ValueError):
    """Malformed input text or an ill-formed object (exit code 1)."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """Well-formed input that violates an operation's hypotheses (exit code 2)."""


class SearchBudgetExceeded(RuntimeError):
    """An exact search hit its node budget before finishing (exit code 3)."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"lattice search exceeded node budget of {budget}")
