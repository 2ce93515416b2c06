"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """An argument violates an operation's precondition."""


class CapacityError(RuntimeError):
    """The instance exceeds a declared exact-computation bound."""


class HgFormatError(InvalidParameterError):
    """A hypergraph file failed to parse; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
