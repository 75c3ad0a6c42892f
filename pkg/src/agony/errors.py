"""Exception types shared across the package."""


class ContractError(ValueError):
    """An operation was called with inputs violating its preconditions."""


class InvariantViolation(RuntimeError):
    """Internal bookkeeping disagrees with a from-scratch recomputation."""


class EdgeListParseError(ValueError):
    """A line of an edge-list file could not be parsed."""

    def __init__(self, lineno: int, line: str, reason: str):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")
