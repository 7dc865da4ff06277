"""Exception types shared across the package."""


class TipDecompError(Exception):
    """Base class for errors raised by this package."""


class EmptyGraphError(TipDecompError, ValueError):
    """Raised when a graph is built from an empty edge list."""


class CountOverflowError(TipDecompError, OverflowError):
    """Raised when a butterfly count exceeds the safe integer range."""


class InvalidConfigError(TipDecompError, ValueError):
    """Raised for out-of-range run parameters (e.g. partitions < 1)."""


class InvalidPartitionError(TipDecompError, ValueError):
    """Raised when a range partition does not match the graph it is applied to."""


class GenError(TipDecompError, ValueError):
    """Raised for invalid synthetic-graph parameters."""


class ParseError(TipDecompError, ValueError):
    """Edge-list parse failure; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
