"""Exception types shared across the package.

Every error raised on a user-facing path derives from CrelabError so the
CLI can map failures to a single machine-parsable category line.
"""


class CrelabError(Exception):
    """Base class for all package-specific errors."""

    category = "validation"


class ShapeError(CrelabError, ValueError):
    """Array dimensions incompatible with an operation's contract."""


class IngestionError(CrelabError, ValueError):
    """Input file violates the documented TSV schema."""


class TsvParseError(IngestionError):
    """Cell-level parse failure; carries the offending row and column."""

    def __init__(self, message, path=None, row=None, column=None):
        loc = []
        if path is not None:
            loc.append(str(path))
        if row is not None:
            loc.append(f"row {row}")
        if column is not None:
            loc.append(f"column {column}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.path = path
        self.row = row
        self.column = column

    category = "io"


class NumericalInstabilityError(CrelabError, RuntimeError):
    """Non-finite value encountered during optimization."""

    category = "numeric"


class NotFittedError(CrelabError, RuntimeError):
    """Model used before the required training phase completed."""
