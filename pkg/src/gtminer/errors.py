"""Exception types raised across the package.

The CLI maps each family to an exit code: usage errors to 2, input/parse
errors to 3, analysis parameter errors to 4.
"""


class GTMinerError(Exception):
    """Base class for all package errors."""


class UsageError(GTMinerError):
    """Invalid invocation or filter specification."""


class InputError(GTMinerError):
    """A file could not be read or parsed."""


class ParseError(InputError):
    """Malformed transcript markup."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SchemaError(InputError):
    """CSV header does not satisfy the column contract."""


class ValidationError(InputError):
    """A CSV cell is empty or not a decimal number."""

    def __init__(self, message, row=None, column=None):
        self.row = row
        self.column = column
        if row is not None:
            message = f"row {row}, column {column!r}: {message}"
        super().__init__(message)


class ParameterError(GTMinerError):
    """An analysis was called with parameters outside its domain."""
