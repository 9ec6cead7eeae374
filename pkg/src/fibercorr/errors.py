"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all package errors."""


class InvalidCoverError(Error):
    """A cover failed validation (degree mismatch or broken surface relation)."""


class ActionRelationError(Error):
    """A coefficient module action does not satisfy the surface relation."""


class EigenspaceNotInvariantError(Error):
    """An operator eigenspace is not stable under the monodromy action.

    Reaching this indicates an equivariance bug upstream, not a user error.
    """


class ResourceLimitExceeded(Error):
    """A computation would exceed the configured size limit."""

    def __init__(self, what, size, limit):
        super().__init__(f"{what} size {size} exceeds limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class CoverFileError(Error):
    """Base class for cover-file problems; carries a 1-based position."""

    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(message)

    def __str__(self):
        where = ""
        if self.line is not None:
            where = f"line {self.line}"
            if self.col is not None:
                where += f", column {self.col}"
            where += ": "
        return where + self.message


class CoverFileSyntaxError(CoverFileError):
    """Malformed cover-file text."""


class CoverFileDegreeError(CoverFileError):
    """A permutation in the file does not fit the declared degree."""


class CoverFileRelationError(CoverFileError):
    """A generator block in the file violates the surface relation."""
