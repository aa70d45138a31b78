"""Exception hierarchy shared across the package."""


class RailknotError(Exception):
    """Base class for all railknot errors."""


class UsageError(RailknotError):
    """Bad input: malformed documents, mismatched variable tags, invalid flags."""


class ResourceLimitError(RailknotError):
    """A configured crossing bound was exceeded."""


class MoveNotApplicable(RailknotError):
    """A requested rewrite does not match its local pattern."""
