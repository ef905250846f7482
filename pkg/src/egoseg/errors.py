"""Exception hierarchy shared across the toolkit."""


class EgosegError(Exception):
    """Base class for all egoseg errors."""


class DataError(EgosegError):
    """Invalid input data: bad shapes, missing files, malformed formats."""


class NumericError(EgosegError):
    """Numeric failure: non-finite loss, failed gradient check."""
