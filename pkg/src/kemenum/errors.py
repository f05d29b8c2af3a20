"""Exception hierarchy shared by the library and the command line."""


class KemenyError(Exception):
    """Base class for all errors raised by kemenum."""


class ProfileFormatError(KemenyError, ValueError):
    """Malformed profile input. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceededError(KemenyError):
    """An exponential search would exceed its configured size limit."""

    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds the configured limit of {limit}")


class InfeasibleWindowsError(KemenyError):
    """Position windows admit no assignment of candidates to positions."""
