"""Exception types shared across the package."""


class StripParseError(ValueError):
    """Strip description text could not be parsed."""


class InvalidStripError(ValueError):
    """Shape sequence violates the structural rules of a regular strip."""


class NonKekuleanError(ValueError):
    """Strip admits no perfect matching; no DIB poset exists."""


class GuardExceeded(RuntimeError):
    """A brute-force enumeration guard was tripped."""
