"""
Error hierarchy shared by every lab app.

ParameterError    – bad input or a violated precondition (exit code 2).
ResourceCapError  – a memory, enumeration or grid cap was exceeded (exit code 3).

Outcomes that are data (uncertified samples, rank drops, an empty scan)
are reported, never raised.
"""


class LabError(Exception):
    """Base class for all lab errors."""

    exit_code = 1


class ParameterError(LabError, ValueError):
    exit_code = 2


class ResourceCapError(LabError):
    exit_code = 3

    def __init__(self, message, *, estimate=None, cap=None):
        super().__init__(message)
        self.estimate = estimate
        self.cap = cap


class DivergenceError(ParameterError):
    """A geometric series was requested with ratio ≥ 1."""

    def __init__(self, message, *, ratio):
        super().__init__(message)
        self.ratio = ratio


class UnsupportedCaseError(ParameterError):
    """Only a conjectural bound is known for the requested case."""
