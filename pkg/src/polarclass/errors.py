"""Exception hierarchy.  Each class maps to one CLI exit code."""

from __future__ import annotations


class PolarClassError(Exception):
    exit_code = 1


class InputError(PolarClassError, ValueError):
    """Malformed or out-of-range input."""

    exit_code = 2


class PreconditionError(PolarClassError, ValueError):
    """A formula's validity hypothesis does not hold for the given input.

    ``reason`` is a short stable tag (``not_smooth``, ``edge_too_short``,
    ``wrong_dimension``, ``degenerate_osculation``, ...) used by the CLI.
    """

    exit_code = 3

    def __init__(self, reason: str, message: str):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


class ResourceLimitError(PolarClassError, RuntimeError):
    """A desk-scale limit (lattice-point scan budget, vertex count) was exceeded."""

    exit_code = 4


class ConsistencyError(PolarClassError, AssertionError):
    """Two independent evaluation paths disagreed; indicates a bug."""

    exit_code = 1
