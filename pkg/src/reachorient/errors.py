"""Exception types shared across the package."""

from __future__ import annotations


class ReachorientError(Exception):
    """Base class for all package errors."""


class ParseError(ReachorientError, ValueError):
    """Malformed input file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(ReachorientError, ValueError):
    """An operation that requires a connected graph got a disconnected one."""


class InfeasibleError(ReachorientError, ValueError):
    """No valid orientation exists; carries a bridge or a one-way-cut witness."""

    def __init__(self, message: str, bridge=None, witness=None):
        self.bridge = bridge
        self.witness = witness
        super().__init__(message)


class SizeBoundError(ReachorientError, ValueError):
    """Input exceeds the size limit of an exhaustive-enumeration routine."""


class BudgetExceededError(ReachorientError, ValueError):
    """Exact partition DP would exceed its table budget; use the FPTAS instead."""


class OddSumError(ReachorientError, ValueError):
    """Weights sum to an odd total: the equal-split instance is trivially NO."""
