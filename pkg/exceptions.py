"""Exceptions that are unique to the solver."""
from __future__ import annotations


class VrpError(Exception):
    """Base class for every error the solver raises on purpose."""


class InvalidInstance(VrpError):
    """Exception raised when an instance breaks one of its invariants.

    The individual violations are kept in 'violations'.
    """

    def __init__(self, violations: list[str]) -> None:
        """Initialize with the list of violation descriptions."""
        super().__init__("; ".join(violations))
        self.violations = violations


class Infeasible(VrpError):  # noqa: N818
    """Exception raised when no feasible solution can be built.

    The reason is given as the exception message
    """


class UnsupportedInstance(VrpError):
    """Raised when a solver is handed an instance shape it does not handle."""


class InstanceTooLarge(VrpError):
    """Raised when the exact solver is asked to enumerate too many customers."""


class UnknownNode(VrpError, IndexError):
    """Raised when a route refers to a node outside the distance matrix."""


class InstanceFormatError(VrpError):
    """Raised when an instance document cannot be parsed or has bad fields."""


class InvalidConfig(VrpError):
    """Raised when a GA configuration is malformed."""


class UsageError(SystemExit):
    """Can be raised to exit the command line with a usage message."""
