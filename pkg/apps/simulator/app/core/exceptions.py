"""
Edge Sched Simulator - CLI Exceptions
=====================================
Errors raised by the command-line layer. They extend the library
hierarchy so one handler maps every failure to a diagnostic and an
exit code.
"""

from edge_sched.exceptions import EdgeSchedError


class UsageError(EdgeSchedError):
    """Raised when command-line arguments are malformed."""

    def __init__(self, message: str, argument: str | None = None) -> None:
        super().__init__(
            message=message,
            code="INVALID_ARGUMENT",
            exit_code=2,
            details={"argument": argument} if argument else {},
        )


class OutputWriteError(EdgeSchedError):
    """Raised when a result file cannot be written."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(
            message=f"Cannot write {path}: {reason}",
            code="OUTPUT_ERROR",
            details={"path": path},
        )


class BundleFormatError(EdgeSchedError):
    """Raised when a solution bundle cannot be read back."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(
            message=f"Invalid solution bundle {path}: {reason}",
            code="INVALID_BUNDLE",
            exit_code=2,
            details={"path": path},
        )
