"""
Edge Sched - Exceptions
=======================
Exception hierarchy shared by the library and the CLI.

Every error carries a machine-readable ``code`` and the process ``exit_code``
the CLI should return when the error reaches the top level.
"""

from typing import Any


class EdgeSchedError(Exception):
    """Base exception for all edge-sched errors."""

    def __init__(
        self,
        message: str,
        code: str = "INTERNAL_ERROR",
        exit_code: int = 1,
        details: dict[str, Any] | None = None,
    ) -> None:
        self.message = message
        self.code = code
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


# =============================================================================
# Model Exceptions
# =============================================================================

class InvalidInstanceError(EdgeSchedError):
    """Raised when a problem instance violates its invariants."""

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message=message, code="INVALID_INSTANCE", exit_code=2, details=details)


class ModelInconsistencyError(EdgeSchedError):
    """Raised when the delay table has no usable link for a server pair."""

    def __init__(self, source: int, target: int) -> None:
        super().__init__(
            message=f"No bandwidth entry for link {source} -> {target}",
            code="MODEL_INCONSISTENCY",
            details={"source": source, "target": target},
        )


class NotHostedError(EdgeSchedError):
    """Raised when a (service, model) pair is not hosted on a server."""

    def __init__(self, server: int, service: int, model: int) -> None:
        super().__init__(
            message=f"Server {server} does not host service {service} model {model}",
            code="NOT_HOSTED",
            details={"server": server, "service": service, "model": model},
        )


# =============================================================================
# Configuration Exceptions
# =============================================================================

class InvalidConfigError(EdgeSchedError):
    """Raised when a scenario or CLI configuration is malformed."""

    def __init__(
        self,
        message: str = "Invalid configuration",
        errors: list[dict[str, Any]] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            code="INVALID_CONFIG",
            exit_code=2,
            details={"errors": errors or []},
        )


class UnknownAlgorithmError(EdgeSchedError):
    """Raised when an algorithm name is not registered."""

    def __init__(self, name: str, available: list[str]) -> None:
        super().__init__(
            message=f"Unknown algorithm '{name}'. Available: {', '.join(available)}",
            code="INVALID_ARGUMENT",
            exit_code=2,
            details={"name": name, "available": available},
        )


class UnknownSweepParameterError(EdgeSchedError):
    """Raised when a sweep names a parameter that cannot be swept."""

    def __init__(self, name: str, available: list[str]) -> None:
        super().__init__(
            message=f"Unknown sweep parameter '{name}'. Available: {', '.join(available)}",
            code="INVALID_ARGUMENT",
            exit_code=2,
            details={"name": name, "available": available},
        )


# =============================================================================
# Solver Exceptions
# =============================================================================

class InstanceTooLargeError(EdgeSchedError):
    """Raised when an instance exceeds an exact solver's size guard."""

    def __init__(self, solver: str, size: int, limit: int) -> None:
        super().__init__(
            message=f"Instance too large for {solver}: size {size} exceeds limit {limit}",
            code="INSTANCE_TOO_LARGE",
            exit_code=3,
            details={"solver": solver, "size": size, "limit": limit},
        )


class SolverBudgetExceededError(EdgeSchedError):
    """Raised when branch-and-bound hits its node limit before proving optimality."""

    def __init__(self, node_limit: int, incumbent: Any) -> None:
        super().__init__(
            message=f"Node limit {node_limit} reached before optimality was proven",
            code="SOLVER_BUDGET_EXCEEDED",
            exit_code=3,
            details={"node_limit": node_limit, "proven_optimal": False},
        )
        self.incumbent = incumbent


class ScheduleValidationError(EdgeSchedError):
    """Raised when a schedule violates one or more MUS constraints."""

    def __init__(self, violations: list[Any]) -> None:
        tags = sorted({v.constraint for v in violations})
        super().__init__(
            message="Schedule violates constraint(s) " + ", ".join(f"({t})" for t in tags),
            code="SCHEDULE_INVALID",
            exit_code=4,
            details={"constraints": tags, "violations": [v.message for v in violations]},
        )
        self.violations = violations


# =============================================================================
# Simulation Exceptions
# =============================================================================

class InvalidObservationError(EdgeSchedError):
    """Raised when a bandwidth observation is not strictly positive."""

    def __init__(self, observed: float) -> None:
        super().__init__(
            message=f"Bandwidth observation must be positive, got {observed}",
            code="INVALID_OBSERVATION",
            details={"observed": observed},
        )
