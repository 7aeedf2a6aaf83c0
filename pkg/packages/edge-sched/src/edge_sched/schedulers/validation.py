"""
Edge Sched - Schedule Validator
===============================
Checks a Schedule against the MUS constraints, literally:

    2a  at most one assignment per request
    2b  accuracy >= requested accuracy          (strict mode only)
    2c  completion time <= requested delay      (strict mode only)
    2d  computation load on j <= gamma_j
    2e  offloads sent by covering server j <= eta_j
    2f  decisions are well formed (hosted pair, matching decision kind)

plus ``consistency``: recorded accuracy, completion, US, objective and
satisfied count match a recomputation from the instance.
"""

import math
from collections import Counter

from pydantic import BaseModel

from edge_sched.exceptions import EdgeSchedError, ScheduleValidationError
from edge_sched.model.satisfaction import completion_time, meets_thresholds, user_satisfaction
from edge_sched.model.types import ProblemInstance
from edge_sched.schedulers.base import Decision, Schedule, compute_objective

TOLERANCE = 1e-9


class ConstraintViolation(BaseModel):
    """One broken constraint."""
    constraint: str
    message: str
    request: int | None = None
    server: int | None = None


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=TOLERANCE, abs_tol=TOLERANCE)


def validate_schedule(
    instance: ProblemInstance,
    schedule: Schedule,
    drop_penalty: float | None = None,
) -> list[ConstraintViolation]:
    """
    Re-check ``schedule`` against ``instance``.

    Args:
        instance: problem the schedule claims to solve
        schedule: schedule to check
        drop_penalty: overrides the penalty recorded on the schedule

    Returns:
        Violations found, empty when the schedule is feasible and consistent
    """
    penalty = schedule.drop_penalty if drop_penalty is None else drop_penalty
    violations: list[ConstraintViolation] = []

    seen = Counter(a.request for a in schedule.assignments)
    for request_id, count in sorted(seen.items()):
        if count > 1:
            violations.append(ConstraintViolation(
                constraint="2a",
                message=f"request {request_id} has {count} assignments",
                request=request_id,
            ))
    missing = set(range(instance.n_requests)) - set(seen)
    unknown = set(seen) - set(range(instance.n_requests))
    if missing or unknown:
        violations.append(ConstraintViolation(
            constraint="2a",
            message=f"assignments do not cover requests one-to-one "
                    f"(missing {sorted(missing)}, unknown {sorted(unknown)})",
        ))
        return violations

    compute_load = [0.0] * len(instance.servers)
    comm_load = [0.0] * len(instance.servers)
    us_values: list[float] = []
    satisfied = 0

    for assignment in schedule.assignments:
        i = assignment.request
        request = instance.requests[i]

        if assignment.decision is Decision.DROP:
            if assignment.server is not None or assignment.model is not None:
                violations.append(ConstraintViolation(
                    constraint="2f", message=f"dropped request {i} names a server", request=i,
                ))
            continue

        j, l = assignment.server, assignment.model
        if j is None or l is None or not 0 <= j < len(instance.servers):
            violations.append(ConstraintViolation(
                constraint="2f", message=f"request {i} has no valid server/model", request=i,
            ))
            continue
        server = instance.servers[j]
        k = request.service
        if assignment.service not in (None, k) or not server.hosts(k, l):
            violations.append(ConstraintViolation(
                constraint="2f",
                message=f"request {i}: server {j} does not host service {k} model {l}",
                request=i, server=j,
            ))
            continue

        if j == request.covering_server:
            expected = Decision.LOCAL
        elif server.is_cloud:
            expected = Decision.OFFLOAD_CLOUD
        else:
            expected = Decision.OFFLOAD_EDGE
        if assignment.decision is not expected:
            violations.append(ConstraintViolation(
                constraint="2f",
                message=f"request {i} labelled {assignment.decision.value}, expected {expected.value}",
                request=i, server=j,
            ))

        accuracy = instance.catalog.accuracy[k][l]
        try:
            completion = completion_time(request, server, k, l, instance)
        except EdgeSchedError as e:
            violations.append(ConstraintViolation(
                constraint="2f", message=f"request {i}: {e.message}", request=i, server=j,
            ))
            continue

        if instance.is_strict and accuracy < request.min_accuracy:
            violations.append(ConstraintViolation(
                constraint="2b",
                message=f"request {i}: accuracy {accuracy:.4f} below {request.min_accuracy:.4f}",
                request=i, server=j,
            ))
        if instance.is_strict and completion > request.max_completion:
            violations.append(ConstraintViolation(
                constraint="2c",
                message=f"request {i}: completion {completion:.1f} ms exceeds {request.max_completion:.1f} ms",
                request=i, server=j,
            ))

        compute_load[j] += instance.catalog.compute_cost[k][l]
        if j != request.covering_server:
            comm_load[request.covering_server] += instance.catalog.comm_cost[k][l]

        us = user_satisfaction(request, accuracy, completion, instance)
        us_values.append(us)
        satisfied += meets_thresholds(request, accuracy, completion)
        recorded = (assignment.accuracy, assignment.completion, assignment.us)
        if (
            recorded[0] is None
            or recorded[1] is None
            or not _close(recorded[0], accuracy)
            or not _close(recorded[1], completion)
            or not _close(recorded[2], us)
        ):
            violations.append(ConstraintViolation(
                constraint="consistency",
                message=f"request {i}: recorded accuracy/completion/US differ from the model",
                request=i, server=j,
            ))

    for j, server in enumerate(instance.servers):
        if compute_load[j] > server.compute_capacity:
            violations.append(ConstraintViolation(
                constraint="2d",
                message=f"server {j}: computation load {compute_load[j]:g} exceeds capacity {server.compute_capacity}",
                server=j,
            ))
        if comm_load[j] > server.comm_capacity:
            violations.append(ConstraintViolation(
                constraint="2e",
                message=f"server {j}: communication load {comm_load[j]:g} exceeds capacity {server.comm_capacity}",
                server=j,
            ))

    objective = compute_objective(us_values, schedule.dropped_count, instance.n_requests, penalty)
    if not _close(objective, schedule.objective):
        violations.append(ConstraintViolation(
            constraint="consistency",
            message=f"objective {schedule.objective:.6f} differs from recomputed {objective:.6f}",
        ))
    if satisfied != schedule.satisfied_count:
        violations.append(ConstraintViolation(
            constraint="consistency",
            message=f"satisfied_count {schedule.satisfied_count} differs from recomputed {satisfied}",
        ))
    return violations


def ensure_valid(
    instance: ProblemInstance,
    schedule: Schedule,
    drop_penalty: float | None = None,
) -> None:
    """Raise ScheduleValidationError when ``schedule`` breaks any constraint."""
    violations = validate_schedule(instance, schedule, drop_penalty)
    if violations:
        raise ScheduleValidationError(violations)
