"""
Edge Sched - Satisfaction Model
===============================
Pure functions of the accuracy/delay model: completion time of serving a
request on a server, the user satisfaction (US) it yields, and the
candidate test GUS and the baselines share.

    US = w_a * (a - A_i) / Max_as + w_c * (C_i - c) / Max_cs

Local processing costs T_q + T_proc; offloading adds the transfer time
payload / bandwidth(s_i, j).
"""

from edge_sched.exceptions import ModelInconsistencyError, NotHostedError
from edge_sched.model.capacity import CapacityState
from edge_sched.model.types import ProblemInstance, Request, Server


def completion_time(
    request: Request,
    server: Server,
    service: int,
    model: int,
    instance: ProblemInstance,
) -> float:
    """
    Completion time in ms of serving ``request`` on ``server``.

    Raises:
        NotHostedError: (service, model) is not placed on the server
        ModelInconsistencyError: no link from the covering server
    """
    if not server.hosts(service, model):
        raise NotHostedError(server.id, service, model)

    proc = instance.catalog.proc_delay[server.perf_class][service][model]
    comm = instance.delays.comm_delay(request.covering_server, server.id, request.payload_bytes)
    if comm is None:
        raise ModelInconsistencyError(request.covering_server, server.id)
    return comm + request.queue_delay + proc


def user_satisfaction(
    request: Request,
    accuracy: float,
    completion: float,
    instance: ProblemInstance,
) -> float:
    """US of serving ``request`` at ``accuracy`` within ``completion`` ms. Not clamped."""
    return (
        request.weight_accuracy * (accuracy - request.min_accuracy) / instance.max_accuracy
        + request.weight_time * (request.max_completion - completion) / instance.max_completion
    )


def meets_thresholds(request: Request, accuracy: float, completion: float) -> bool:
    """Constraints (2b) and (2c): requested accuracy and delay are honoured."""
    return accuracy >= request.min_accuracy and completion <= request.max_completion


def is_candidate(
    request: Request,
    server: Server,
    service: int,
    model: int,
    state: CapacityState,
    instance: ProblemInstance,
    relax_compute: bool = False,
    relax_comm: bool = False,
) -> bool:
    """
    Whether (server, model) can serve ``request`` given the remaining capacity.

    Thresholds are only enforced in strict mode. ``relax_*`` skip the
    corresponding capacity check (the happy baselines).
    """
    if not server.hosts(service, model):
        return False

    if instance.is_strict:
        accuracy = instance.catalog.accuracy[service][model]
        completion = completion_time(request, server, service, model, instance)
        if not meets_thresholds(request, accuracy, completion):
            return False

    compute_cost = instance.catalog.compute_cost[service][model]
    if not relax_compute and compute_cost > state.remaining_compute[server.id]:
        return False

    covering = request.covering_server
    if server.id != covering and not relax_comm:
        return instance.catalog.comm_cost[service][model] <= state.remaining_comm[covering]
    return True
