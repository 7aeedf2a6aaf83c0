"""Shared fixtures for the edge-sched library tests."""

import logging
from collections.abc import Callable

import pytest
import structlog

from edge_sched.model import (
    DelayTable,
    ModelCatalog,
    ProblemInstance,
    Request,
    SchedulingMode,
    Server,
    ServerKind,
)

BANDWIDTH = 600.0
PAYLOAD = 180_000  # 300 ms on every link
MAX_COMPLETION = 12_000.0


@pytest.fixture(autouse=True)
def quiet_logging() -> None:
    structlog.configure(wrapper_class=structlog.make_filtering_bound_logger(logging.WARNING))


def make_request(
    id: int,
    min_accuracy: float = 0.5,
    max_completion: float = 2000.0,
    covering_server: int = 0,
    queue_delay: float = 100.0,
    service: int = 0,
) -> Request:
    return Request(
        id=id,
        service=service,
        min_accuracy=min_accuracy,
        max_completion=max_completion,
        covering_server=covering_server,
        payload_bytes=PAYLOAD,
        queue_delay=queue_delay,
    )


def make_instance(
    requests: tuple[Request, ...],
    mode: SchedulingMode = SchedulingMode.STRICT,
    cloud_compute: int = 1,
    edge_comm: int = 1,
) -> ProblemInstance:
    """
    Two edges and a cloud, one service with two models.

    Edges host model 0 (accuracy 0.6, 1000 ms); the cloud hosts both
    (0.6 / 0.8, 300 ms). Every edge has one compute slot.
    """
    catalog = ModelCatalog(
        accuracy=((0.6, 0.8),),
        proc_delay={"edge": ((1000.0, 1200.0),), "cloud": ((300.0, 300.0),)},
        compute_cost=((1, 1),),
        comm_cost=((1, 1),),
    )
    servers = (
        Server(id=0, kind=ServerKind.EDGE, compute_capacity=1, comm_capacity=edge_comm,
               perf_class="edge", hosted=((0, 0),)),
        Server(id=1, kind=ServerKind.EDGE, compute_capacity=1, comm_capacity=edge_comm,
               perf_class="edge", hosted=((0, 0),)),
        Server(id=2, kind=ServerKind.CLOUD, compute_capacity=cloud_compute, comm_capacity=0,
               perf_class="cloud", hosted=((0, 0), (0, 1))),
    )
    delays = DelayTable(
        bandwidth=(
            (None, BANDWIDTH, BANDWIDTH),
            (BANDWIDTH, None, BANDWIDTH),
            (BANDWIDTH, BANDWIDTH, None),
        )
    )
    return ProblemInstance(
        requests=requests,
        servers=servers,
        catalog=catalog,
        delays=delays,
        max_accuracy=1.0,
        max_completion=MAX_COMPLETION,
        mode=mode,
    )


@pytest.fixture
def instance_factory() -> Callable[..., ProblemInstance]:
    return make_instance


@pytest.fixture
def contended_instance() -> ProblemInstance:
    """
    Request 0 prefers the cloud's big model; request 1 can only be served
    there. GUS gives the cloud to request 0 and drops request 1.
    """
    return make_instance(
        (
            make_request(0),
            make_request(1, min_accuracy=0.7, max_completion=4000.0),
        )
    )


@pytest.fixture
def two_request_instance() -> ProblemInstance:
    return make_instance((make_request(0), make_request(1)))


@pytest.fixture
def request_factory() -> Callable[..., Request]:
    return make_request
