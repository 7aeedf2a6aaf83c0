"""
Edge Sched - Capacity Bookkeeping
=================================
Remaining computation/communication capacity of every server while a
scheduler walks through the requests of one instance.
"""

from typing import Self

from pydantic import BaseModel, Field

from edge_sched.model.types import ProblemInstance


class CapacityState(BaseModel):
    """
    Mutable per-invocation capacity ledger.

    Communication is charged to the covering (sending) server only;
    receivers are not charged.
    """

    remaining_compute: list[float] = Field(default_factory=list)
    remaining_comm: list[float] = Field(default_factory=list)

    @classmethod
    def from_instance(
        cls,
        instance: ProblemInstance,
        relax_compute: bool = False,
        relax_comm: bool = False,
    ) -> Self:
        """Start from gamma_j / eta_j; a relaxed resource never binds."""
        inf = float("inf")
        return cls(
            remaining_compute=[
                inf if relax_compute else float(s.compute_capacity) for s in instance.servers
            ],
            remaining_comm=[
                inf if relax_comm else float(s.comm_capacity) for s in instance.servers
            ],
        )

    def fits(self, server: int, covering: int, compute_cost: int, comm_cost: int) -> bool:
        if compute_cost > self.remaining_compute[server]:
            return False
        return server == covering or comm_cost <= self.remaining_comm[covering]

    def charge(self, server: int, covering: int, compute_cost: int, comm_cost: int) -> None:
        self.remaining_compute[server] -= compute_cost
        if server != covering:
            self.remaining_comm[covering] -= comm_cost
