"""Tests for the framed discrete-event simulation."""

import pytest

from edge_sched.scenario import testbed_profile
from edge_sched.simulation import AGGREGATE_RUN, FramedConfig, framed_simulation
from edge_sched.simulation.framed import draw_topology

LOADED = FramedConfig(frames=40, frame_len_ms=3000.0, queue_cap=4, arrival_rate=5.0)


def aggregates(results):
    return {r.algorithm: r for r in results if r.run == AGGREGATE_RUN}


class TestFramedSimulation:
    def test_deterministic(self):
        framed = FramedConfig(frames=20, arrival_rate=2.0)

        first = framed_simulation(testbed_profile(), ["gus", "random"], seed=4, framed=framed)
        second = framed_simulation(testbed_profile(), ["gus", "random"], seed=4, framed=framed)

        assert first == second

    def test_layout_frames_then_aggregates(self):
        framed = FramedConfig(frames=10, arrival_rate=1.0)

        results = framed_simulation(testbed_profile(), ["local-all", "gus"], seed=0, framed=framed)

        tail = results[-2:]
        assert [(r.run, r.algorithm) for r in tail] == [(AGGREGATE_RUN, "gus"), (AGGREGATE_RUN, "local-all")]
        frames = results[:-2]
        assert all(0 <= r.run < 10 for r in frames)
        assert [(r.run, r.algorithm) for r in frames] == sorted((r.run, r.algorithm) for r in frames)

    @pytest.mark.parametrize("retry", [True, False])
    def test_every_arrival_counted_once(self, retry):
        framed = FramedConfig(frames=15, arrival_rate=4.0, retry_rejected=retry)
        topology = draw_topology(testbed_profile(), framed, seed=2)
        arrivals = sum(len(trace) for trace in topology.arrivals)

        results = framed_simulation(testbed_profile(), ["gus", "local-all"], seed=2, framed=framed)

        for name, total in aggregates(results).items():
            per_frame = sum(r.n_requests for r in results if r.algorithm == name and r.run >= 0)
            assert total.n_requests == arrivals
            assert per_frame == arrivals

    def test_arrivals_keep_their_edge(self):
        topology = draw_topology(testbed_profile(), FramedConfig(frames=5, arrival_rate=2.0), seed=1)

        for edge, trace in enumerate(topology.arrivals):
            times = [t for t, _ in trace]
            assert times == sorted(times)
            assert all(r.covering_server == edge for _, r in trace)
            assert all(t < 5 * 3000.0 for t in times)

    def test_no_arrivals(self):
        framed = FramedConfig(frames=5, arrival_rate=0.0)

        assert framed_simulation(testbed_profile(), ["gus"], framed=framed) == []

    def test_gus_outserves_single_tier_baselines_under_load(self):
        results = framed_simulation(
            testbed_profile(), ["gus", "offload-all", "local-all"], seed=0, framed=LOADED
        )

        totals = aggregates(results)
        assert totals["gus"].satisfied_pct > totals["offload-all"].satisfied_pct
        assert totals["offload-all"].satisfied_pct > totals["local-all"].satisfied_pct
        assert totals["local-all"].offload_cloud_pct == 0.0

    def test_happy_baselines_survive_overdrawn_capacity(self):
        framed = FramedConfig(frames=10, arrival_rate=5.0)

        results = framed_simulation(testbed_profile(), ["happy-comp", "happy-comm"], seed=0, framed=framed)

        assert set(aggregates(results)) == {"happy-comp", "happy-comm"}

    def test_drop_penalty_lowers_mean_us(self):
        free = framed_simulation(testbed_profile(), ["local-all"], seed=0, framed=LOADED)
        penalised = framed_simulation(
            testbed_profile(), ["local-all"], seed=0, framed=LOADED, drop_penalty=1.0
        )

        assert aggregates(penalised)["local-all"].mean_us < aggregates(free)["local-all"].mean_us


@pytest.mark.slow
class TestTestbedExperiment:
    def test_satisfaction_ordering_over_long_run(self):
        framed = FramedConfig(frames=600, frame_len_ms=3000.0, queue_cap=4, arrival_rate=8.0)

        results = framed_simulation(
            testbed_profile(), ["gus", "random", "offload-all", "local-all"], seed=0, framed=framed
        )

        totals = aggregates(results)
        assert totals["gus"].satisfied_pct >= 1.25 * totals["offload-all"].satisfied_pct
        assert totals["gus"].satisfied_pct >= 1.25 * totals["local-all"].satisfied_pct
        assert totals["random"].satisfied_pct <= totals["gus"].satisfied_pct
