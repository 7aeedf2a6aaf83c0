"""Tests for GUS, the baselines and the scheduler factory."""

import time

import numpy as np
import pytest

from edge_sched.exceptions import UnknownAlgorithmError
from edge_sched.model import SchedulingMode
from edge_sched.scenario import generate_instance, paper_default, small_profile
from edge_sched.schedulers import (
    ALGORITHMS,
    Decision,
    GreedyScheduler,
    RandomAssignmentScheduler,
    get_scheduler,
    gus,
    happy_communication,
    happy_computation,
    list_available_schedulers,
    local_all,
    offload_all,
    parse_algorithms,
    random_assignment,
    rank_options,
    validate_schedule,
)

US_R0_CLOUD_BIG = 0.3 + 1300.0 / 12000.0
US_R0_LOCAL = 0.1 + 900.0 / 12000.0
US_R1_CLOUD_BIG = 0.1 + 3300.0 / 12000.0


class TestRankOptions:
    def test_sorted_by_us(self, two_request_instance):
        options = rank_options(two_request_instance, two_request_instance.requests[0])

        assert [(o.server, o.model) for o in options] == [(2, 1), (2, 0), (0, 0), (1, 0)]
        assert options[0].us == pytest.approx(US_R0_CLOUD_BIG)
        assert options[2].local

    def test_ties_prefer_local(self, instance_factory, request_factory):
        # weight_time 0 leaves only accuracy, equal on the edges
        instance = instance_factory((request_factory(0),))
        request = instance.requests[0].model_copy(update={"weight_time": 0.0})

        options = [o for o in rank_options(instance, request) if o.model == 0]

        assert [o.server for o in options] == [0, 1, 2]


class TestGreedy:
    def test_gus_takes_best_then_falls_back(self, two_request_instance):
        schedule = gus(two_request_instance)

        assert [a.decision for a in schedule.assignments] == [Decision.OFFLOAD_CLOUD, Decision.LOCAL]
        assert schedule.assignments[0].model == 1
        assert schedule.objective == pytest.approx((US_R0_CLOUD_BIG + US_R0_LOCAL) / 2)
        assert schedule.satisfied_count == 2
        assert validate_schedule(two_request_instance, schedule) == []

    def test_gus_drops_when_nothing_fits(self, contended_instance):
        schedule = gus(contended_instance)

        assert schedule.assignments[1].decision is Decision.DROP
        assert schedule.dropped_count == 1
        assert schedule.objective == pytest.approx(US_R0_CLOUD_BIG / 2)

    def test_drop_penalty_lowers_objective(self, contended_instance):
        schedule = gus(contended_instance, drop_penalty=0.5)

        assert schedule.objective == pytest.approx((US_R0_CLOUD_BIG - 0.5) / 2)
        assert schedule.drop_penalty == 0.5
        assert validate_schedule(contended_instance, schedule) == []

    def test_soft_mode_serves_below_threshold(self, instance_factory, contended_instance):
        soft = instance_factory(contended_instance.requests, mode=SchedulingMode.SOFT)

        schedule = gus(soft)

        assert schedule.assignments[1].decision is Decision.LOCAL
        assert schedule.assignments[1].us == pytest.approx(-0.1 + 2900.0 / 12000.0)
        assert schedule.satisfied_count == 1
        assert validate_schedule(soft, schedule) == []

    def test_empty_instance(self, instance_factory):
        schedule = gus(instance_factory(()))

        assert schedule.assignments == ()
        assert schedule.objective == 0.0

    @pytest.mark.parametrize(
        ("relax_compute", "relax_comm", "name"),
        [(False, False, "gus"), (True, False, "happy-comp"), (False, True, "happy-comm")],
    )
    def test_names(self, relax_compute, relax_comm, name):
        assert GreedyScheduler(relax_compute=relax_compute, relax_comm=relax_comm).name == name


class TestHappyBaselines:
    def test_happy_comp_ignores_compute(self, instance_factory, contended_instance):
        instance = instance_factory(contended_instance.requests, edge_comm=2)

        schedule = happy_computation(instance)

        assert [a.server for a in schedule.assignments] == [2, 2]
        assert schedule.objective == pytest.approx((US_R0_CLOUD_BIG + US_R1_CLOUD_BIG) / 2)
        assert {v.constraint for v in validate_schedule(instance, schedule)} == {"2d"}

    def test_happy_comm_ignores_comm(self, instance_factory, request_factory):
        # both requests fit in the cloud but edge 0 can send only one
        instance = instance_factory(
            (request_factory(0), request_factory(1)), cloud_compute=2
        )

        schedule = happy_communication(instance)

        assert [a.server for a in schedule.assignments] == [2, 2]
        assert {v.constraint for v in validate_schedule(instance, schedule)} == {"2e"}
        assert gus(instance).assignments[1].decision is Decision.LOCAL

    def test_relaxation_never_hurts_on_contention(self, contended_instance, instance_factory):
        instance = instance_factory(contended_instance.requests, edge_comm=2)

        assert happy_computation(instance).objective >= gus(instance).objective


class TestTierBaselines:
    def test_offload_all_uses_cloud_only(self, two_request_instance):
        schedule = offload_all(two_request_instance)

        assert schedule.assignments[0].decision is Decision.OFFLOAD_CLOUD
        assert schedule.assignments[1].decision is Decision.DROP
        assert validate_schedule(two_request_instance, schedule) == []

    def test_local_all_never_offloads(self, two_request_instance):
        schedule = local_all(two_request_instance)

        assert schedule.assignments[0].decision is Decision.LOCAL
        assert schedule.assignments[1].decision is Decision.DROP
        assert schedule.objective == pytest.approx(US_R0_LOCAL / 2)


class TestRandomAssignment:
    def test_same_stream_same_schedule(self):
        instance = generate_instance(small_profile(), seed=3)

        first = random_assignment(instance, np.random.default_rng(11))
        second = random_assignment(instance, np.random.default_rng(11))

        assert first == second
        assert validate_schedule(instance, first) == []

    def test_single_pick_is_feasible(self):
        instance = generate_instance(small_profile(), seed=4)

        schedule = random_assignment(instance, np.random.default_rng(0), retry=False)

        assert validate_schedule(instance, schedule) == []

    def test_first_request_always_served_on_free_capacity(self, two_request_instance):
        # every server can serve request 0 while nothing is charged
        for retry in (False, True):
            scheduler = RandomAssignmentScheduler(retry=retry)
            for seed in range(10):
                schedule = scheduler.schedule(two_request_instance, np.random.default_rng(seed))
                assert schedule.assignments[0].decision is not Decision.DROP

    def test_is_randomized(self):
        assert get_scheduler("random").is_randomized
        assert not get_scheduler("gus").is_randomized

    def test_never_beats_gus_on_tight_instance(self, two_request_instance):
        # the cloud, both edges and the covering edge's uplink hold one unit each
        target = gus(two_request_instance).objective

        objectives = [
            random_assignment(two_request_instance, np.random.default_rng(seed)).objective
            for seed in range(1000)
        ]

        assert max(objectives) <= target
        assert np.mean(objectives) < target


class TestArgmaxStability:
    @staticmethod
    def scale_accuracy(instance, scale):
        catalog = instance.catalog.model_copy(
            update={"accuracy": tuple(tuple(a * scale for a in row) for row in instance.catalog.accuracy)}
        )
        requests = tuple(
            r.model_copy(update={"min_accuracy": r.min_accuracy * scale}) for r in instance.requests
        )
        return instance.model_copy(
            update={
                "catalog": catalog,
                "requests": requests,
                "max_accuracy": instance.max_accuracy * scale,
            }
        )

    @pytest.mark.parametrize("scale", [0.5, 0.8, 3.0])
    def test_scaling_accuracy_keeps_choices(self, scale):
        for seed in range(20):
            instance = generate_instance(small_profile(), seed=seed)
            scaled = self.scale_accuracy(instance, scale)

            before = [(a.server, a.model) for a in gus(instance).assignments]
            after = [(a.server, a.model) for a in gus(scaled).assignments]

            assert after == before, seed

    def test_declaration_order_does_not_matter(self, two_request_instance):
        reordered = two_request_instance.model_copy(
            update={
                "servers": tuple(
                    s.model_validate({**s.model_dump(), "hosted": tuple(reversed(s.hosted))})
                    for s in two_request_instance.servers
                )
            }
        )

        assert gus(reordered).assignments == gus(two_request_instance).assignments


@pytest.mark.slow
class TestGreedyRunningTime:
    def test_default_scale_run_under_50ms(self):
        instance = generate_instance(paper_default(), seed=0)
        gus(instance)

        timings = []
        for _ in range(20):
            start = time.perf_counter()
            gus(instance)
            timings.append(time.perf_counter() - start)

        assert float(np.median(timings)) < 0.050


class TestFeasibilityOnRandomInstances:
    @pytest.mark.parametrize("seed", range(20))
    def test_capacity_respecting_schedulers_are_valid(self, seed):
        instance = generate_instance(small_profile(), seed=seed)

        for name in ("gus", "random", "offload-all", "local-all"):
            scheduler = get_scheduler(name)
            schedule = scheduler.schedule(instance, np.random.default_rng(seed))
            assert validate_schedule(instance, schedule) == [], name

    @pytest.mark.parametrize("seed", range(20))
    def test_happy_baselines_break_only_their_relaxed_constraint(self, seed):
        instance = generate_instance(small_profile(), seed=seed)

        comp = {v.constraint for v in validate_schedule(instance, happy_computation(instance))}
        comm = {v.constraint for v in validate_schedule(instance, happy_communication(instance))}

        assert comp <= {"2d"}
        assert comm <= {"2e"}


class TestFactory:
    def test_every_registered_name_builds(self):
        for name in list_available_schedulers():
            assert get_scheduler(name).name == name

    def test_unknown_name(self):
        with pytest.raises(UnknownAlgorithmError) as exc_info:
            get_scheduler("simulated-annealing")

        assert exc_info.value.exit_code == 2
        assert "gus" in exc_info.value.details["available"]

    def test_parse_keeps_order_and_drops_repeats(self):
        assert parse_algorithms("random, gus,random,,exact") == ["random", "gus", "exact"]

    def test_parse_rejects_unknown(self):
        with pytest.raises(UnknownAlgorithmError):
            parse_algorithms("gus,magic")

    def test_registry_order(self):
        assert ALGORITHMS[0] == "gus"
        assert set(ALGORITHMS) == set(list_available_schedulers())
