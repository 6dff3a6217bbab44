"""Tests for the nearest-neighbor baseline, the oracle and comparisons."""
from __future__ import annotations

import math

import pytest

import exceptions
from baseline import (
    ComparisonReport,
    ComparisonRow,
    baseline_solve,
    compare,
    compare_corpus,
    improvement,
    oracle_solve,
    set_partitions,
)
from config import GaConfig
from cost_engine import check_feasibility
from entity import TimeWindow
from genetic import solve
from procgen import generate_instance
from route import format_route

QUICK = GaConfig(population_size=20, max_generations=30, stall_generations=10)


def route_strings(solution):
    return [format_route(r) for r in solution.routes if not r.is_empty]


def test_baseline_visits_nearest_first(make_instance):
    instance = make_instance([(1, 0), (3, 0), (2, 0)])
    solution = baseline_solve(instance)
    assert route_strings(solution) == ["0 - 1 - 3 - 2 - 0"]
    assert solution.total_distance == pytest.approx(6.0)


def test_baseline_single_customer_drives_there_and_back(make_instance):
    instance = make_instance([(3.0, 4.0)])
    solution = baseline_solve(instance)
    assert route_strings(solution) == ["0 - 1 - 0"]
    assert solution.total_distance == pytest.approx(10.0)


def test_baseline_opens_a_route_when_the_vehicle_is_full(make_instance):
    instance = make_instance([(1, 0), (2, 0)], quantities=[6, 6], capacity=10)
    assert route_strings(baseline_solve(instance)) == \
        ["0 - 1 - 0", "0 - 2 - 0"]


def test_baseline_rejects_routes_beyond_the_fleet(make_instance):
    instance = make_instance(
        [(1, 0), (2, 0)], quantities=[6, 6], capacity=10, fleet_size=1)
    with pytest.raises(exceptions.Infeasible, match="fleet has 1 vehicle"):
        baseline_solve(instance)


def test_baseline_respects_endurance_when_vehicles_remain(make_instance):
    instance = make_instance([(1, 0), (0, 3)], endurance=4.0)
    assert route_strings(baseline_solve(instance)) == \
        ["0 - 1 - 0", "0 - 2 - 0"]


def test_baseline_is_feasible_on_generated_instances():
    for seed in range(10):
        instance = generate_instance(seed=seed, n_customers=12)
        solution = baseline_solve(instance)
        assert check_feasibility(solution.routes, instance) == []


def test_baseline_rejects_instances_without_orders(make_instance):
    with pytest.raises(exceptions.InvalidInstance, match="at least 1 order"):
        baseline_solve(make_instance([]))


def test_set_partitions_counts():
    # Bell numbers, and partitions into at most two blocks.
    assert sum(1 for _ in set_partitions([1, 2, 3, 4], 4)) == 15
    assert sum(1 for _ in set_partitions([1, 2, 3, 4, 5], 5)) == 52
    assert sum(1 for _ in set_partitions([1, 2, 3, 4], 2)) == 8
    assert list(set_partitions([], 3)) == [[]]


def test_oracle_single_route(corner_instance):
    solution = oracle_solve(corner_instance)
    assert route_strings(solution) == ["0 - 1 - 2"]
    assert solution.cost.total_z == pytest.approx(17.0)


def test_oracle_splits_when_capacity_forces_it(make_instance):
    instance = make_instance([(1, 0), (2, 0)], quantities=[6, 6], capacity=10)
    solution = oracle_solve(instance)
    assert route_strings(solution) == ["0 - 1", "0 - 2"]
    assert solution.cost.total_z == pytest.approx(23.0)


def test_oracle_breaks_ties_by_route_string(make_instance):
    instance = make_instance([(1, 0), (-1, 0)], fixed_cost=100.0)
    # 0-1-2 and 0-2-1 both cost 3 + 100.
    assert route_strings(oracle_solve(instance)) == ["0 - 1 - 2"]


def test_oracle_follows_time_windows(make_instance):
    windows = [TimeWindow(0, 100, 200), TimeWindow(0, 1, 5)]
    instance = make_instance([(1, 0), (-1, 0)], windows=windows,
                             fixed_cost=100.0)
    assert route_strings(oracle_solve(instance)) == ["0 - 2 - 1"]


def test_closed_oracle_matches_the_baseline_on_a_line(make_instance):
    instance = make_instance([(1, 0), (2, 0), (3, 0)])
    oracle = oracle_solve(instance, closed=True)
    baseline = baseline_solve(instance)
    assert oracle.cost.total_z == pytest.approx(baseline.cost.total_z)
    assert all(route.closed for route in oracle.routes)


def test_oracle_is_capped():
    instance = generate_instance(seed=1, n_customers=9)
    with pytest.raises(exceptions.InstanceTooLarge, match="capped at 8"):
        oracle_solve(instance)


def test_oracle_is_a_lower_bound():
    for seed in range(6):
        instance = generate_instance(seed=seed, n_customers=6)
        optimum = oracle_solve(instance).cost.total_z
        assert baseline_solve(instance).cost.total_z >= optimum - 1e-9
        ga = solve(instance, QUICK.replace(seed=seed))
        assert ga.best_solution.cost.total_z >= optimum - 1e-9


@pytest.mark.parametrize(
    ("baseline", "ga", "expected"),
    [(100.0, 80.0, 20.0), (50.0, 60.0, -20.0), (10.0, 10.0, 0.0),
     (0.0, 5.0, None)],
)
def test_improvement(baseline, ga, expected):
    assert improvement(baseline, ga) == (
        None if expected is None else pytest.approx(expected))


def test_comparison_row_percentages():
    row = ComparisonRow("x", 200.0, 150.0, 40.0, 30.0, 80.0, 100.0)
    assert row.impr_z_pct == pytest.approx(25.0)
    assert row.impr_time_pct == pytest.approx(25.0)
    assert row.impr_dist_pct == pytest.approx(-25.0)


def test_comparison_report_means():
    report = ComparisonReport(rows=(
        ComparisonRow("a", 100.0, 90.0, 1.0, 1.0, 1.0, 1.0),
        ComparisonRow("b", 50.0, 60.0, 1.0, 1.0, 1.0, 1.0),
    ))
    assert report.mean_baseline_z == pytest.approx(75.0)
    assert report.mean_ga_z == pytest.approx(75.0)
    assert report.ga_not_worse_share == pytest.approx(0.5)
    assert report.mean_ga_time == pytest.approx(1.0)
    assert report.mean_baseline_dist == pytest.approx(1.0)
    assert ComparisonReport(rows=()).mean_ga_z == 0.0


def test_compare_runs_both_solvers():
    instance = generate_instance(seed=4, n_customers=8)
    row = compare(instance, QUICK)
    assert row.instance == "gen-4-8"
    assert row.baseline_z == pytest.approx(
        baseline_solve(instance).cost.total_z)
    assert row.ga_z == pytest.approx(
        solve(instance, QUICK).best_solution.cost.total_z)


def test_ga_improves_on_the_baseline_across_a_corpus():
    instances = [
        generate_instance(seed=s, n_customers=4 + s % 19) for s in range(100)
    ]
    report = compare_corpus(instances, QUICK)
    assert [row.instance for row in report.rows] == \
        sorted(i.name for i in instances)
    assert report.mean_ga_z < report.mean_baseline_z
    assert report.ga_not_worse_share >= 0.9


def test_far_customer_gets_a_finite_baseline_and_oracle(make_instance):
    instance = make_instance(
        [(1000.0, 0.0), (1001.0, 0.0)],
        windows=[TimeWindow(0.0, 10.0, 20.0)] * 2,
    )
    for solution in (baseline_solve(instance), oracle_solve(instance)):
        assert math.isfinite(solution.cost.total_z)
        assert solution.hard_late == (1, 2)


def test_compare_corpus_in_parallel_matches_sequential():
    instances = [generate_instance(seed=s, n_customers=6) for s in (5, 1)]
    assert compare_corpus(instances, QUICK, workers=2) == \
        compare_corpus(instances, QUICK)
