"""Tests for the chromosome operators and the route decoder."""
from __future__ import annotations

import dataclasses

import numpy as np
import pytest

import exceptions
from entity import Location, Merchant
from instance import build_distance_matrix
from operators.chromosome import is_valid
from operators.crossover import crossover, order_crossover
from operators.mutation import mutate
from operators.selection import rank, tournament
from operators.split import decode, require_solvable
from route import format_route


def test_order_crossover_hand_trace():
    assert order_crossover((1, 2, 3, 4), (4, 3, 2, 1), 1, 3) == (4, 2, 3, 1)
    assert order_crossover((4, 3, 2, 1), (1, 2, 3, 4), 1, 3) == (1, 3, 2, 4)


def test_order_crossover_full_and_empty_segments():
    assert order_crossover((1, 2, 3), (3, 2, 1), 0, 3) == (1, 2, 3)
    assert order_crossover((1, 2, 3), (3, 2, 1), 2, 2) == (3, 2, 1)


def test_crossover_children_are_permutations(make_instance):
    instance = make_instance([(float(i), 0.0) for i in range(1, 10)])
    rng = np.random.default_rng(3)
    customers = np.arange(1, 10)
    for _ in range(200):
        p1 = tuple(rng.permutation(customers).tolist())
        p2 = tuple(rng.permutation(customers).tolist())
        for child in crossover(p1, p2, rng):
            assert is_valid(child, instance)


def test_crossover_rejects_unequal_parents():
    with pytest.raises(ValueError, match="differ in length"):
        crossover((1, 2), (1, 2, 3), np.random.default_rng(0))


def test_mutation_rate_zero_keeps_the_chromosome():
    rng = np.random.default_rng(1)
    chrom = (1, 2, 3, 4, 5)
    assert all(mutate(chrom, 0.0, rng) == chrom for _ in range(50))


def test_mutation_rate_one_swaps_two_genes():
    rng = np.random.default_rng(1)
    chrom = (1, 2, 3, 4, 5)
    for _ in range(50):
        child = mutate(chrom, 1.0, rng)
        assert sorted(child) == list(chrom)
        assert sum(a != b for a, b in zip(chrom, child)) == 2


def test_mutation_of_a_single_gene_is_a_no_op():
    assert mutate((1,), 1.0, np.random.default_rng(0)) == (1,)


def test_tournament_prefers_lower_cost_then_lower_index():
    rng = np.random.default_rng(0)
    assert tournament([5.0, 1.0, 1.0], 3, rng) == 1
    assert tournament([2.0, 9.0, 0.5, 7.0], 4, rng) == 2


def test_tournament_of_one_picks_any_entrant():
    rng = np.random.default_rng(2)
    winners = {tournament([3.0, 2.0, 1.0], 1, rng) for _ in range(100)}
    assert winners == {0, 1, 2}


def test_rank_orders_by_cost():
    assert rank([3.0, 1.0, 2.0, 1.0]) == [1, 3, 2, 0]


def test_is_valid(make_instance):
    instance = make_instance([(1, 0), (2, 0), (3, 0)])
    assert is_valid((3, 1, 2), instance)
    assert not is_valid((1, 2), instance)
    assert not is_valid((1, 1, 2), instance)


def test_decode_splits_on_capacity(make_instance):
    instance = make_instance([(1, 0), (2, 0), (3, 0)], quantities=[4, 4, 4],
                             capacity=8)
    dm = build_distance_matrix(instance)
    routes = decode((1, 2, 3), instance, dm)
    assert [format_route(r) for r in routes] == ["0 - 1 - 2", "0 - 3"]
    assert [r.vehicle_index for r in routes] == [0, 1]


def test_decode_splits_on_endurance(make_instance):
    instance = make_instance([(1, 0), (2, 0), (3, 0)], endurance=2.0)
    dm = build_distance_matrix(instance)
    routes = decode((1, 2, 3), instance, dm)
    assert [format_route(r) for r in routes] == ["0 - 1 - 2", "0 - 3"]


def test_decode_ignores_endurance_on_the_last_vehicle(make_instance):
    instance = make_instance([(1, 0), (2, 0), (3, 0)], endurance=2.0,
                             fleet_size=1)
    dm = build_distance_matrix(instance)
    routes = decode((1, 2, 3), instance, dm)
    assert [format_route(r) for r in routes] == ["0 - 1 - 2 - 3"]


def test_decode_covers_every_customer_once(make_instance):
    rng = np.random.default_rng(4)
    instance = make_instance(
        [(float(i % 4), float(i // 4)) for i in range(1, 13)],
        quantities=[int(q) for q in rng.integers(1, 6, size=12)],
        capacity=9, endurance=6.0,
    )
    dm = build_distance_matrix(instance)
    for _ in range(50):
        chrom = tuple(rng.permutation(np.arange(1, 13)).tolist())
        routes = decode(chrom, instance, dm)
        served = [c for r in routes for c in r.customers]
        assert served == list(chrom)
        assert all(
            sum(instance.demand(c) for c in r.customers) <= 9 for r in routes)


def test_decode_rejects_an_order_heavier_than_a_vehicle(make_instance):
    instance = make_instance([(1, 0), (2, 0)], quantities=[11, 1], capacity=10)
    dm = build_distance_matrix(instance)
    with pytest.raises(exceptions.Infeasible, match="order q1 load 11"):
        decode((1, 2), instance, dm)


def test_multi_merchant_instances_are_unsupported(make_instance):
    instance = make_instance([(1, 0)])
    instance = dataclasses.replace(
        instance,
        merchants=(*instance.merchants, Merchant("m2", Location(5.0, 5.0))),
    )
    with pytest.raises(exceptions.UnsupportedInstance):
        require_solvable(instance)


def test_invalid_instances_are_reported(make_instance):
    instance = make_instance([(1, 0)], quantities=[0])
    with pytest.raises(exceptions.InvalidInstance) as info:
        require_solvable(instance)
    assert "order q1: quantity ≥ 1 violated" in info.value.violations
