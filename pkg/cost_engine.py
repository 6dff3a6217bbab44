"""Penalty functions, the objective Z, feasibility checks and fitness.

Every function here is pure: inputs are never modified, so candidate
solutions can be evaluated from any number of workers at once.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

import numpy as np

import exceptions
from route import Route, route_distance, route_load

if TYPE_CHECKING:
    from entity import CostParams, TimeWindow
    from instance import DistanceMatrix, Instance

TOLERANCE = 1e-9

# Lateness past this many time units is charged at this value, so the late
# penalty (and Z) stays finite.
LATE_EXPONENT_CAP = 600.0


@dataclass(frozen=True)
class CostBreakdown:
    """The four parts of Z and their sum."""

    transport_cost: float = 0.0
    fixed_cost: float = 0.0
    distance_penalty: float = 0.0
    time_penalty: float = 0.0
    total_z: float = 0.0

    @classmethod
    def from_parts(
        cls,
        transport_cost: float,
        fixed_cost: float,
        distance_penalty: float,
        time_penalty: float,
    ) -> CostBreakdown:
        """Build a breakdown whose total is the sum of the given parts."""
        return cls(
            transport_cost=transport_cost,
            fixed_cost=fixed_cost,
            distance_penalty=distance_penalty,
            time_penalty=time_penalty,
            total_z=transport_cost + fixed_cost + distance_penalty
            + time_penalty,
        )

    def __add__(self, other: CostBreakdown) -> CostBreakdown:
        """Add two breakdowns part by part."""
        return CostBreakdown.from_parts(
            self.transport_cost + other.transport_cost,
            self.fixed_cost + other.fixed_cost,
            self.distance_penalty + other.distance_penalty,
            self.time_penalty + other.time_penalty,
        )


@dataclass(frozen=True)
class ArrivalSchedule:
    """Arrival time of every served customer, plus route timing totals.

    'route_completion' holds, per route, the time the vehicle finishes
    (its last arrival, or its return for closed routes).
    """

    arrivals: dict[int, float]
    route_completion: tuple[float, ...] = ()
    total_travel_time: float = 0.0

    @property
    def makespan(self) -> float:
        """Completion time of the longest route."""
        return max(self.route_completion, default=0.0)


@dataclass(frozen=True)
class Solution:
    """Routes together with their evaluated cost and schedule."""

    routes: tuple[Route, ...]
    cost: CostBreakdown
    schedule: ArrivalSchedule
    total_distance: float = 0.0
    hard_late: tuple[int, ...] = ()  # Customers reached after their cutoff c.

    @property
    def vehicles_used(self) -> int:
        """Number of routes that serve at least one customer."""
        return sum(1 for route in self.routes if not route.is_empty)


def time_penalty(t_i: float, window: TimeWindow, params: CostParams) -> float:
    """Return the soft time window penalty for arriving at time t_i.

    Early arrivals cost linearly, late arrivals exponentially. The late
    branch keeps growing past the cutoff c until the lateness reaches
    LATE_EXPONENT_CAP, after which it stays flat and finite.
    """
    if t_i < 0:
        msg = f"arrival time must be non-negative, got {t_i}"
        raise ValueError(msg)
    if t_i < window.a:
        return params.early_coeff * (window.a - t_i)
    if t_i <= window.b:
        return 0.0
    return params.late_coeff * math.expm1(
        min(t_i - window.b, LATE_EXPONENT_CAP))


def time_penalties(
    arrivals: np.ndarray,
    a: np.ndarray,
    b: np.ndarray,
    params: CostParams,
) -> np.ndarray:
    """Vectorized time_penalty over matching arrays of arrivals and windows."""
    lateness = np.clip(arrivals - b, 0.0, LATE_EXPONENT_CAP)
    late = params.late_coeff * np.expm1(lateness)
    early = params.early_coeff * np.maximum(a - arrivals, 0.0)
    return np.where(arrivals < a, early, np.where(arrivals <= b, 0.0, late))


def distance_penalty_factor(
    total_route_distance: float, endurance_L: float,  # noqa: N803
) -> int:
    """Return how many whole endurances a route's distance covers."""
    if endurance_L <= 0:
        msg = f"endurance must be positive, got {endurance_L}"
        raise ValueError(msg)
    return math.floor(total_route_distance / endurance_L + TOLERANCE)


def _route_arrivals(
    route: Route, dm: DistanceMatrix, speed: float, service_time: float,
) -> np.ndarray:
    """Return the arrival time at each customer of a route, in visit order."""
    nodes = np.asarray(route.nodes, dtype=np.intp)
    legs = dm.distances[nodes[:-1], nodes[1:]]
    waits = service_time * np.arange(legs.size)
    return np.cumsum(legs) / speed + waits


def arrival_schedule(
    routes: Iterable[Route],
    dm: DistanceMatrix,
    speed: float,
    service_time: float = 0.0,
) -> ArrivalSchedule:
    """Compute when each customer is reached, from cumulative distance."""
    if speed <= 0:
        msg = f"speed must be positive, got {speed}"
        raise ValueError(msg)
    arrivals: dict[int, float] = {}
    completion = []
    travel_time = 0.0
    for route in routes:
        distance = route_distance(route, dm)
        travel_time += distance / speed
        if route.is_empty:
            completion.append(0.0)
            continue
        times = _route_arrivals(route, dm, speed, service_time)
        arrivals.update(zip(route.customers, times.tolist()))
        completion.append(
            distance / speed + service_time * len(route.customers))
    return ArrivalSchedule(
        arrivals=arrivals,
        route_completion=tuple(completion),
        total_travel_time=travel_time,
    )


def route_cost(
    route: Route, instance: Instance, dm: DistanceMatrix,
) -> CostBreakdown:
    """Return the share of Z that a single route contributes."""
    if route.is_empty:
        return CostBreakdown()
    vehicle = instance.vehicle
    distance = route_distance(route, dm)
    times = _route_arrivals(route, dm, vehicle.speed, vehicle.service_time)
    windows = instance.node_table[list(route.customers)]
    betas = time_penalties(times, windows["a"], windows["b"], instance.costs)
    alpha = distance_penalty_factor(distance, vehicle.endurance_L)
    return CostBreakdown.from_parts(
        transport_cost=vehicle.unit_distance_cost_o * distance,
        fixed_cost=vehicle.fixed_cost_r,
        distance_penalty=alpha * instance.costs.distance_penalty_cL,
        time_penalty=float(betas.sum()),
    )


def _visit_counts(routes: Iterable[Route]) -> Counter[int]:
    """Count how often each node is visited as a customer."""
    counts: Counter[int] = Counter()
    for route in routes:
        counts.update(route.customers)
    return counts


def evaluate(
    routes: Iterable[Route], instance: Instance, dm: DistanceMatrix,
) -> CostBreakdown:
    """Return the objective Z of a set of routes, split into its parts.

    Raises Infeasible if a customer is served twice or not at all.
    """
    routes = tuple(routes)
    counts = _visit_counts(routes)
    for node in instance.customer_nodes:
        if counts[node] != 1:
            msg = f"customer {node} served {counts[node]} times"
            raise exceptions.Infeasible(msg)
    if set(counts) - set(instance.customer_nodes):
        unknown = min(set(counts) - set(instance.customer_nodes))
        msg = f"node {unknown} is not a customer"
        raise exceptions.Infeasible(msg)

    total = CostBreakdown()
    for route in routes:
        total += route_cost(route, instance, dm)
    return total


def build_solution(
    routes: Iterable[Route], instance: Instance, dm: DistanceMatrix,
) -> Solution:
    """Evaluate routes and bundle them with their schedule and diagnostics."""
    routes = tuple(routes)
    cost = evaluate(routes, instance, dm)
    schedule = arrival_schedule(
        routes, dm, instance.vehicle.speed, instance.vehicle.service_time,
    )
    cutoff = instance.node_table["c"]
    hard_late = tuple(sorted(
        node for node, t in schedule.arrivals.items()
        if t > cutoff[node] + TOLERANCE
    ))
    return Solution(
        routes=routes,
        cost=cost,
        schedule=schedule,
        total_distance=sum(route_distance(r, dm) for r in routes),
        hard_late=hard_late,
    )


def check_feasibility(  # noqa: C901
    routes: Iterable[Route], instance: Instance,
) -> list[str]:
    """Return every violated delivery constraint of a set of routes.

    Checks single service and full coverage of customers, vehicle load,
    fleet size and that each order is carried from its own merchant.
    """
    routes = tuple(routes)
    violations: list[str] = []
    n_nodes = instance.n_merchants + instance.n_customers

    for route in routes:
        if not route.nodes or not instance.is_merchant_node(route.merchant):
            violations.append(
                f"route {route.vehicle_index} does not start at a merchant")
            continue
        unknown = [n for n in route.customers if not 0 <= n < n_nodes]
        if unknown:
            violations.append(
                f"route {route.vehicle_index} has unknown node {unknown[0]}")
            continue
        for node in route.customers:
            if instance.is_merchant_node(node):
                violations.append(
                    f"route {route.vehicle_index} visits merchant {node} "
                    "as a customer")
                continue
            order = instance.order_at(node)
            pickup = instance.merchants[route.merchant].id
            if order.merchant_id != pickup:
                violations.append(
                    f"route {route.vehicle_index} carries order {order.id} "
                    f"of merchant {order.merchant_id} from merchant {pickup}")
        load = route_load(route, instance)
        if load > instance.vehicle.capacity_Q + TOLERANCE:
            violations.append(
                f"route {route.vehicle_index} load {load:g} > "
                f"Q {instance.vehicle.capacity_Q:g}")

    counts = _visit_counts(routes)
    for node in instance.customer_nodes:
        if counts[node] == 0:
            violations.append(f"customer {node} unserved")
        elif counts[node] > 1:
            violations.append(f"customer {node} served {counts[node]} times")

    used = sum(1 for route in routes if not route.is_empty)
    if used > instance.fleet_size_v:
        violations.append(
            f"{used} vehicles used > fleet size {instance.fleet_size_v}")
    return violations


def fitness(total_z: float) -> float:
    """Return the GA selection signal 1/Z."""
    if not total_z > 0:
        msg = f"Z must be positive to compute fitness, got {total_z}"
        raise ValueError(msg)
    return 1.0 / total_z
