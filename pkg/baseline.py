"""Closed-route nearest-neighbor baseline, exact oracle and comparisons."""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import TYPE_CHECKING, Iterable, Iterator

import exceptions
from cost_engine import (
    TOLERANCE,
    Solution,
    build_solution,
    route_cost,
)
from instance import build_distance_matrix
from metric import Metric
from operators.split import MERCHANT_NODE, require_solvable
from route import Route, format_route

if TYPE_CHECKING:
    from config import GaConfig
    from instance import DistanceMatrix, Instance
    from operators.chromosome import Chromosome

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 8


def nearest_neighbor_routes(
    instance: Instance, dm: DistanceMatrix,
) -> list[Route]:
    """Build closed routes by always driving to the nearest customer that fits.

    A customer fits if the load stays within capacity_Q and the route,
    including its way back, stays within endurance_L. When nothing fits the
    route returns to the merchant and a new one starts. A fresh route (or
    the last vehicle of the fleet) ignores endurance, which is only
    penalized.
    """
    vehicle = instance.vehicle
    unvisited = list(instance.customer_nodes)
    routes: list[Route] = []

    while unvisited:
        current = [MERCHANT_NODE]
        load = 0.0
        distance = 0.0
        last_vehicle = len(routes) + 1 >= instance.fleet_size_v
        while True:
            here = current[-1]
            candidates = []
            for customer in unvisited:
                if (load + instance.demand(customer)
                        > vehicle.capacity_Q + TOLERANCE):
                    continue
                leg = dm.between(here, customer)
                round_trip = distance + leg + dm.between(
                    customer, MERCHANT_NODE)
                too_far = round_trip > vehicle.endurance_L + TOLERANCE
                if too_far and len(current) > 1 and not last_vehicle:
                    continue
                candidates.append((leg, customer))
            if not candidates:
                break
            leg, nearest = min(candidates)
            current.append(nearest)
            load += instance.demand(nearest)
            distance += leg
            unvisited.remove(nearest)
        routes.append(Route(len(routes), tuple(current), closed=True))
    return routes


def nearest_neighbor_order(
    instance: Instance, dm: DistanceMatrix,
) -> Chromosome:
    """Return the customers in the order the nearest-neighbor baseline visits."""
    return tuple(
        customer
        for route in nearest_neighbor_routes(instance, dm)
        for customer in route.customers
    )


def baseline_solve(
    instance: Instance, metric: Metric = Metric.EUCLIDEAN,
) -> Solution:
    """Solve the way an experienced courier would: nearest first, then home.

    Raises Infeasible when the closed routes need more vehicles than the
    fleet has.
    """
    require_solvable(instance)
    dm = build_distance_matrix(instance, metric)
    routes = nearest_neighbor_routes(instance, dm)
    if len(routes) > instance.fleet_size_v:
        msg = (f"nearest-neighbor routes need {len(routes)} vehicles, "
               f"fleet has {instance.fleet_size_v} vehicle(s)")
        raise exceptions.Infeasible(msg)
    return build_solution(routes, instance, dm)


def set_partitions(
    items: list[int], max_blocks: int,
) -> Iterator[list[list[int]]]:
    """Yield every partition of items into at most max_blocks blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest, max_blocks):
        for i in range(len(partition)):
            yield [*partition[:i], [first, *partition[i]], *partition[i + 1:]]
        if len(partition) < max_blocks:
            yield [[first], *partition]


def _better(candidate: tuple[float, str], best: tuple[float, str]) -> bool:
    """Return True if candidate beats best: lower Z, then smaller string."""
    if candidate[0] < best[0] - TOLERANCE:
        return True
    return abs(candidate[0] - best[0]) <= TOLERANCE and candidate[1] < best[1]


class _BestRouteCache:
    """Cheapest ordering of every customer subset, computed on demand."""

    def __init__(
        self, instance: Instance, dm: DistanceMatrix, *, closed: bool,
    ) -> None:
        self.instance = instance
        self.dm = dm
        self.closed = closed
        self.best: dict[tuple[int, ...], tuple[float, str, Route] | None] = {}

    def __call__(
        self, subset: tuple[int, ...],
    ) -> tuple[float, str, Route] | None:
        """Return (Z share, route string, route) or None if overloaded."""
        if subset not in self.best:
            self.best[subset] = self._search(subset)
        return self.best[subset]

    def _search(self, subset: tuple[int, ...]) -> tuple[float, str, Route] | None:
        load = sum(self.instance.demand(node) for node in subset)
        if load > self.instance.vehicle.capacity_Q + TOLERANCE:
            return None
        best: tuple[float, str, Route] | None = None
        for ordering in itertools.permutations(subset):
            route = Route(0, (MERCHANT_NODE, *ordering), closed=self.closed)
            z = route_cost(route, self.instance, self.dm).total_z
            candidate = (z, format_route(route), route)
            if best is None or _better(candidate[:2], best[:2]):
                best = candidate
        return best


def oracle_solve(
    instance: Instance,
    max_customers: int = DEFAULT_ORACLE_CAP,
    *,
    closed: bool = False,
    metric: Metric = Metric.EUCLIDEAN,
) -> Solution:
    """Find the minimum-Z solution by exhaustive enumeration.

    Every partition of the customers into at most fleet_size_v routes is
    tried with every ordering inside each route. Z is a sum of per-route
    shares, so the best ordering of each subset is searched once and
    reused. Ties go to the lexicographically smallest route string.
    """
    require_solvable(instance)
    if instance.n_customers > max_customers:
        msg = (f"oracle is capped at {max_customers} customers, instance "
               f"{instance.name} has {instance.n_customers}")
        raise exceptions.InstanceTooLarge(msg)
    dm = build_distance_matrix(instance, metric)
    best_route = _BestRouteCache(instance, dm, closed=closed)

    best: tuple[float, str] | None = None
    best_routes: list[Route] = []
    partitions = 0
    for partition in set_partitions(
            list(instance.customer_nodes), instance.fleet_size_v):
        partitions += 1
        pieces = [best_route(tuple(sorted(block))) for block in partition]
        if any(piece is None for piece in pieces):
            continue
        pieces.sort(key=lambda piece: piece[1])
        candidate = (
            sum(piece[0] for piece in pieces),
            " ".join(piece[1] for piece in pieces),
        )
        if best is None or _better(candidate, best):
            best = candidate
            best_routes = [piece[2] for piece in pieces]

    logger.info(
        "%s: oracle tried %d partitions over %d subsets",
        instance.name, partitions, len(best_route.best),
    )
    if best is None:
        msg = (f"no partition fits the orders into "
               f"{instance.fleet_size_v} vehicle(s)")
        raise exceptions.Infeasible(msg)
    routes = [
        Route(index, route.nodes, closed=route.closed)
        for index, route in enumerate(best_routes)
    ]
    return build_solution(routes, instance, dm)


def improvement(baseline: float, ga: float) -> float | None:
    """Return the percentage by which ga improves on baseline, if defined."""
    if not baseline > 0:
        return None
    return (baseline - ga) / baseline * 100


@dataclass(frozen=True)
class ComparisonRow:
    """Baseline and GA results for one instance."""

    instance: str
    baseline_z: float
    ga_z: float
    baseline_time: float
    ga_time: float
    baseline_dist: float
    ga_dist: float

    @property
    def impr_z_pct(self) -> float | None:
        """Improvement in Z, in percent of the baseline."""
        return improvement(self.baseline_z, self.ga_z)

    @property
    def impr_time_pct(self) -> float | None:
        """Improvement in total travel time, in percent of the baseline."""
        return improvement(self.baseline_time, self.ga_time)

    @property
    def impr_dist_pct(self) -> float | None:
        """Improvement in distance, in percent of the baseline."""
        return improvement(self.baseline_dist, self.ga_dist)


@dataclass(frozen=True)
class ComparisonReport:
    """Rows of baseline-versus-GA results, ordered by instance id."""

    rows: tuple[ComparisonRow, ...]

    def _mean(self, field: str) -> float:
        if not self.rows:
            return 0.0
        return sum(getattr(row, field) for row in self.rows) / len(self.rows)

    @property
    def mean_baseline_z(self) -> float:
        """Mean baseline Z over all rows."""
        return self._mean("baseline_z")

    @property
    def mean_ga_z(self) -> float:
        """Mean GA Z over all rows."""
        return self._mean("ga_z")

    @property
    def mean_baseline_time(self) -> float:
        return self._mean("baseline_time")

    @property
    def mean_ga_time(self) -> float:
        return self._mean("ga_time")

    @property
    def mean_baseline_dist(self) -> float:
        return self._mean("baseline_dist")

    @property
    def mean_ga_dist(self) -> float:
        return self._mean("ga_dist")

    @property
    def ga_not_worse_share(self) -> float:
        """Share of rows where the GA is at least as good as the baseline."""
        if not self.rows:
            return 0.0
        wins = sum(
            1 for row in self.rows if row.ga_z <= row.baseline_z + TOLERANCE)
        return wins / len(self.rows)


def compare(
    instance: Instance,
    ga_config: GaConfig,
    metric: Metric = Metric.EUCLIDEAN,
) -> ComparisonRow:
    """Solve an instance with the baseline and the GA and report both."""
    from genetic import solve

    baseline = baseline_solve(instance, metric)
    ga = solve(instance, ga_config, metric).best_solution
    return ComparisonRow(
        instance=instance.name,
        baseline_z=baseline.cost.total_z,
        ga_z=ga.cost.total_z,
        baseline_time=baseline.schedule.total_travel_time,
        ga_time=ga.schedule.total_travel_time,
        baseline_dist=baseline.total_distance,
        ga_dist=ga.total_distance,
    )


def compare_corpus(
    instances: Iterable[Instance],
    ga_config: GaConfig,
    metric: Metric = Metric.EUCLIDEAN,
    workers: int = 1,
) -> ComparisonReport:
    """Compare every instance, optionally on a process pool."""
    instances = list(instances)
    if workers > 1:
        ga_config = ga_config.replace(workers=1)
        run = partial(compare, ga_config=ga_config, metric=metric)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, instances))
    else:
        rows = [compare(i, ga_config, metric) for i in instances]
    return ComparisonReport(rows=tuple(sorted(rows, key=lambda r: r.instance)))
