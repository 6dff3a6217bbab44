"""Problem instance with its node table and distance matrix."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from metric import Metric
from node_types import new_node, node_dt

if TYPE_CHECKING:
    from entity import CostParams, Merchant, Order, VehicleSpec


@dataclass(frozen=True)
class Instance:
    """Merchants, orders, vehicle and cost parameters of one problem.

    Node indices follow the distance matrix: merchants come first, then one
    customer node per order in order-list order. For a single-merchant
    instance that makes the merchant node 0 and the customers 1..n.
    """

    merchants: tuple[Merchant, ...]
    orders: tuple[Order, ...]
    vehicle: VehicleSpec
    costs: CostParams
    fleet_size_v: int
    name: str = field(default="instance", compare=False)

    @property
    def n_merchants(self) -> int:
        """Number of merchant nodes."""
        return len(self.merchants)

    @property
    def n_customers(self) -> int:
        """Number of customer nodes (one per order)."""
        return len(self.orders)

    @property
    def customer_nodes(self) -> range:
        """Node indices of all customers."""
        return range(self.n_merchants, self.n_merchants + self.n_customers)

    def is_merchant_node(self, node: int) -> bool:
        """Return True if the node index refers to a merchant."""
        return 0 <= node < self.n_merchants

    def order_at(self, node: int) -> Order:
        """Return the order delivered at a customer node."""
        return self.orders[node - self.n_merchants]

    def demand(self, node: int) -> float:
        """Return the load a customer node puts on a vehicle."""
        return float(self.node_table["demand"][node])

    @cached_property
    def node_table(self) -> np.ndarray:
        """Return all nodes as a structured array (see node_types)."""
        rows = [
            new_node(x=m.location.x, y=m.location.y, is_merchant=True)
            for m in self.merchants
        ]
        rows.extend(
            new_node(
                x=o.customer_location.x,
                y=o.customer_location.y,
                demand=o.quantity * self.vehicle.unit_weight_q,
                a=o.window.a,
                b=o.window.b,
                c=o.window.c,
            )
            for o in self.orders
        )
        return np.array(rows, dtype=node_dt).reshape(len(rows))


@dataclass(frozen=True)
class DistanceMatrix:
    """Square matrix of pairwise node distances, merchants first."""

    distances: np.ndarray
    metric: Metric = Metric.EUCLIDEAN

    @property
    def size(self) -> int:
        """Number of nodes covered by the matrix."""
        return int(self.distances.shape[0])

    def between(self, i: int, j: int) -> float:
        """Return the distance from node i to node j."""
        return float(self.distances[i, j])


def build_distance_matrix(
    instance: Instance, metric: Metric = Metric.EUCLIDEAN,
) -> DistanceMatrix:
    """Compute the distance between every pair of nodes of an instance."""
    table = instance.node_table
    points = np.stack([table["x"], table["y"]], axis=-1)
    delta = points[:, np.newaxis, :] - points[np.newaxis, :, :]
    if metric is Metric.MANHATTAN:
        distances = np.abs(delta).sum(axis=-1)
    else:
        distances = np.sqrt((delta**2).sum(axis=-1))
    distances.setflags(write=False)
    return DistanceMatrix(distances=distances, metric=metric)


def validate_instance(instance: Instance) -> list[str]:  # noqa: C901
    """Return every broken invariant of an instance.

    An empty list means the instance is well formed. Nothing is raised.
    """
    violations: list[str] = []

    if not instance.merchants:
        violations.append("instance: at least 1 merchant required")
    if not instance.orders:
        violations.append("instance: at least 1 order required")
    if instance.fleet_size_v < 1:
        violations.append("instance: fleet_size_v ≥ 1 violated")

    merchant_ids = Counter(m.id for m in instance.merchants)
    for merchant_id, count in merchant_ids.items():
        if count > 1:
            violations.append(f"merchant {merchant_id}: id is not unique")
    for merchant in instance.merchants:
        if not merchant.location.is_finite:
            violations.append(
                f"merchant {merchant.id}: location must be finite")

    order_ids = Counter(o.id for o in instance.orders)
    for order_id, count in order_ids.items():
        if count > 1:
            violations.append(f"order {order_id}: id is not unique")
    for order in instance.orders:
        if order.quantity < 1:
            violations.append(f"order {order.id}: quantity ≥ 1 violated")
        if order.merchant_id not in merchant_ids:
            violations.append(
                f"order {order.id}: merchant {order.merchant_id} not found")
        if not order.customer_location.is_finite:
            violations.append(f"order {order.id}: location must be finite")
        if not all(math.isfinite(v) for v in (
                order.window.a, order.window.b, order.window.c)):
            violations.append(f"order {order.id} window: values must be finite")
        violations.extend(
            f"order {order.id} {broken}" for broken in order.window.violations()
        )

    violations.extend(instance.vehicle.violations())
    violations.extend(instance.costs.violations())
    return violations
