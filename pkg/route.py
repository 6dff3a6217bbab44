"""Routes: the node sequence one vehicle drives."""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

import exceptions

if TYPE_CHECKING:
    from instance import DistanceMatrix, Instance


@dataclass(frozen=True)
class Route:
    """A merchant node followed by the customer nodes it serves, in order.

    Open routes end at their last customer. Closed routes drive back to the
    merchant at the end.
    """

    vehicle_index: int
    nodes: tuple[int, ...]
    closed: bool = False

    @property
    def merchant(self) -> int:
        """The node the route starts from."""
        return self.nodes[0]

    @property
    def customers(self) -> tuple[int, ...]:
        """The customer nodes in visiting order."""
        return self.nodes[1:]

    @property
    def is_empty(self) -> bool:
        """Return True if the route serves no customer."""
        return len(self.nodes) < 2  # noqa: PLR2004

    @property
    def path(self) -> tuple[int, ...]:
        """Every node driven through, including the return for closed routes."""
        if self.closed and not self.is_empty:
            return (*self.nodes, self.nodes[0])
        return self.nodes


def format_route(route: Route) -> str:
    """Return the route as a node string such as "0 - 1 - 2".

    Closed routes end with their merchant again ("0 - 1 - 2 - 0").
    """
    return " - ".join(str(node) for node in route.path)


def route_distance(route: Route, dm: DistanceMatrix) -> float:
    """Return the distance driven along a route.

    Closed routes include the final arc back to their merchant.
    """
    path = np.asarray(route.path, dtype=np.intp)
    if path.size and (path.min() < 0 or path.max() >= dm.size):
        bad = next(n for n in route.path if not 0 <= n < dm.size)
        msg = f"route {route.vehicle_index} has unknown node {bad}"
        raise exceptions.UnknownNode(msg)
    if path.size < 2:  # noqa: PLR2004
        return 0.0
    return float(dm.distances[path[:-1], path[1:]].sum())


def route_load(route: Route, instance: Instance) -> float:
    """Return the weight a vehicle carries when it leaves the merchant."""
    return sum(instance.demand(node) for node in route.customers)
