"""Split a customer permutation into open routes."""
from __future__ import annotations

from typing import TYPE_CHECKING

import exceptions
from cost_engine import TOLERANCE
from instance import validate_instance
from route import Route

if TYPE_CHECKING:
    from instance import DistanceMatrix, Instance
    from operators.chromosome import Chromosome

MERCHANT_NODE = 0


def check_loads(instance: Instance) -> None:
    """Raise Infeasible if some order alone is heavier than a vehicle allows."""
    capacity = instance.vehicle.capacity_Q
    for node in instance.customer_nodes:
        load = instance.demand(node)
        if load > capacity + TOLERANCE:
            order = instance.order_at(node)
            msg = (f"order {order.id} load {load:g} exceeds capacity "
                   f"Q {capacity:g}")
            raise exceptions.Infeasible(msg)


def require_solvable(instance: Instance) -> None:
    """Raise unless the instance is valid, single-merchant and loadable."""
    violations = validate_instance(instance)
    if violations:
        raise exceptions.InvalidInstance(violations)
    if instance.n_merchants != 1:
        msg = (f"instance has {instance.n_merchants} merchants; split it "
               "per merchant (see batching) before solving")
        raise exceptions.UnsupportedInstance(msg)
    check_loads(instance)


def decode(
    chrom: Chromosome, instance: Instance, dm: DistanceMatrix,
) -> list[Route]:
    """Greedily cut a permutation into open routes, left to right.

    A customer joins the current route unless that would push its load over
    capacity_Q or its open distance over endurance_L, in which case a new
    route starts at the merchant. Endurance is a soft limit, so once the
    fleet is fully used only capacity can open another route.
    """
    if instance.n_merchants != 1:
        msg = "decoding needs a single-merchant instance"
        raise exceptions.UnsupportedInstance(msg)
    check_loads(instance)

    vehicle = instance.vehicle
    routes: list[Route] = []
    current = [MERCHANT_NODE]
    load = 0.0
    distance = 0.0

    for customer in chrom:
        demand = instance.demand(customer)
        leg = dm.between(current[-1], customer)
        over_capacity = load + demand > vehicle.capacity_Q + TOLERANCE
        over_endurance = (
            distance + leg > vehicle.endurance_L + TOLERANCE
            and len(routes) + 1 < instance.fleet_size_v
        )
        if len(current) > 1 and (over_capacity or over_endurance):
            routes.append(Route(len(routes), tuple(current)))
            current = [MERCHANT_NODE]
            load = 0.0
            distance = 0.0
            leg = dm.between(MERCHANT_NODE, customer)
        current.append(customer)
        load += demand
        distance += leg

    if len(current) > 1:
        routes.append(Route(len(routes), tuple(current)))
    return routes
