"""Procedural generation of synthetic delivery instances."""

from __future__ import annotations

import random

from entity import (
    CostParams,
    Location,
    Merchant,
    Order,
    TimeWindow,
    VehicleSpec,
)
from instance import Instance
from window_style import WindowStyle

# Window width per style, as a multiple of the spread.
window_width_by_style = {
    WindowStyle.TIGHT: 1.0,
    WindowStyle.NORMAL: 4.0,
    WindowStyle.WIDE: 10.0,
}

max_quantity = 5

# Ordering period 11:30-18:30, in minutes from midnight.
ordering_period = (690, 1110)

COORDINATE_DIGITS = 3


def default_vehicle(spread: float) -> VehicleSpec:
    """Return the vehicle used for generated instances of a given spread."""
    return VehicleSpec(
        capacity_Q=15.0,
        endurance_L=4.0 * spread,
        fixed_cost_r=20.0,
        unit_distance_cost_o=1.0,
        unit_weight_q=1.0,
        speed=1.0,
    )


default_costs = CostParams(distance_penalty_cL=50.0)


def generate_instance(
    seed: int,
    n_customers: int,
    spread: float = 10.0,
    window_style: WindowStyle = WindowStyle.NORMAL,
) -> Instance:
    """Generate a single-merchant instance, the same one for the same seed.

    The merchant sits at the origin and customers are uniform in the square
    [-spread, spread]^2. Each window [a, a + w] with cutoff a + 2w opens no
    earlier than the customer can be reached directly.
    """
    if n_customers < 1:
        msg = f"n_customers must be at least 1, got {n_customers}"
        raise ValueError(msg)
    if not spread > 0:
        msg = f"spread must be positive, got {spread}"
        raise ValueError(msg)

    rng = random.Random(seed)  # noqa: S311
    vehicle = default_vehicle(spread)
    width = window_width_by_style[window_style] * spread
    merchant = Merchant(id="m1", location=Location(0.0, 0.0))

    orders = []
    for i in range(1, n_customers + 1):
        location = Location(
            round(rng.uniform(-spread, spread), COORDINATE_DIGITS),
            round(rng.uniform(-spread, spread), COORDINATE_DIGITS),
        )
        direct = merchant.location.distance(location) / vehicle.speed
        a = round(direct + rng.uniform(0.0, width), COORDINATE_DIGITS)
        orders.append(Order(
            id=f"o{i}",
            merchant_id=merchant.id,
            customer_location=location,
            quantity=rng.randint(1, max_quantity),
            window=TimeWindow(a=a, b=a + width, c=a + 2 * width),
            placed_at=float(rng.randint(*ordering_period)),
        ))

    return Instance(
        merchants=(merchant,),
        orders=tuple(orders),
        vehicle=vehicle,
        costs=default_costs,
        fleet_size_v=n_customers,
        name=f"gen-{seed}-{n_customers}",
    )
