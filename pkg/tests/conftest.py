"""Shared fixtures: small hand-built instances."""
from __future__ import annotations

import os
import sys
from typing import Callable, Sequence

import pytest

# The modules live flat at the repository root.
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from entity import (  # noqa: E402
    CostParams,
    Location,
    Merchant,
    Order,
    TimeWindow,
    VehicleSpec,
)
from instance import Instance  # noqa: E402

WIDE = TimeWindow(a=0.0, b=1000.0, c=2000.0)

InstanceFactory = Callable[..., Instance]


def build_instance(  # noqa: PLR0913
    customers: Sequence[tuple[float, float]],
    *,
    quantities: Sequence[int] | None = None,
    windows: Sequence[TimeWindow] | None = None,
    merchant: tuple[float, float] = (0.0, 0.0),
    capacity: float = 100.0,
    endurance: float = 1000.0,
    fixed_cost: float = 10.0,
    unit_cost: float = 1.0,
    unit_weight: float = 1.0,
    speed: float = 1.0,
    distance_penalty: float = 50.0,
    fleet_size: int | None = None,
    placed_at: Sequence[float | None] | None = None,
    name: str = "test",
) -> Instance:
    """Return a single-merchant instance with one order per customer point."""
    n = len(customers)
    quantities = quantities or [1] * n
    windows = windows or [WIDE] * n
    placed_at = placed_at or [None] * n
    orders = tuple(
        Order(
            id=f"q{i + 1}",
            merchant_id="m1",
            customer_location=Location(*xy),
            quantity=quantities[i],
            window=windows[i],
            placed_at=placed_at[i],
        )
        for i, xy in enumerate(customers)
    )
    return Instance(
        merchants=(Merchant("m1", Location(*merchant)),),
        orders=orders,
        vehicle=VehicleSpec(
            capacity_Q=capacity,
            endurance_L=endurance,
            fixed_cost_r=fixed_cost,
            unit_distance_cost_o=unit_cost,
            unit_weight_q=unit_weight,
            speed=speed,
        ),
        costs=CostParams(distance_penalty_cL=distance_penalty),
        fleet_size_v=fleet_size or max(n, 1),
        name=name,
    )


@pytest.fixture
def make_instance() -> InstanceFactory:
    """Factory for single-merchant test instances."""
    return build_instance


@pytest.fixture
def corner_instance() -> Instance:
    """Merchant at the origin, customers at (3, 0) and (3, 4)."""
    return build_instance([(3.0, 0.0), (3.0, 4.0)])
