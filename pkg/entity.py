"""Plain data describing the things a delivery instance is made of.

The instance that ties them together lives in instance.py.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Location:
    """A point on the plane, in abstract distance units."""

    x: float
    y: float

    @property
    def is_finite(self) -> bool:
        """Return True if both coordinates are finite numbers."""
        return math.isfinite(self.x) and math.isfinite(self.y)

    def distance(self, other: Location) -> float:
        """Return the straight-line distance to another location."""
        return math.hypot(other.x - self.x, other.y - self.y)


@dataclass(frozen=True)
class TimeWindow:
    """Expected arrival window [a, b] and the penalty cutoff c."""

    a: float
    b: float
    c: float

    def violations(self) -> list[str]:
        """Return which of 0 <= a <= b <= c do not hold."""
        broken = []
        if not self.a >= 0:
            broken.append("window: 0 ≤ a violated")
        if not self.a <= self.b:
            broken.append("window: a ≤ b violated")
        if not self.b <= self.c:
            broken.append("window: b ≤ c violated")
        return broken


@dataclass(frozen=True)
class Merchant:
    """A restaurant that orders are picked up from."""

    id: str
    location: Location


@dataclass(frozen=True)
class Order:
    """A single customer order.

    Each order is delivered to its own customer node. 'placed_at' is the
    placement time in minutes from midnight, used only for batching.
    """

    id: str
    merchant_id: str
    customer_location: Location
    quantity: int
    window: TimeWindow
    placed_at: float | None = None


@dataclass(frozen=True)
class VehicleSpec:
    """Capacity, endurance, costs and speed of one (homogeneous) vehicle."""

    capacity_Q: float  # noqa: N815
    endurance_L: float  # noqa: N815
    fixed_cost_r: float
    unit_distance_cost_o: float
    unit_weight_q: float
    speed: float = 1.0
    service_time: float = 0.0

    def violations(self) -> list[str]:
        """Return the fields that are not strictly positive."""
        broken = [
            f"vehicle: {name} > 0 violated"
            for name in (
                "capacity_Q",
                "endurance_L",
                "fixed_cost_r",
                "unit_distance_cost_o",
                "unit_weight_q",
                "speed",
            )
            if not getattr(self, name) > 0
        ]
        if not self.service_time >= 0:
            broken.append("vehicle: service_time ≥ 0 violated")
        return broken


@dataclass(frozen=True)
class CostParams:
    """Penalty amounts for endurance overruns and window violations."""

    distance_penalty_cL: float  # noqa: N815
    early_coeff: float = 0.5
    late_coeff: float = 1.5

    def violations(self) -> list[str]:
        """Return the fields that are negative."""
        return [
            f"costs: {name} ≥ 0 violated"
            for name in ("distance_penalty_cL", "early_coeff", "late_coeff")
            if not getattr(self, name) >= 0
        ]
