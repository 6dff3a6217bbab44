"""Time-segment allocation of orders into per-merchant sub-instances."""
from __future__ import annotations

import dataclasses
import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from entity import Order
    from instance import Instance

logger = logging.getLogger(__name__)


def clock(minutes: float) -> str:
    """Format minutes from midnight as HH:MM."""
    hours, rest = divmod(int(minutes), 60)
    return f"{hours:02d}:{rest:02d}"


@dataclass(frozen=True)
class BatchSpec:
    """Slot length and ordering horizon, all in minutes from midnight."""

    slot_length: float
    horizon_start: float
    horizon_end: float

    def __post_init__(self) -> None:
        """Reject empty slots and empty horizons."""
        if not self.slot_length > 0:
            msg = f"slot_length must be positive, got {self.slot_length}"
            raise ValueError(msg)
        if not self.horizon_start < self.horizon_end:
            msg = (f"horizon start {self.horizon_start} must come before "
                   f"end {self.horizon_end}")
            raise ValueError(msg)

    @property
    def slot_count(self) -> int:
        """Number of slots needed to cover the horizon."""
        return math.ceil(
            (self.horizon_end - self.horizon_start) / self.slot_length)

    def slot_of(self, placed_at: float) -> int | None:
        """Return the slot an order placed at this time belongs to.

        The horizon end is inclusive. None means outside the horizon.
        """
        if not self.horizon_start <= placed_at <= self.horizon_end:
            return None
        slot = math.floor((placed_at - self.horizon_start) / self.slot_length)
        return min(slot, self.slot_count - 1)

    def slot_start(self, slot: int) -> float:
        """Return the time a slot opens."""
        return self.horizon_start + slot * self.slot_length


@dataclass(frozen=True)
class Batch:
    """One single-merchant sub-instance and the slot it was cut from."""

    slot: int
    merchant_id: str
    instance: Instance


@dataclass(frozen=True)
class BatchResult:
    """Sub-instances in (slot, merchant) order, and the rejected orders."""

    batches: tuple[Batch, ...]
    rejects: tuple[tuple[Order, str], ...]


def batch_orders(instance: Instance, spec: BatchSpec) -> BatchResult:
    """Group orders by placement slot, then by merchant.

    Every order inside the horizon lands in exactly one sub-instance;
    orders outside it, or without a placement time, are rejected with a
    reason instead of being dropped.
    """
    groups: dict[tuple[int, int], list[Order]] = {}
    rejects: list[tuple[Order, str]] = []
    merchant_rank = {m.id: i for i, m in enumerate(instance.merchants)}

    for order in instance.orders:
        if order.placed_at is None:
            rejects.append((order, "no placement time"))
            continue
        slot = spec.slot_of(order.placed_at)
        if slot is None:
            rejects.append((
                order,
                f"placed at {clock(order.placed_at)} outside "
                f"{clock(spec.horizon_start)}-{clock(spec.horizon_end)}",
            ))
            continue
        if order.merchant_id not in merchant_rank:
            rejects.append((order, f"unknown merchant {order.merchant_id}"))
            continue
        key = (slot, merchant_rank[order.merchant_id])
        groups.setdefault(key, []).append(order)

    batches = []
    for (slot, rank), orders in sorted(groups.items()):
        merchant = instance.merchants[rank]
        sub_instance = dataclasses.replace(
            instance,
            merchants=(merchant,),
            orders=tuple(orders),
            name=f"{merchant.id}@{clock(spec.slot_start(slot))}",
        )
        batches.append(Batch(slot, merchant.id, sub_instance))

    for order, reason in rejects:
        logger.warning("order %s rejected: %s", order.id, reason)
    return BatchResult(batches=tuple(batches), rejects=tuple(rejects))
