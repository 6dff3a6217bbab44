"""Tournament selection."""
from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    import numpy as np


def tournament(
    costs: Sequence[float], size: int, rng: np.random.Generator,
) -> int:
    """Return the population index that wins a tournament of 'size' entrants.

    The lowest cost wins; on equal cost the earlier index wins.
    """
    entrants = rng.choice(len(costs), size=size, replace=False)
    return min(entrants.tolist(), key=lambda i: (costs[i], i))


def rank(costs: Sequence[float]) -> list[int]:
    """Return population indices from best (lowest cost) to worst."""
    return sorted(range(len(costs)), key=lambda i: (costs[i], i))
