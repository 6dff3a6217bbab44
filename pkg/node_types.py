"""Define the node table layout shared by the distance and cost code."""
from __future__ import annotations

import numpy as np

# One row per node: merchants first, then one customer node per order.
node_dt = np.dtype(
    [
        ("x", np.float64),
        ("y", np.float64),
        ("demand", np.float64),  # quantity * unit weight, 0 for merchants
        ("a", np.float64),  # Earliest expected arrival.
        ("b", np.float64),  # Latest expected arrival.
        ("c", np.float64),  # Penalty cutoff.
        ("is_merchant", np.bool_),
    ],
)


def new_node(  # noqa: PLR0913
    *,  # Enforce the use of keywords, so that parameter order doesn't matter.
    x: float,
    y: float,
    demand: float = 0.0,
    a: float = 0.0,
    b: float = 0.0,
    c: float = 0.0,
    is_merchant: bool = False,
) -> np.ndarray:
    """Define a single node row."""
    return np.array((x, y, demand, a, b, c, is_merchant), dtype=node_dt)
