"""Order crossover (OX) for permutation chromosomes."""
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import numpy as np

    from operators.chromosome import Chromosome


def order_crossover(
    keep: Chromosome, fill: Chromosome, start: int, end: int,
) -> Chromosome:
    """Return a child that keeps keep[start:end] in place.

    The remaining positions are filled left to right with the customers of
    'fill' that are not in the kept segment, in the order 'fill' has them.
    """
    segment = keep[start:end]
    kept = set(segment)
    rest = iter(gene for gene in fill if gene not in kept)
    head = [next(rest) for _ in range(start)]
    tail = list(rest)
    return (*head, *segment, *tail)


def crossover(
    p1: Chromosome, p2: Chromosome, rng: np.random.Generator,
) -> tuple[Chromosome, Chromosome]:
    """Cross two parents over one random segment, returning two children."""
    if len(p1) != len(p2):
        msg = f"parents differ in length ({len(p1)} != {len(p2)})"
        raise ValueError(msg)
    start, end = sorted(rng.choice(len(p1) + 1, size=2, replace=False).tolist())
    return (
        order_crossover(p1, p2, start, end),
        order_crossover(p2, p1, start, end),
    )
