"""Swap mutation."""
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import numpy as np

    from operators.chromosome import Chromosome


def mutate(
    chrom: Chromosome, rate: float, rng: np.random.Generator,
) -> Chromosome:
    """With probability 'rate', swap two distinct random positions."""
    if len(chrom) < 2 or not rng.random() < rate:  # noqa: PLR2004
        return chrom
    i, j = rng.choice(len(chrom), size=2, replace=False).tolist()
    genes = list(chrom)
    genes[i], genes[j] = genes[j], genes[i]
    return tuple(genes)
