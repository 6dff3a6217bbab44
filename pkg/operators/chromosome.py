"""Chromosomes are customer permutations the GA operators work on."""
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from instance import Instance

Chromosome = tuple[int, ...]
"""Customer node indices in visiting order, each exactly once."""


def is_valid(chrom: Chromosome, instance: Instance) -> bool:
    """Return True if chrom is a permutation of the instance's customers."""
    return sorted(chrom) == list(instance.customer_nodes)
