"""Enum to select how distances between nodes are measured."""
from enum import Enum


class Metric(Enum):
    """Planar distance metrics (euclidean is the default)."""

    EUCLIDEAN = "euclidean"
    MANHATTAN = "manhattan"
