"""Enum to define how generous generated time windows are."""
from enum import Enum


class WindowStyle(Enum):
    """Width of generated windows, as a multiple of the instance spread."""

    TIGHT = "tight"
    NORMAL = "normal"
    WIDE = "wide"
