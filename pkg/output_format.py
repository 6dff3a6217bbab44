"""Enum to select how command results are printed."""
from enum import Enum


class OutputFormat(Enum):
    """Printable result formats."""

    TEXT = "text"
    CSV = "csv"
    JSON = "json"
