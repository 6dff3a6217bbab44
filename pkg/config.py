"""Handle the loading and defaults of genetic algorithm settings."""
from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import exceptions


@dataclass(frozen=True)
class GaConfig:
    """Population size, operator rates, seed and stopping rule of a GA run.

    'workers' > 1 evaluates each generation on a process pool. The
    sequential mode (workers == 1) defines the canonical output for a seed.
    """

    population_size: int = 100
    max_generations: int = 500
    crossover_rate: float = 0.9
    mutation_rate: float = 0.15
    tournament_size: int = 3
    elitism_count: int = 2
    seed: int = 0
    stall_generations: int = 100
    workers: int = 1

    def violations(self) -> list[str]:
        """Return every broken setting."""
        broken = []
        if self.population_size < 2:  # noqa: PLR2004
            broken.append("population_size ≥ 2 violated")
        if self.max_generations < 0:
            broken.append("max_generations ≥ 0 violated")
        for name in ("crossover_rate", "mutation_rate"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                broken.append(f"{name} in [0, 1] violated")
        if not 1 <= self.tournament_size <= self.population_size:
            broken.append("1 ≤ tournament_size ≤ population_size violated")
        if not 0 <= self.elitism_count < self.population_size:
            broken.append("0 ≤ elitism_count < population_size violated")
        if not 0 <= self.seed < 2**64:
            broken.append("seed must be a 64-bit unsigned integer")
        if self.stall_generations < 1:
            broken.append("stall_generations ≥ 1 violated")
        if self.workers < 1:
            broken.append("workers ≥ 1 violated")
        return broken

    def replace(self, **changes: Any) -> GaConfig:  # noqa: ANN401
        """Return a copy with the given fields changed and checked."""
        config = dataclasses.replace(self, **changes)
        config.check()
        return config

    def check(self) -> None:
        """Raise InvalidConfig if any setting is broken."""
        broken = self.violations()
        if broken:
            raise exceptions.InvalidConfig("; ".join(broken))


_INT_FIELDS = {
    f.name for f in dataclasses.fields(GaConfig) if f.type in ("int", int)
}


def ga_config_from_mapping(data: dict[str, Any]) -> GaConfig:
    """Build a GaConfig from a mapping of field names, rejecting extras."""
    known = {f.name for f in dataclasses.fields(GaConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        msg = f"unknown GA config field(s): {', '.join(unknown)}"
        raise exceptions.InvalidConfig(msg)
    for name, value in data.items():
        wrong_int = name in _INT_FIELDS and (
            isinstance(value, bool) or not isinstance(value, int))
        wrong_float = not isinstance(value, (int, float)) or isinstance(
            value, bool)
        if wrong_int or wrong_float:
            msg = f"GA config field {name} has invalid value {value!r}"
            raise exceptions.InvalidConfig(msg)
    config = GaConfig(**data)
    config.check()
    return config


def load_ga_config(filename: str | Path) -> GaConfig:
    """Load a GaConfig from a JSON object stored in a file."""
    try:
        data = json.loads(Path(filename).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        msg = (f"{filename}: parse error at line {exc.lineno} "
               f"column {exc.colno}: {exc.msg}")
        raise exceptions.InvalidConfig(msg) from exc
    if not isinstance(data, dict):
        msg = f"{filename}: GA config must be a JSON object"
        raise exceptions.InvalidConfig(msg)
    return ga_config_from_mapping(data)
