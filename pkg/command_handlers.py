"""Handle each command line subcommand."""
from __future__ import annotations

import dataclasses
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING

import baseline
import genetic
import instance_file
import render_functions
from batching import BatchSpec, batch_orders, clock
from config import GaConfig, load_ga_config
from metric import Metric
from output_format import OutputFormat
from procgen import generate_instance
from window_style import WindowStyle

if TYPE_CHECKING:
    import argparse

    from cost_engine import Solution
    from instance import Instance
    from message_log import MessageLog


class BaseCommandHandler:
    """Base class for a subcommand; 'handle' returns the exit code."""

    def __init__(
        self, args: argparse.Namespace, message_log: MessageLog,
    ) -> None:
        """Initialize a handler with parsed arguments and a message log."""
        self.args = args
        self.message_log = message_log

    @property
    def metric(self) -> Metric:
        """Distance metric chosen with --metric."""
        return Metric(self.args.metric)

    @property
    def output_format(self) -> OutputFormat:
        """Output format chosen with --format."""
        return OutputFormat(self.args.format)

    @property
    def ga_config(self) -> GaConfig:
        """GA settings from --config, with --seed and --workers applied."""
        config = load_ga_config(self.args.config) if self.args.config \
            else GaConfig()
        changes = {}
        if self.args.seed is not None:
            changes["seed"] = self.args.seed
        if getattr(self.args, "workers", None) is not None:
            changes["workers"] = self.args.workers
        return config.replace(**changes)

    def load(self, path: str) -> Instance:
        """Load an instance file named on the command line."""
        return instance_file.load_instance(path)

    def write(self, text: str) -> None:
        """Write command output to stdout."""
        sys.stdout.write(text)

    def report_solution(self, instance: Instance, solution: Solution) -> None:
        """Print a solution row and note late customers in the log."""
        self.write(render_functions.render_solution(
            instance.name, solution, self.output_format))
        for node in solution.hard_late:
            self.message_log.add_message(
                f"{instance.name}: customer {node} reached after its cutoff c",
                logging.WARNING,
            )

    def handle(self) -> int:
        """Run the command; must be overridden by subclasses."""
        raise NotImplementedError


class GenerateHandler(BaseCommandHandler):
    """Write a synthetic instance."""

    def handle(self) -> int:
        """Generate the instance and save or print it."""
        instance = generate_instance(
            seed=self.args.seed or 0,
            n_customers=self.args.customers,
            spread=self.args.spread,
            window_style=WindowStyle(self.args.window_style),
        )
        if self.args.out:
            instance_file.save_instance(instance, self.args.out)
        else:
            self.write(instance_file.dumps_instance(instance))
        return 0


class SolveHandler(BaseCommandHandler):
    """Solve an instance with the genetic algorithm."""

    def handle(self) -> int:
        """Print the GA's best solution."""
        instance = self.load(self.args.instance)
        result = genetic.solve(instance, self.ga_config, self.metric)
        self.report_solution(instance, result.best_solution)
        return 0


class BaselineHandler(BaseCommandHandler):
    """Solve an instance with the closed-route nearest-neighbor baseline."""

    def handle(self) -> int:
        """Print the baseline solution."""
        instance = self.load(self.args.instance)
        self.report_solution(
            instance, baseline.baseline_solve(instance, self.metric))
        return 0


class OracleHandler(BaseCommandHandler):
    """Solve a small instance exactly."""

    def handle(self) -> int:
        """Print the optimal solution."""
        instance = self.load(self.args.instance)
        solution = baseline.oracle_solve(
            instance,
            self.args.max_customers,
            closed=self.args.closed,
            metric=self.metric,
        )
        self.report_solution(instance, solution)
        return 0


class BatchHandler(BaseCommandHandler):
    """Split an instance's orders by time slot and merchant."""

    def handle(self) -> int:
        """Write one instance file per batch and list the batches."""
        instance = self.load(self.args.instance)
        if self.args.orders:
            orders = instance_file.load_orders_csv(self.args.orders)
            instance = dataclasses.replace(instance, orders=tuple(orders))
        spec = BatchSpec(
            slot_length=self.args.slot_length,
            horizon_start=self.args.start,
            horizon_end=self.args.end,
        )
        result = batch_orders(instance, spec)

        out_dir = Path(self.args.out_dir) if self.args.out_dir else None
        if out_dir:
            out_dir.mkdir(parents=True, exist_ok=True)
        rows = []
        for batch in result.batches:
            path = ""
            if out_dir:
                stem = f"{batch.merchant_id}_{clock(spec.slot_start(batch.slot))}"
                path = str(out_dir / f"{stem.replace(':', '')}.json")
                instance_file.save_instance(batch.instance, path)
            rows.append({
                "batch": batch.instance.name,
                "orders": batch.instance.n_customers,
                "file": path or None,
            })
        self.write(render_functions.render_rows(
            ["batch", "orders", "file"], rows, self.output_format))
        return 0


class CompareHandler(BaseCommandHandler):
    """Compare the baseline against the GA on one or more instances."""

    def handle(self) -> int:
        """Print the comparison report."""
        instances = [self.load(path) for path in self.args.instances]
        config = self.ga_config
        report = baseline.compare_corpus(
            instances, config, self.metric, workers=config.workers)
        self.write(render_functions.render_comparison(
            report, self.output_format))
        return 0


class PlotHandler(BaseCommandHandler):
    """Draw a solution as an SVG route map."""

    def handle(self) -> int:
        """Solve with the chosen solver and write the SVG."""
        instance = self.load(self.args.instance)
        if self.args.solver == "baseline":
            solution = baseline.baseline_solve(instance, self.metric)
        elif self.args.solver == "oracle":
            solution = baseline.oracle_solve(
                instance, self.args.max_customers, metric=self.metric)
        else:
            solution = genetic.solve(
                instance, self.ga_config, self.metric).best_solution
        render_functions.emit_route_svg(
            solution, instance, self.args.out, self.metric)
        self.message_log.add_message(f"route map written to {self.args.out}")
        return 0


COMMAND_HANDLERS: dict[str, type[BaseCommandHandler]] = {
    "gen": GenerateHandler,
    "solve": SolveHandler,
    "baseline": BaselineHandler,
    "oracle": OracleHandler,
    "batch": BatchHandler,
    "compare": CompareHandler,
    "plot": PlotHandler,
}
