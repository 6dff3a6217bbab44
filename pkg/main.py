#!/usr/bin/env python3
"""Main module to run the delivery routing command line."""
from __future__ import annotations

import argparse
import logging
import sys
import traceback
from typing import Sequence

import exceptions
from baseline import DEFAULT_ORACLE_CAP
from command_handlers import COMMAND_HANDLERS
from message_log import MessageLog, MessageLogHandler
from metric import Metric
from output_format import OutputFormat
from window_style import WindowStyle

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as UsageError."""

    def error(self, message: str) -> None:  # type: ignore[override]
        """Raise instead of exiting with argparse's own status code."""
        msg = f"{self.prog}: error: {message}"
        raise exceptions.UsageError(msg)


def build_parser() -> ArgumentParser:
    """Return the parser for every subcommand."""
    common = ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="random seed (GA and generator)")
    common.add_argument("--metric", default=Metric.EUCLIDEAN.value,
                        choices=[m.value for m in Metric])
    common.add_argument("--config", default=None,
                        help="JSON file with GA parameters")
    common.add_argument("--format", default=OutputFormat.TEXT.value,
                        choices=[f.value for f in OutputFormat])
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress to stderr (-vv for debug)")

    parser = ArgumentParser(
        prog="vrpstw",
        description="Meal-delivery routing with soft time windows.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", parents=[common],
                              help="generate a synthetic instance")
    gen.add_argument("--customers", type=int, default=10)
    gen.add_argument("--spread", type=float, default=10.0)
    gen.add_argument("--window-style", default=WindowStyle.NORMAL.value,
                     choices=[s.value for s in WindowStyle])
    gen.add_argument("--out", default=None, help="file to write (default stdout)")

    for name, help_text in (
        ("solve", "solve with the genetic algorithm"),
        ("baseline", "solve with the closed-route nearest-neighbor baseline"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("instance")
        if name == "solve":
            sub.add_argument("--workers", type=int, default=None)

    oracle = commands.add_parser("oracle", parents=[common],
                                 help="solve a small instance exactly")
    oracle.add_argument("instance")
    oracle.add_argument("--max-customers", type=int,
                        default=DEFAULT_ORACLE_CAP)
    oracle.add_argument("--closed", action="store_true",
                        help="enumerate closed routes instead of open ones")

    batch = commands.add_parser("batch", parents=[common],
                                help="split orders by time slot and merchant")
    batch.add_argument("instance")
    batch.add_argument("--orders", default=None,
                       help="CSV file of orders replacing the instance's")
    batch.add_argument("--slot-length", type=float, default=30.0)
    batch.add_argument("--start", type=float, default=690.0,
                       help="horizon start, minutes from midnight")
    batch.add_argument("--end", type=float, default=1110.0,
                       help="horizon end, minutes from midnight")
    batch.add_argument("--out-dir", default=None)

    compare = commands.add_parser("compare", parents=[common],
                                  help="compare the baseline and the GA")
    compare.add_argument("instances", nargs="+")
    compare.add_argument("--workers", type=int, default=None)

    plot = commands.add_parser("plot", parents=[common],
                               help="draw a solution as an SVG route map")
    plot.add_argument("instance")
    plot.add_argument("--out", required=True)
    plot.add_argument("--solver", default="ga",
                      choices=["ga", "baseline", "oracle"])
    plot.add_argument("--max-customers", type=int,
                      default=DEFAULT_ORACLE_CAP,
                      help="largest instance the oracle solver accepts")
    return parser


def configure_logging(verbosity: int) -> logging.Handler:
    """Send log records to stderr at the level -v asks for."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root = logging.getLogger()
    root.setLevel(min(level, logging.WARNING))
    root.addHandler(handler)
    return handler


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code.

    0 is success, 1 a usage error, 2 an invalid or infeasible input and
    3 an internal error.
    """
    message_log = MessageLog()
    log_handler = MessageLogHandler(message_log)
    root = logging.getLogger()
    root.addHandler(log_handler)
    console_handler: logging.Handler | None = None
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            console_handler = configure_logging(args.verbose)
        handler = COMMAND_HANDLERS[args.command](args, message_log)
        return handler.handle()
    except exceptions.UsageError as exc:
        message_log.add_message(str(exc.code), logging.ERROR)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except exceptions.InvalidInstance as exc:
        for violation in exc.violations:
            message_log.add_message(violation, logging.ERROR, stack=False)
        message_log.add_message("instance is invalid", logging.ERROR)
        return EXIT_INVALID
    except (exceptions.VrpError, ValueError) as exc:
        message_log.add_message(str(exc), logging.ERROR)
        return EXIT_INVALID
    except OSError as exc:
        message_log.add_message(str(exc), logging.ERROR)
        return EXIT_USAGE
    except Exception:  # noqa: BLE001
        traceback.print_exc()
        return EXIT_INTERNAL
    finally:
        root.removeHandler(log_handler)
        if console_handler:
            root.removeHandler(console_handler)
        message_log.render(sys.stderr)


def main() -> None:
    """Run the command line with the process arguments."""
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
