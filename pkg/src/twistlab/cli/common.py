"""Flags and error handling shared by every twistlab command."""

from __future__ import annotations

import argparse
import logging
import os
from argparse import Namespace
from pathlib import Path

from rich.markup import escape

from twistlab.cli.output import configure_logging, console
from twistlab.core.config import VALID_FORMATS, SuiteConfig, build_config

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def add_config_arguments(parser: argparse.ArgumentParser) -> None:
    """Suite configuration flags. Unset flags stay None so the environment can fill them."""
    group = parser.add_argument_group("configuration")
    group.add_argument("--samples", type=int, help="Random points per check (default 10000)")
    group.add_argument("--seed", type=int, help="Sampling seed (default 0)")
    group.add_argument("--fd-step", type=float, help="Finite-difference step (default 1e-5)")
    group.add_argument("--tol", type=float, help="Override every residual tolerance")
    group.add_argument("--quad-nodes", type=int, help="Quadrature nodes per axis (default 256)")
    group.add_argument("--loop-samples", type=int, help="Samples along a loop (default 64)")
    group.add_argument("--workers", type=int, help="Threads for block evaluation (default 1)")
    group.add_argument("-o", "--output", type=Path, help="Report file (default stdout)")
    group.add_argument("--format", choices=VALID_FORMATS, help="Report format (default json)")
    group.add_argument("--trace", type=Path, help="Write the raw evaluation trace as CSV")
    group.add_argument(
        "--timing", action="store_true", default=None, help="Record wall time in the summary"
    )
    group.add_argument("-v", "--verbose", action="store_true", help="Debug logging and tracebacks")


def config_from_args(args: Namespace) -> SuiteConfig:
    """Defaults < TWISTLAB_* environment < flags.

    Raises:
        ConfigError: on a malformed environment value or a violated invariant
    """
    configure_logging(getattr(args, "verbose", False))
    config = build_config(vars(args), os.environ)
    logger.debug("configuration: %s", config)
    return config


def report_error(error: BaseException, args: Namespace) -> int:
    """Print an error for people and return the usage/I/O exit code."""
    if getattr(args, "verbose", False):
        console.print_exception()
    else:
        console.print(f"[red]Error:[/red] {escape(str(error))}")
    return EXIT_ERROR
