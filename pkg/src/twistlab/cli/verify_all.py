"""verify-all command: run the whole check registry and write one report."""

import logging
import sys
import time
from argparse import Namespace

from twistlab.cli.common import (
    EXIT_FAIL,
    EXIT_PASS,
    add_config_arguments,
    config_from_args,
    report_error,
)
from twistlab.cli.output import check_writable, console, render, report_table, write_output
from twistlab.cli.registry import all_checks

logger = logging.getLogger(__name__)


def verify_all_command(args: Namespace) -> int:
    """Execute the verify-all command.

    Args:
        args: Parsed command-line arguments

    Returns:
        0 if every check passes, 1 if any fails, 2 on configuration or I/O errors
    """
    if getattr(args, "list", False):
        from twistlab.cli.list_checks import list_command

        return list_command(args)

    try:
        config = config_from_args(args)
        check_writable(config.output)

        start = time.perf_counter()
        reports = []
        for check in all_checks():
            check_start = time.perf_counter()
            reports.append(check.run(config))
            logger.debug("%s took %.1f ms", check.name, 1e3 * (time.perf_counter() - check_start))
        wall_time_ms = 1e3 * (time.perf_counter() - start) if config.timing else None

        write_output(render(reports, config.format, wall_time_ms), config.output)
        console.print(report_table(reports))

        failed = [report.name for report in reports if not report.passed]
        if failed:
            console.print(f"[red]{len(failed)} check(s) failed:[/red] {', '.join(failed)}")
            return EXIT_FAIL
        return EXIT_PASS

    except Exception as e:
        return report_error(e, args)


def main() -> int:
    """Main entry point for twistlab-verify command."""
    import argparse

    parser = argparse.ArgumentParser(description="Run every registered verification check")
    parser.add_argument("--list", action="store_true", help="List the checks and exit")
    add_config_arguments(parser)

    args = parser.parse_args()
    return verify_all_command(args)


if __name__ == "__main__":
    sys.exit(main())
