"""check command: run one named check."""

import sys
from argparse import Namespace

from twistlab.cli.common import (
    EXIT_FAIL,
    EXIT_PASS,
    add_config_arguments,
    config_from_args,
    report_error,
)
from twistlab.cli.output import check_writable, render, write_output
from twistlab.cli.registry import get_check


def check_command(args: Namespace) -> int:
    """Execute the check command.

    Args:
        args: Parsed command-line arguments (``args.name`` is the check)

    Returns:
        0 if the check passes, 1 if it fails, 2 for unknown names or bad configuration
    """
    try:
        config = config_from_args(args)
        check = get_check(args.name)
        check_writable(config.output)

        report = check.run(config)
        write_output(render([report], config.format), config.output)
        return EXIT_PASS if report.passed else EXIT_FAIL

    except Exception as e:
        return report_error(e, args)


def main() -> int:
    """Main entry point for twistlab-check command."""
    import argparse

    parser = argparse.ArgumentParser(description="Run one verification check")
    parser.add_argument("name", help="Check name (see twistlab list)")
    add_config_arguments(parser)

    args = parser.parse_args()
    return check_command(args)


if __name__ == "__main__":
    sys.exit(main())
