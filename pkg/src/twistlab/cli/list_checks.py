"""list command: the check registry as a table of claims, or the error-code catalog."""

import sys
from argparse import Namespace

from rich.console import Console
from rich.table import Table

from twistlab.cli.common import EXIT_PASS, report_error
from twistlab.cli.registry import all_checks
from twistlab.core.error_codes import ERROR_CODES, list_error_codes
from twistlab.core.errors import RegistryError
from twistlab.core.suggestions import suggest_did_you_mean


def _checks_table() -> Table:
    table = Table(title="twistlab checks", show_lines=True)
    table.add_column("check", style="bold", no_wrap=True)
    table.add_column("verifies")
    table.add_column("claim", style="italic")
    table.add_column("tol", justify="right")
    for check in all_checks():
        tol = f"{check.tol:.0e}" + (" (fixed)" if check.fixed_tol else "")
        table.add_row(check.name, check.description, check.claim, tol)
    return table


def _codes_table(category: str | None) -> Table:
    """Error codes, all of them or one category.

    Raises:
        RegistryError: for an unknown category
    """
    codes = list_error_codes(category)
    if not codes:
        categories = sorted({code.category for code in ERROR_CODES.values()})
        hint = suggest_did_you_mean(category or "", categories) or (
            f"Valid categories: {', '.join(categories)}"
        )
        raise RegistryError("X002", f"unknown error-code category '{category}'", hint)
    table = Table(title="twistlab error codes")
    table.add_column("code", style="bold", no_wrap=True)
    table.add_column("category")
    table.add_column("description")
    for code in codes:
        table.add_row(code.code, code.category, code.description)
    return table


def list_command(args: Namespace) -> int:
    """Print the check registry, or the error codes when ``--codes`` is given.

    Returns:
        0 on success, 2 for an unknown error-code category
    """
    codes = getattr(args, "codes", None)
    try:
        table = _checks_table() if codes is None else _codes_table(None if codes == "all" else codes)
    except Exception as e:
        return report_error(e, args)
    Console().print(table)
    return EXIT_PASS


def add_list_arguments(parser) -> None:
    parser.add_argument(
        "--codes",
        nargs="?",
        const="all",
        default=None,
        metavar="CATEGORY",
        help="List error codes instead of checks, optionally one category (e.g. topology)",
    )


def main() -> int:
    """Main entry point for twistlab-list command."""
    import argparse

    parser = argparse.ArgumentParser(description="List the registered verification checks")
    add_list_arguments(parser)
    args = parser.parse_args()
    return list_command(args)


if __name__ == "__main__":
    sys.exit(main())
