"""profile-export command: write the compactification profile table as CSV."""

import sys
from argparse import Namespace
from pathlib import Path

from twistlab.cli.common import EXIT_PASS, report_error
from twistlab.cli.output import check_writable, configure_logging, console
from twistlab.compactify.profile_f import default_profile, export_profile_csv


def profile_command(args: Namespace) -> int:
    """Execute the profile-export command.

    Returns:
        0 on success, 2 if the table cannot be built or written
    """
    try:
        configure_logging(getattr(args, "verbose", False))
        path = Path(args.path)
        check_writable(path)
        profile = default_profile()
        export_profile_csv(profile, path)
        console.print(f"wrote {len(profile.s)} rows to {path} (c = {profile.constant!r})")
        return EXIT_PASS

    except Exception as e:
        return report_error(e, args)


def main() -> int:
    """Main entry point for twistlab-profile command."""
    import argparse

    parser = argparse.ArgumentParser(description="Export the compactification profile f(s)")
    parser.add_argument("path", nargs="?", default="profile_f.csv", help="Output CSV path")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    args = parser.parse_args()
    return profile_command(args)


if __name__ == "__main__":
    sys.exit(main())
