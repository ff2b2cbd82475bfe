"""Main CLI entry point for twistlab."""

import argparse
import sys

from twistlab.cli.common import add_config_arguments


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the twistlab CLI."""
    parser = argparse.ArgumentParser(
        description="Numerical verification of the generalized Dehn twist on S² x S²",
        epilog="Use 'twistlab <command> --help' for more information on a specific command.",
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # verify-all
    verify_parser = subparsers.add_parser("verify-all", help="Run every registered check")
    verify_parser.add_argument("--list", action="store_true", help="List the checks and exit")
    add_config_arguments(verify_parser)

    # check
    check_parser = subparsers.add_parser("check", help="Run one check by name")
    check_parser.add_argument("name", help="Check name (see 'twistlab list')")
    add_config_arguments(check_parser)

    # degree
    degree_parser = subparsers.add_parser("degree", help="Homology action of a named map")
    degree_parser.add_argument("map", help="id, swap, tau, tau-inv, tau-squared, h-half, lambda-quarter")
    add_config_arguments(degree_parser)

    # winding
    winding_parser = subparsers.add_parser(
        "winding", help="Winding number of a family on the normal bundle of the diagonal"
    )
    winding_parser.add_argument("family", help="h, lambda, identity, rho")
    winding_parser.add_argument(
        "--at",
        nargs=3,
        type=float,
        default=[0.0, 0.0, 1.0],
        metavar=("X", "Y", "Z"),
        help="Diagonal point (x, x) to evaluate at",
    )
    add_config_arguments(winding_parser)

    # profile-export
    profile_parser = subparsers.add_parser(
        "profile-export", help="Write the compactification profile table as CSV"
    )
    profile_parser.add_argument("path", nargs="?", default="profile_f.csv", help="Output CSV")
    profile_parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    # list
    list_parser = subparsers.add_parser("list", help="List the registered checks or error codes")
    list_parser.add_argument(
        "--codes",
        nargs="?",
        const="all",
        default=None,
        metavar="CATEGORY",
        help="List error codes instead of checks, optionally one category",
    )

    # version
    subparsers.add_parser("version", help="Show version information")

    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 0

    if args.command == "verify-all":
        from twistlab.cli.verify_all import verify_all_command

        return verify_all_command(args)
    elif args.command == "check":
        from twistlab.cli.check import check_command

        return check_command(args)
    elif args.command == "degree":
        from twistlab.cli.degree import degree_command

        return degree_command(args)
    elif args.command == "winding":
        from twistlab.cli.winding import winding_command

        return winding_command(args)
    elif args.command == "profile-export":
        from twistlab.cli.profile import profile_command

        return profile_command(args)
    elif args.command == "list":
        from twistlab.cli.list_checks import list_command

        return list_command(args)
    elif args.command == "version":
        from twistlab import __version__

        print(f"twistlab v{__version__}")
        return 0

    return 0


if __name__ == "__main__":
    sys.exit(main())
