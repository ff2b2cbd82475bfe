"""degree command: homology action of a named map."""

import sys
from argparse import Namespace

from twistlab.cli.common import (
    EXIT_FAIL,
    EXIT_PASS,
    add_config_arguments,
    config_from_args,
    report_error,
)
from twistlab.cli.output import console
from twistlab.cli.registry import get_map
from twistlab.core.errors import ResolutionError
from twistlab.topology.degree import homology_matrix


def degree_command(args: Namespace) -> int:
    """Execute the degree command: print the 2 x 2 homology matrix of ``args.map``.

    Returns:
        0 on success, 1 if the quadrature is too coarse to round, 2 on other errors
    """
    try:
        config = config_from_args(args)
        fn = get_map(args.map)
        matrix = homology_matrix(fn, nodes=config.quad_nodes, trace=config.trace)
        print(matrix)
        console.print(f"rounding error {matrix.rounding_error:.3e}")
        return EXIT_PASS

    except ResolutionError as e:
        report_error(e, args)
        return EXIT_FAIL
    except Exception as e:
        return report_error(e, args)


def main() -> int:
    """Main entry point for twistlab-degree command."""
    import argparse

    parser = argparse.ArgumentParser(description="Homology action of a map of S² x S²")
    parser.add_argument("map", help="Map name: id, swap, tau, tau-inv, tau-squared, ...")
    add_config_arguments(parser)

    args = parser.parse_args()
    return degree_command(args)


if __name__ == "__main__":
    sys.exit(main())
