"""winding command: winding number of a family's action on the normal bundle of the diagonal."""

import sys
from argparse import Namespace

import numpy as np

from twistlab.cli.common import (
    EXIT_FAIL,
    EXIT_PASS,
    add_config_arguments,
    config_from_args,
    report_error,
)
from twistlab.cli.registry import get_family
from twistlab.core.errors import ResolutionError
from twistlab.core.geometry import SpherePoint
from twistlab.topology.winding import normal_loop_winding


def winding_command(args: Namespace) -> int:
    """Execute the winding command for ``args.family`` at the base point ``args.at``.

    Returns:
        0 on success, 1 if the loop is sampled too coarsely, 2 on other errors
    """
    try:
        config = config_from_args(args)
        family = get_family(args.family)
        x = SpherePoint(np.asarray(args.at, dtype=np.float64))
        winding = normal_loop_winding(
            family, x, config.loop_samples, config.fd_step, trace=config.trace
        )
        print(winding)
        return EXIT_PASS

    except ResolutionError as e:
        report_error(e, args)
        return EXIT_FAIL
    except Exception as e:
        return report_error(e, args)


def main() -> int:
    """Main entry point for twistlab-winding command."""
    import argparse

    parser = argparse.ArgumentParser(description="Winding number of a normal-bundle loop")
    parser.add_argument("family", help="Family name: h, lambda, identity, rho")
    parser.add_argument(
        "--at",
        nargs=3,
        type=float,
        default=[0.0, 0.0, 1.0],
        metavar=("X", "Y", "Z"),
        help="Diagonal point (x, x) to evaluate at (default the north pole)",
    )
    add_config_arguments(parser)

    args = parser.parse_args()
    return winding_command(args)


if __name__ == "__main__":
    sys.exit(main())
