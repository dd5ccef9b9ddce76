#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.cli.main
================

The command line front end.

.. code-block:: bash

    cdprlqg trajgen --out diamond.csv
    cdprlqg synth --traj diamond.csv --out diamond.gs
    cdprlqg simulate --controller lqg --gains diamond.gs --traj diamond.csv --out lqg.csv
    cdprlqg simulate --controller baseline --traj diamond.csv --out baseline.csv
    cdprlqg compare --logs lqg.csv baseline.csv --traj diamond.csv --out report.csv
    cdprlqg plot --log lqg.csv --traj diamond.csv --out lqg.svg

Exit codes: 0 success, 1 I/O failure, 2 usage or validation error, 3 the
trajectory optimization did not converge, 4 numerical failure.
"""

# std
import argparse
import logging
import sys

# local
from .. import version
from ..base import errors
from . import commands


__all__ = [
    "build_parser",
    "main"
]


LOG = logging.getLogger(__file__)


def build_parser():
    """
    Returns the :class:`argparse.ArgumentParser` of all subcommands.
    """
    parser = argparse.ArgumentParser(
        prog="cdprlqg",
        description="TV-LQG control of a planar cable-driven parallel robot."
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + version.version
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="Repeat for more log output."
    )
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    def add_config(p):
        p.add_argument("--config", help="The configuration file (default: shipped).")

    def add_window(p):
        p.add_argument(
            "--skip-initial", type=float, default=1.0,
            help="Exclude the first seconds from the metrics (default: 1.0)."
        )
        p.add_argument(
            "--center-box", "--center-only", metavar="X,Y,W,H",
            help="Only evaluate samples with the reference in this rectangle."
        )

    p = subparsers.add_parser("trajgen", help="Generate the diamond reference.")
    add_config(p)
    p.add_argument("--area", default="1.5x1.0", help="WxH in m (default: 1.5x1.0).")
    p.add_argument("--center", help="X,Y in m (default: frame centroid).")
    p.add_argument("--rings", type=int, default=4)
    p.add_argument("--vmax", type=float, default=0.5, help="m/s")
    p.add_argument("--amax", type=float, default=1.0, help="m/s^2")
    p.add_argument("--rate", type=float, help="Hz (default: rates.offline_hz)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=commands.cmd_trajgen)

    p = subparsers.add_parser("synth", help="Compute the gain schedule.")
    add_config(p)
    p.add_argument("--traj", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--nominal", help="Also write the nominal trajectory (CSV).")
    p.set_defaults(func=commands.cmd_synth)

    p = subparsers.add_parser("simulate", help="Simulate a controller.")
    add_config(p)
    p.add_argument("--controller", choices=("lqg", "baseline"), required=True)
    p.add_argument("--gains", help="The gain schedule (lqg only).")
    p.add_argument("--traj", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)
    add_window(p)
    p.set_defaults(func=commands.cmd_simulate)

    p = subparsers.add_parser("compare", help="Report the RMSD of logs.")
    p.add_argument("--logs", nargs="+", required=True)
    p.add_argument("--traj", required=True)
    p.add_argument("--out", required=True)
    add_window(p)
    p.set_defaults(func=commands.cmd_compare)

    p = subparsers.add_parser("plot", help="Plot a log as SVG.")
    p.add_argument("--log", required=True)
    p.add_argument("--traj", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=commands.cmd_plot)

    p = subparsers.add_parser(
        "experiment", help="Compare both controllers over several seeds."
    )
    add_config(p)
    p.add_argument("--gains", required=True)
    p.add_argument("--traj", required=True)
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--out", required=True)
    add_window(p)
    p.set_defaults(func=commands.cmd_experiment)
    return parser


def main(argv=None):
    """
    Runs the command line and returns the exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(
        level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )

    try:
        return args.func(args)
    except errors.Error as err:
        LOG.error("%s: %s", err.title, err.detail)
        print("error: {}".format(err.detail), file=sys.stderr)
        return errors.error_to_exit_code(err)
    except Exception as err:
        LOG.critical("Unexpected failure.", exc_info=True)
        return errors.error_to_exit_code(err)


if __name__ == "__main__":
    sys.exit(main())
