#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.cli.commands
====================

The implementations of the subcommands. Every command receives the parsed
:class:`argparse.Namespace`, writes its files, prints a short summary and
returns the exit code 0. Failures are raised as
:class:`~cdprlqg.base.errors.Error`.
"""

# std
import csv
import logging
import os

# third party
import numpy as np

# local
from ..base import errors
from ..controller.baseline import BaselineController
from ..controller.tvlqg import LqgController
from ..simulator.log import load_log, save_log
from ..simulator.metrics import METRIC_NAMES, METRIC_UNITS, rmsd_metrics
from ..simulator.simulate import simulate
from ..synthesis.io import load_schedule, save_schedule, schedule_digest
from ..synthesis.schedule import synthesize_schedule
from ..trajectory.diamond import diamond_reference
from ..trajectory.io import format_float, load_trajectory, save_trajectory
from .config import load_config
from .plot import save_svg, tracking_svg


__all__ = [
    "parse_area",
    "parse_pair",
    "cmd_trajgen",
    "cmd_synth",
    "cmd_simulate",
    "cmd_compare",
    "cmd_plot",
    "cmd_experiment"
]


LOG = logging.getLogger(__file__)


def parse_area(text):
    """
    Parses ``WxH``, e.g. ``1.5x1.0``.
    """
    try:
        w, h = (float(part) for part in text.lower().split("x"))
    except ValueError:
        raise errors.UsageError(detail="'{}' is not an area WxH.".format(text))
    return w, h


def parse_pair(text, name="value"):
    """
    Parses ``X,Y``.
    """
    try:
        x, y = (float(part) for part in text.split(","))
    except ValueError:
        raise errors.UsageError(detail="'{}' is not a {} X,Y.".format(text, name))
    return x, y


def _parse_box(text):
    if text is None:
        return None
    try:
        box = tuple(float(part) for part in text.split(","))
    except ValueError:
        box = ()
    if len(box) != 4:
        raise errors.UsageError(detail="'{}' is not a box X,Y,W,H.".format(text))
    return box


def _print_metrics(name, metrics):
    print("RMSD ({}):".format(name))
    for label, unit, value in zip(METRIC_NAMES, METRIC_UNITS, metrics):
        print("  {:<7} {:12.4f} {}".format(label, value, unit))
    return None


def _write_report(path, columns):
    """
    Writes the metrics *columns* (name -> 6 values) as CSV with one row per
    dimension.
    """
    try:
        with open(path, "w", newline="") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(["dimension", "unit"] + list(columns))
            for i, (label, unit) in enumerate(zip(METRIC_NAMES, METRIC_UNITS)):
                writer.writerow(
                    [label, unit]
                    + [format_float(values[i]) for values in columns.values()]
                )
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))
    return None


def _load_reference(path, config):
    reference = load_trajectory(path)
    if not reference.duration > 0:
        raise errors.UsageError(
            detail="The trajectory '{}' has zero duration.".format(path)
        )
    if abs(reference.dt - config.offline_dt) > 1e-9:
        raise errors.UsageError(
            detail="The trajectory period {} s does not match rates.offline_hz."\
                .format(reference.dt)
        )
    return reference


def _make_controller(kind, config, reference, schedule=None):
    if kind == "lqg":
        if schedule.duration < reference.duration - 1e-9:
            raise errors.UsageError(
                detail="The gain schedule does not cover the trajectory."
            )
        return LqgController(schedule)
    return BaselineController(
        config.robot, config.baseline, reference, 1.0/config.rates["ctrl_hz"]
    )


def cmd_trajgen(args):
    """
    Generates the diamond reference.
    """
    config = load_config(args.config)
    area_w, area_h = parse_area(args.area)
    center = parse_pair(args.center, "center") if args.center is not None \
        else config.robot.frame_centroid
    if args.rate is not None and not args.rate > 0:
        raise errors.UsageError(detail="'--rate' must be > 0.")
    rate = args.rate if args.rate is not None else config.rates["offline_hz"]

    trajectory = diamond_reference(
        center, area_w, area_h, args.rings, args.vmax, args.amax, 1.0/rate
    )
    save_trajectory(args.out, trajectory)
    print("duration: {:.3f} s".format(trajectory.duration))
    print("samples: {}".format(len(trajectory)))
    return 0


def _write_costs(path, cost_history):
    try:
        with open(path, "w", newline="") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(["iteration", "cost"])
            for i, cost in enumerate(cost_history):
                writer.writerow([i, format_float(cost)])
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))
    return None


def cmd_synth(args):
    """
    Runs the offline stage and writes the gain schedule.
    """
    config = load_config(args.config)
    reference = _load_reference(args.traj, config)

    schedule, nominal = synthesize_schedule(
        config.robot, reference, config.weights, config.ilqr
    )
    if args.nominal is not None:
        save_trajectory(args.nominal, nominal.trajectory)

    if not nominal.converged:
        costs = args.out + ".costs.csv"
        _write_costs(costs, nominal.cost_history)
        raise errors.NotConverged(
            detail="iLQR did not converge after {} iterations, see '{}'."\
                .format(nominal.iterations, costs),
            source=costs
        )

    save_schedule(args.out, schedule)
    print("iterations: {}".format(nominal.iterations))
    print("final cost: {}".format(format_float(nominal.final_cost)))
    print("tension violations: {}".format(nominal.tension_violations))
    print("sha256: {}".format(schedule_digest(args.out)))
    return 0


def cmd_simulate(args):
    """
    Simulates one controller and writes the log.
    """
    if args.controller == "lqg" and args.gains is None:
        raise errors.UsageError(detail="'--controller lqg' requires '--gains'.")
    config = load_config(args.config)
    reference = _load_reference(args.traj, config)
    schedule = load_schedule(args.gains) if args.controller == "lqg" else None

    noise = config.noise
    if args.seed is not None:
        noise = noise.replace(seed=args.seed)
    controller = _make_controller(args.controller, config, reference, schedule)
    log = simulate(config.robot, controller, reference, noise, config.rates)
    save_log(args.out, log)

    metrics = rmsd_metrics(
        log, reference, args.skip_initial, _parse_box(args.center_box)
    )
    _print_metrics(args.controller, metrics)
    return 0


def cmd_compare(args):
    """
    Writes the RMSD report of several logs of the same reference.
    """
    reference = load_trajectory(args.traj)
    box = _parse_box(args.center_box)

    columns = dict()
    for path in args.logs:
        log = load_log(path)
        end = log.t[-1] + log.dt_ctrl
        if abs(end - reference.duration) > reference.dt:
            raise errors.UsageError(
                detail="The log '{}' does not match the duration of the "\
                    "reference.".format(path)
            )
        name = os.path.splitext(os.path.basename(path))[0]
        if name in columns:
            name = path
        columns[name] = rmsd_metrics(log, reference, args.skip_initial, box)

    _write_report(args.out, columns)
    for name, metrics in columns.items():
        _print_metrics(name, metrics)
    return 0


def cmd_plot(args):
    """
    Plots a log against its reference as SVG.
    """
    reference = load_trajectory(args.traj)
    log = load_log(args.log)
    save_svg(args.out, tracking_svg(log, reference))
    return 0


def cmd_experiment(args):
    """
    Simulates both controllers for the seeds ``0 .. N-1`` and reports the
    median RMSD of each.
    """
    if not args.seeds >= 1:
        raise errors.UsageError(detail="'--seeds' must be >= 1.")
    config = load_config(args.config)
    reference = _load_reference(args.traj, config)
    schedule = load_schedule(args.gains)
    box = _parse_box(args.center_box)

    columns = dict()
    for kind in ("lqg", "baseline"):
        controller = _make_controller(kind, config, reference, schedule)
        metrics = list()
        for seed in range(args.seeds):
            noise = config.noise.replace(seed=seed)
            log = simulate(config.robot, controller, reference, noise, config.rates)
            metrics.append(rmsd_metrics(log, reference, args.skip_initial, box))
            LOG.info("%s, seed %d: %s", kind, seed, metrics[-1])
        columns[kind] = np.median(np.array(metrics), axis=0)

    _write_report(args.out, columns)
    for name, metrics in columns.items():
        _print_metrics("median " + name, metrics)
    return 0
