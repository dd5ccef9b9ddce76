#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.trajectory.io
=====================

The trajectory CSV format. The header is

.. code-block:: text

    t,theta,x,y,dtheta,dx,dy,ddtheta,ddx,ddy

followed by one row per sample. Nominal trajectories carry the four extra
columns ``u1,u2,u3,u4`` (motor torques). Values are written with 17
significant digits, so that a round trip is lossless.
"""

# std
import csv
import logging
import math

# third party
import numpy as np

# local
from ..base import errors
from .trajectory import Trajectory


__all__ = [
    "TRAJECTORY_HEADER",
    "CONTROL_HEADER",
    "format_float",
    "save_trajectory",
    "load_trajectory"
]


LOG = logging.getLogger(__file__)

TRAJECTORY_HEADER = [
    "t", "theta", "x", "y", "dtheta", "dx", "dy", "ddtheta", "ddx", "ddy"
]
CONTROL_HEADER = ["u1", "u2", "u3", "u4"]


def format_float(value):
    """
    Formats *value* with 17 significant digits.
    """
    return "{:.17g}".format(value)


def save_trajectory(path, trajectory):
    """
    Writes *trajectory* to *path*. The controls are written, if present.

    :raises cdprlqg.base.errors.FileError:
    """
    header = list(TRAJECTORY_HEADER)
    columns = [
        trajectory.times[:, None], trajectory.poses, trajectory.velocities,
        trajectory.accelerations
    ]
    if trajectory.controls is not None:
        header += CONTROL_HEADER
        columns.append(trajectory.controls)
    table = np.hstack(columns)

    try:
        with open(path, "w", newline="") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(header)
            for row in table:
                writer.writerow([format_float(value) for value in row])
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))
    LOG.debug("Wrote %d samples to '%s'.", len(trajectory), path)
    return None


def _parse_rows(path, reader, width):
    rows = list()
    for row in reader:
        line = reader.line_num
        if not row:
            continue
        if len(row) != width:
            raise errors.FormatError(
                path, "Expected {} columns, found {}.".format(width, len(row)),
                line=line
            )
        try:
            values = [float(value) for value in row]
        except ValueError:
            raise errors.FormatError(path, "Malformed number.", line=line)
        if not all(math.isfinite(value) for value in values):
            raise errors.FormatError(path, "Non-finite value.", line=line)
        if rows and not values[0] > rows[-1][1][0]:
            raise errors.FormatError(path, "Time is not increasing.", line=line)
        rows.append((line, values))
    return rows


def load_trajectory(path, validate=True, default_dt=0.01):
    """
    Reads a trajectory from *path*.

    :arg bool validate:
        If true, the trajectory invariants are checked
        (:meth:`~cdprlqg.trajectory.trajectory.Trajectory.validate`).
    :arg float default_dt:
        The sample period of single sample files.

    :raises cdprlqg.base.errors.FileError:
        If the file can not be read.
    :raises cdprlqg.base.errors.FormatError:
        If the file is malformed.
    """
    try:
        with open(path, "r", newline="") as file:
            reader = csv.reader(file)
            header = next(reader, None)
            if header is None:
                raise errors.FormatError(path, "The file contains no samples.")
            header = [name.strip() for name in header]
            if header == TRAJECTORY_HEADER:
                width = len(TRAJECTORY_HEADER)
            elif header == TRAJECTORY_HEADER + CONTROL_HEADER:
                width = len(TRAJECTORY_HEADER) + len(CONTROL_HEADER)
            else:
                raise errors.FormatError(path, "Malformed header.", line=1)
            rows = _parse_rows(path, reader, width)
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))

    if not rows:
        raise errors.FormatError(path, "The file contains no samples.")

    table = np.array([values for _, values in rows])
    t = table[:, 0]
    dt = t[1] - t[0] if len(rows) > 1 else default_dt
    drift = np.abs(t - t[0] - np.arange(len(rows))*dt)
    if np.any(drift > 1e-9):
        i = int(np.argmax(drift > 1e-9))
        raise errors.FormatError(
            path, "The samples are not uniformly spaced.", line=rows[i][0]
        )

    controls = table[:, 10:14] if width > 10 else None
    trajectory = Trajectory(
        dt, table[:, 1:4], table[:, 4:7], table[:, 7:10], controls
    )
    if validate:
        try:
            trajectory.validate()
        except errors.InvalidParameter as err:
            raise errors.FormatError(path, err.detail)
    LOG.debug("Read %d samples from '%s'.", len(trajectory), path)
    return trajectory
