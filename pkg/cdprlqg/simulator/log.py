#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.simulator.log
=====================

The simulation log, one row per control tick, and its CSV format. The
header is

.. code-block:: text

    t,theta,x,y,dtheta,dx,dy,est_theta,est_x,est_y,est_dtheta,est_dx,est_dy,
    z1,..,z8,tau1,..,tau4,ten1,..,ten4,flags

(one line). Controllers without an estimate log ``nan`` estimates.
"""

# std
import csv
import logging
import math

# third party
import numpy as np

# local
from ..base import errors
from ..trajectory.io import format_float


__all__ = [
    "LOG_HEADER",
    "SimLog",
    "save_log",
    "load_log"
]


LOG = logging.getLogger(__file__)

STATE_NAMES = ["theta", "x", "y", "dtheta", "dx", "dy"]

LOG_HEADER = ["t"] + STATE_NAMES + ["est_" + name for name in STATE_NAMES] \
    + ["z{}".format(i) for i in range(1, 9)] \
    + ["tau{}".format(i) for i in range(1, 5)] \
    + ["ten{}".format(i) for i in range(1, 5)] \
    + ["flags"]


class SimLog(object):
    """
    :ivar float dt_ctrl: the control period (s)
    :ivar t: T
    :ivar states: Tx6, the true states
    :ivar estimates: Tx6, ``nan`` if the controller has no estimate
    :ivar measurements: Tx8
    :ivar torques: Tx4, the commanded motor torques
    :ivar tensions: Tx4, the cable tensions at the start of the tick
    :ivar flags: T, the bitmask of the
        :mod:`~cdprlqg.controller.base` flags
    """

    def __init__(
        self, dt_ctrl, t, states, estimates, measurements, torques, tensions,
        flags
        ):
        self.dt_ctrl = float(dt_ctrl)
        self.t = np.asarray(t, dtype=float)
        self.states = np.asarray(states, dtype=float)
        self.estimates = np.asarray(estimates, dtype=float)
        self.measurements = np.asarray(measurements, dtype=float)
        self.torques = np.asarray(torques, dtype=float)
        self.tensions = np.asarray(tensions, dtype=float)
        self.flags = np.asarray(flags, dtype=np.int64)
        return None

    @classmethod
    def allocate(cls, dt_ctrl, ticks):
        """
        Returns a log with room for *ticks* rows.
        """
        return cls(
            dt_ctrl, np.zeros(ticks), np.zeros((ticks, 6)),
            np.full((ticks, 6), np.nan), np.zeros((ticks, 8)),
            np.zeros((ticks, 4)), np.zeros((ticks, 4)),
            np.zeros(ticks, dtype=np.int64)
        )

    def __len__(self):
        return self.t.shape[0]

    def truncated(self, rows):
        """
        Returns the first *rows* rows.
        """
        return type(self)(
            self.dt_ctrl, self.t[:rows], self.states[:rows],
            self.estimates[:rows], self.measurements[:rows],
            self.torques[:rows], self.tensions[:rows], self.flags[:rows]
        )

    def table(self):
        """
        Returns the log as one float array with the columns of
        :data:`LOG_HEADER`.
        """
        return np.hstack([
            self.t[:, None], self.states, self.estimates, self.measurements,
            self.torques, self.tensions, self.flags[:, None]
        ])

    def equals(self, other):
        """
        True, if both logs are bit identical (``nan`` estimates included).
        """
        return self.dt_ctrl == other.dt_ctrl \
            and np.array_equal(self.table(), other.table(), equal_nan=True)


def save_log(path, log):
    """
    :raises cdprlqg.base.errors.FileError:
    """
    try:
        with open(path, "w", newline="") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(LOG_HEADER)
            for row in log.table():
                cells = [format_float(value) for value in row[:-1]]
                cells.append(str(int(row[-1])))
                writer.writerow(cells)
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))
    LOG.debug("Wrote %d rows to '%s'.", len(log), path)
    return None


def load_log(path):
    """
    :raises cdprlqg.base.errors.FileError:
    :raises cdprlqg.base.errors.FormatError:
    """
    rows = list()
    try:
        with open(path, "r", newline="") as file:
            reader = csv.reader(file)
            header = next(reader, None)
            if header is None or [name.strip() for name in header] != LOG_HEADER:
                raise errors.FormatError(path, "Malformed header.", line=1)
            for row in reader:
                if not row:
                    continue
                line = reader.line_num
                if len(row) != len(LOG_HEADER):
                    raise errors.FormatError(
                        path, "Expected {} columns, found {}."\
                            .format(len(LOG_HEADER), len(row)),
                        line=line
                    )
                try:
                    values = [float(value) for value in row]
                except ValueError:
                    raise errors.FormatError(path, "Malformed number.", line=line)
                if rows and not values[0] > rows[-1][0]:
                    raise errors.FormatError(
                        path, "Time is not increasing.", line=line
                    )
                if not math.isfinite(values[0]):
                    raise errors.FormatError(path, "Non-finite time.", line=line)
                rows.append(values)
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))

    if not rows:
        raise errors.FormatError(path, "The file contains no samples.")

    table = np.array(rows)
    dt_ctrl = table[1, 0] - table[0, 0] if len(rows) > 1 else 0.001
    return SimLog(
        dt_ctrl, table[:, 0], table[:, 1:7], table[:, 7:13], table[:, 13:21],
        table[:, 21:25], table[:, 25:29], table[:, 29].astype(np.int64)
    )
