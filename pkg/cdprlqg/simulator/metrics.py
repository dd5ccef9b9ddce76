#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.simulator.metrics
=========================

Tracking accuracy: the root mean square deviation of the true state from
the reference, per dimension, in degrees and millimeters.
"""

# third party
import numpy as np

# local
from ..base import errors


__all__ = [
    "METRIC_NAMES",
    "METRIC_UNITS",
    "METRIC_SCALE",
    "reference_states",
    "rmsd_metrics"
]


METRIC_NAMES = ["theta", "x", "y", "dtheta", "dx", "dy"]
METRIC_UNITS = ["deg", "mm", "mm", "deg/s", "mm/s", "mm/s"]

#: SI to report units.
METRIC_SCALE = np.array([
    180.0/np.pi, 1e3, 1e3, 180.0/np.pi, 1e3, 1e3
])


def reference_states(reference, t):
    """
    Returns the reference states at the times *t*, linearly interpolated
    and clamped to the end points.
    """
    states = reference.states
    times = reference.times
    return np.column_stack([
        np.interp(t, times, states[:, i]) for i in range(states.shape[1])
    ])


def rmsd_metrics(log, reference, skip_initial=1.0, center_box=None):
    """
    Returns the RMS deviations
    :math:`[\\theta, x, y, \\dot\\theta, \\dot x, \\dot y]` in deg, mm, mm,
    deg/s, mm/s, mm/s.

    :arg cdprlqg.simulator.log.SimLog log:
    :arg cdprlqg.trajectory.trajectory.Trajectory reference:
    :arg float skip_initial:
        The ticks before this time are excluded (s).
    :arg center_box:
        Optional ``(cx, cy, w, h)``. Only ticks whose reference position is
        within this rectangle are included.

    :raises cdprlqg.base.errors.InvalidParameter:
        If the window is empty.
    """
    ref = reference_states(reference, log.t)
    mask = log.t >= skip_initial
    if center_box is not None:
        cx, cy, w, h = center_box
        mask &= np.abs(ref[:, 1] - cx) <= 0.5*w
        mask &= np.abs(ref[:, 2] - cy) <= 0.5*h
    if not np.any(mask):
        raise errors.InvalidParameter(
            "skip_initial", "leaves no samples in the evaluation window."
        )

    deviation = log.states[mask] - ref[mask]
    return np.sqrt(np.mean(deviation**2, axis=0))*METRIC_SCALE
