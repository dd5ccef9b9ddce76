#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.trajectory.diamond
==========================

The tracking benchmark: a tour of concentric diamonds in the center of the
workspace. Diamond :math:`i` of :math:`n` connects the midpoints of the
edges of the area rectangle scaled by :math:`1 - i/n`. Every straight edge
is traversed with a trapezoidal speed profile and the robot stops at every
vertex.
"""

# std
import logging

# third party
import numpy as np

# local
from ..base import errors
from .profile import trapezoidal_profile
from .trajectory import Trajectory


__all__ = [
    "diamond_vertices",
    "polyline_reference",
    "diamond_reference",
    "hold_reference"
]


LOG = logging.getLogger(__file__)


def diamond_vertices(center, area_w, area_h, n_rings):
    """
    Returns the waypoints of the tour: each diamond counterclockwise from
    its :math:`+x` vertex back to it, largest diamond first, with a transit
    from one :math:`+x` vertex to the next.

    :rtype: list of 2d arrays
    """
    if not area_w > 0:
        raise errors.InvalidParameter("area_w", "must be > 0.")
    if not area_h > 0:
        raise errors.InvalidParameter("area_h", "must be > 0.")
    if int(n_rings) != n_rings or n_rings < 1:
        raise errors.InvalidParameter("n_rings", "must be a positive integer.")

    center = np.asarray(center, dtype=float)
    waypoints = list()
    for i in range(int(n_rings)):
        scale = 1.0 - i/n_rings
        hw = 0.5*area_w*scale
        hh = 0.5*area_h*scale
        ring = [(hw, 0.0), (0.0, hh), (-hw, 0.0), (0.0, -hh), (hw, 0.0)]
        waypoints.extend(center + np.array(vertex) for vertex in ring)
    return waypoints


def polyline_reference(waypoints, vmax, amax, dt, theta=0.0):
    """
    Connects the *waypoints* with straight segments. Each segment starts
    and ends at rest. Repeated waypoints are skipped.

    :rtype: ~cdprlqg.trajectory.trajectory.Trajectory
    """
    waypoints = [np.asarray(p, dtype=float) for p in waypoints]
    if not waypoints:
        raise errors.InvalidParameter("waypoints", "must not be empty.")

    positions = [waypoints[0][None, :]]
    velocities = [np.zeros((1, 2))]
    accelerations = [np.zeros((1, 2))]
    for start, end in zip(waypoints[:-1], waypoints[1:]):
        delta = end - start
        distance = float(np.linalg.norm(delta))
        if distance == 0.0:
            continue
        direction = delta/distance

        # The first sample equals the last sample of the previous segment.
        profile = trapezoidal_profile(distance, vmax, amax, dt)[1:]
        positions.append(start + np.outer(profile[:, 0], direction))
        velocities.append(np.outer(profile[:, 1], direction))
        accelerations.append(np.outer(profile[:, 2], direction))

    positions = np.vstack(positions)
    M = positions.shape[0]
    poses = np.column_stack([np.full(M, theta), positions])
    velocities = np.column_stack([np.zeros(M), np.vstack(velocities)])
    accelerations = np.column_stack([np.zeros(M), np.vstack(accelerations)])
    return Trajectory(dt, poses, velocities, accelerations)


def diamond_reference(
    center, area_w=1.5, area_h=1.0, n_rings=4, vmax=0.5, amax=1.0, dt=0.01
    ):
    """
    Returns the diamond tour with the orientation held at zero.

    :arg center:
        The center of the area (m).
    :arg float area_w:
        The width of the area (m).
    :arg float area_h:
        The height of the area (m).
    :arg int n_rings:
        The number of diamonds.
    :arg float vmax:
        The speed cap (m/s).
    :arg float amax:
        The acceleration cap (m/s^2).
    :arg float dt:
        The sample period (s).
    """
    waypoints = diamond_vertices(center, area_w, area_h, n_rings)
    trajectory = polyline_reference(waypoints, vmax, amax, dt)
    LOG.info(
        "Diamond reference: %d rings, %d samples, %.2f s.",
        n_rings, len(trajectory), trajectory.duration
    )
    return trajectory


def hold_reference(pose, duration, dt):
    """
    Returns a reference, which rests at *pose* for *duration* seconds.
    """
    if not duration >= 0:
        raise errors.InvalidParameter("duration", "must be >= 0.")
    if not dt > 0:
        raise errors.InvalidParameter("dt", "must be > 0.")
    M = int(np.ceil(duration/dt - 1e-9)) + 1
    poses = np.tile(np.asarray(pose, dtype=float), (M, 1))
    zeros = np.zeros((M, 3))
    return Trajectory(dt, poses, zeros, zeros.copy())
