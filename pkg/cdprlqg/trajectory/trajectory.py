#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.trajectory.trajectory
=============================

The uniformly sampled reference (or nominal) trajectory.
"""

# std
import math

# third party
import numpy as np

# local
from ..base import errors


__all__ = [
    "Trajectory"
]


class Trajectory(object):
    """
    A trajectory sampled at :math:`t_k = k \\Delta t`, :math:`k = 0 .. M-1`.

    :arg float dt:
        The sample period (s).
    :arg poses:
        Mx3, :math:`[\\theta, p_x, p_y]`
    :arg velocities:
        Mx3
    :arg accelerations:
        Mx3
    :arg controls:
        Optional, Mx4 motor torques (only nominal trajectories have them).
    """

    def __init__(self, dt, poses, velocities, accelerations, controls=None):
        """
        """
        self.dt = float(dt)
        self.poses = np.array(poses, dtype=float, ndmin=2)
        self.velocities = np.array(velocities, dtype=float, ndmin=2)
        self.accelerations = np.array(accelerations, dtype=float, ndmin=2)
        self.controls = None if controls is None \
            else np.array(controls, dtype=float, ndmin=2)

        if not self.dt > 0:
            raise errors.InvalidParameter("dt", "must be > 0.")
        M = self.poses.shape[0]
        if M == 0:
            raise errors.InvalidParameter("trajectory", "has no samples.")
        for name in ("poses", "velocities", "accelerations"):
            if getattr(self, name).shape != (M, 3):
                raise errors.DimensionMismatch(
                    detail="'{}' must have the shape ({}, 3).".format(name, M)
                )
        if self.controls is not None and self.controls.shape != (M, 4):
            raise errors.DimensionMismatch(
                detail="'controls' must have the shape ({}, 4).".format(M)
            )
        return None

    def __len__(self):
        return self.poses.shape[0]

    @property
    def duration(self):
        """
        The time of the last sample (s).
        """
        return (len(self) - 1)*self.dt

    @property
    def times(self):
        return np.arange(len(self))*self.dt

    @property
    def states(self):
        """
        Mx6, the stacked states :math:`[pose, velocity]`.
        """
        return np.hstack([self.poses, self.velocities])

    @classmethod
    def from_states(cls, dt, states, accelerations, controls=None):
        states = np.asarray(states, dtype=float)
        return cls(dt, states[:, :3], states[:, 3:], accelerations, controls)

    def _locate(self, t):
        """
        Returns the index ``i`` and the weight ``alpha``, such that *t* lies
        between the samples ``i`` and ``i + 1``. *t* is clamped to the
        duration.
        """
        M = len(self)
        if M == 1 or t <= 0:
            return 0, 0.0
        s = t/self.dt
        i = int(math.floor(s))
        if i >= M - 1:
            return M - 1, 0.0
        return i, s - i

    def interpolate(self, t):
        """
        Returns ``(pose, velocity, acceleration)`` at time *t*, linearly
        interpolated between the samples and clamped to the end points.
        """
        i, alpha = self._locate(t)
        if alpha == 0.0:
            return self.poses[i], self.velocities[i], self.accelerations[i]
        lerp = lambda a: (1.0 - alpha)*a[i] + alpha*a[i + 1]
        return lerp(self.poses), lerp(self.velocities), lerp(self.accelerations)

    def state_at(self, t):
        """
        Returns the interpolated 6d state at time *t*.
        """
        pose, velocity, _ = self.interpolate(t)
        return np.concatenate([pose, velocity])

    def validate(self, tol=1e-9):
        """
        Checks the trajectory invariants:

        *   The samples are finite.
        *   Consecutive samples are consistent,
            :math:`|p_{k+1} - p_k - \\Delta t v_k| \\le \\frac{1}{2}
            a_{max} \\Delta t^2 + tol` per component, where :math:`a_{max}`
            is the largest acceleration magnitude.
        *   The trajectory starts and ends at rest.

        A trajectory with controls is a nominal of the plant. It is
        integrated by the plant, not by the profile, and it ends where the
        optimizer left it, so only :math:`|v_{k+1} - v_k - \\Delta t a_k|
        \\le tol \\max(1, |v|_\\infty)` is checked instead of the last two
        invariants.

        :raises cdprlqg.base.errors.InvalidParameter:
        """
        for name in ("poses", "velocities", "accelerations", "controls"):
            value = getattr(self, name)
            if value is not None and not np.all(np.isfinite(value)):
                raise errors.InvalidParameter(
                    "trajectory", "contains non-finite {}.".format(name)
                )

        if self.controls is not None:
            scale = max(1.0, float(np.max(np.abs(self.velocities))))
            step = self.velocities[1:] - self.velocities[:-1] \
                - self.dt*self.accelerations[:-1]
            bad = np.nonzero(np.any(np.abs(step) > tol*scale, axis=1))[0]
        else:
            amax = float(np.max(np.abs(self.accelerations), initial=0.0))
            step = self.poses[1:] - self.poses[:-1] - self.dt*self.velocities[:-1]
            bound = 0.5*amax*self.dt**2 + tol
            bad = np.nonzero(np.any(np.abs(step) > bound, axis=1))[0]
        if bad.size:
            raise errors.InvalidParameter(
                "trajectory",
                "is inconsistent between the samples {} and {}."\
                    .format(bad[0], bad[0] + 1)
            )

        if self.controls is not None:
            return None
        for i in (0, len(self) - 1):
            if np.max(np.abs(self.velocities[i])) > tol \
                or np.max(np.abs(self.accelerations[i])) > tol:
                raise errors.InvalidParameter(
                    "trajectory", "must start and end at rest (sample {})."\
                        .format(i)
                )
        return None

    def with_controls(self, controls):
        """
        Returns a copy with the motor torques *controls*.
        """
        return type(self)(
            self.dt, self.poses, self.velocities, self.accelerations, controls
        )

    def max_speed(self):
        """
        The largest translational speed :math:`\\|\\dot p\\|` (m/s).
        """
        return float(np.max(np.linalg.norm(self.velocities[:, 1:], axis=1)))

    def max_acceleration(self):
        """
        The largest translational acceleration :math:`\\|\\ddot p\\|`
        (m/s^2).
        """
        return float(np.max(np.linalg.norm(self.accelerations[:, 1:], axis=1)))
