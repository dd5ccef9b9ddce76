#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.model.params
====================

The geometric, inertial and friction parameters of the planar 4-cable robot
and the layout of the state vector.

The state is :math:`x = [\\theta, p_x, p_y, \\dot\\theta, \\dot p_x,
\\dot p_y]` (SI units, radians). The pose part is ``x[:3]``, the velocity
part ``x[3:]``.
"""

# third party
from cached_property import cached_property
import numpy as np

# local
from ..base import validators


__all__ = [
    "STATE_DIM",
    "CONTROL_DIM",
    "MEAS_DIM",
    "NUM_CABLES",
    "FRAME_POINTS",
    "EE_POINTS",
    "RobotParams",
    "make_state"
]


STATE_DIM = 6
CONTROL_DIM = 4
MEAS_DIM = 8
NUM_CABLES = 4

#: The frame anchors :math:`a_i` in the world frame (m).
FRAME_POINTS = np.array([
    [2.815, 0.000],
    [2.845, 2.239],
    [0.033, 2.225],
    [0.000, 0.000]
])

#: The end effector mounting points :math:`b_i` in the body frame (m).
EE_POINTS = np.array([
    [+0.063, -0.060],
    [+0.063, +0.060],
    [-0.063, +0.060],
    [-0.063, -0.060]
])


class RobotParams(object):
    """
    The robot description. All arguments have the calibrated defaults of the
    real robot.

    :arg frame_points:
        4x2, the frame anchors (m, world frame).
    :arg ee_points:
        4x2, the mounting points on the end effector (m, body frame).
    :arg inertia:
        The diagonal of the operational space inertia
        :math:`G = diag(I_z, m, m)` in kg m^2, kg, kg.
    :arg float winch_inertia:
        :math:`J_w` (kg m^2)
    :arg float winch_radius:
        :math:`r` (m)
    :arg float viscous_friction:
        :math:`F_v` (N m s)
    :arg float static_friction:
        :math:`F_s` (N m)
    :arg float tanh_mu:
        :math:`\\mu` (s/rad)
    :arg float tension_min:
        (N)
    :arg float tension_max:
        (N)
    :arg bool gravity_enabled:
        Gravity acts along :math:`-y`.
    :arg float gravity:
        :math:`g` (m/s^2)
    """

    def __init__(
        self,
        frame_points=FRAME_POINTS,
        ee_points=EE_POINTS,
        inertia=(7.79e-6, 0.727, 0.727),
        winch_inertia=19.6e-6,
        winch_radius=0.02,
        viscous_friction=0.002,
        static_friction=0.12,
        tanh_mu=0.19,
        tension_min=1.0,
        tension_max=100.0,
        gravity_enabled=True,
        gravity=9.81
        ):
        """
        """
        self.frame_points = np.array(frame_points, dtype=float)
        self.ee_points = np.array(ee_points, dtype=float)
        self.inertia = np.array(inertia, dtype=float)
        self.winch_inertia = float(winch_inertia)
        self.winch_radius = float(winch_radius)
        self.viscous_friction = float(viscous_friction)
        self.static_friction = float(static_friction)
        self.tanh_mu = float(tanh_mu)
        self.tension_min = float(tension_min)
        self.tension_max = float(tension_max)
        self.gravity_enabled = bool(gravity_enabled)
        self.gravity = float(gravity)

        validators.assert_robot_params(self)
        return None

    def replace(self, **kargs):
        """
        Returns a copy with some parameters replaced.

        .. code-block:: python3

            frictionless = params.replace(viscous_friction=0, static_friction=0)
        """
        d = dict(
            frame_points=self.frame_points,
            ee_points=self.ee_points,
            inertia=self.inertia,
            winch_inertia=self.winch_inertia,
            winch_radius=self.winch_radius,
            viscous_friction=self.viscous_friction,
            static_friction=self.static_friction,
            tanh_mu=self.tanh_mu,
            tension_min=self.tension_min,
            tension_max=self.tension_max,
            gravity_enabled=self.gravity_enabled,
            gravity=self.gravity
        )
        d.update(kargs)
        return type(self)(**d)

    @cached_property
    def G(self):
        """
        The operational space inertia :math:`G` (3x3).
        """
        return np.diag(self.inertia)

    @property
    def mass(self):
        return self.inertia[1]

    @cached_property
    def reflected_inertia(self):
        """
        The winch inertia seen at the cable, :math:`J_w / r^2` (kg).
        """
        return self.winch_inertia/self.winch_radius**2

    @cached_property
    def gravity_wrench(self):
        """
        The gravity wrench :math:`w_g = [0, 0, -m g]` (zero if gravity is
        disabled).
        """
        g = self.gravity if self.gravity_enabled else 0.0
        return np.array([0.0, 0.0, -self.mass*g])

    @cached_property
    def frame_centroid(self):
        """
        The centroid of the frame anchors, the default workspace center.
        """
        return np.mean(self.frame_points, axis=0)


def make_state(pose, velocity=None):
    """
    Stacks *pose* and *velocity* (default zero) into a state vector.
    """
    pose = np.asarray(pose, dtype=float)
    velocity = np.zeros(3) if velocity is None else np.asarray(velocity, dtype=float)
    return np.concatenate([pose, velocity])
