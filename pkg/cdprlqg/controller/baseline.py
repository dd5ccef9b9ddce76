#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.controller.baseline
===========================

The baseline dual space feedforward controller: a PID controller on the
cable lengths, whose correction is mapped to the operational space, where
the inertial and gravity feedforward is added. The tension distribution
maps the wrench back to the cables and a friction feedforward completes the
motor torques.
"""

# std
from collections import namedtuple

# third party
import numpy as np

# local
from ..base import validators
from ..model.dynamics import friction_torque
from ..model.kinematics import cable_geometry
from .base import Controller, ControllerOutput, FLAG_INFEASIBLE
from .tension import saturated_tension_distribution


__all__ = [
    "BaselineGains",
    "BaselineOutput",
    "baseline_step",
    "BaselineController"
]


class BaselineGains(object):
    """
    :arg float Kp: (N/m)
    :arg float Ki: (N/(m s))
    :arg float Kd: (N s/m)
    :arg float integrator_limit:
        The integrator of each cable is clamped to this magnitude (m s).
    """

    def __init__(self, Kp=3e3, Ki=5e3, Kd=1e1, integrator_limit=0.05):
        self.Kp = float(Kp)
        self.Ki = float(Ki)
        self.Kd = float(Kd)
        self.integrator_limit = float(integrator_limit)

        validators.assert_baseline_gains(self)
        return None


#: The result of :func:`baseline_step`.
BaselineOutput = namedtuple(
    "BaselineOutput", ["torques", "integrator", "infeasible", "wrench"]
)


def baseline_step(params, gains, z, ref_sample, dt, integrator):
    """
    Computes the motor torques of the baseline controller.

    :arg cdprlqg.model.params.RobotParams params:
    :arg BaselineGains gains:
    :arg z:
        The 8d measurement.
    :arg ref_sample:
        ``(pose, velocity, acceleration)`` of the reference.
    :arg float dt:
        The control period (s).
    :arg integrator:
        The 4 integrator states (m s).

    :rtype: BaselineOutput
    """
    pose, velocity, accel = ref_sample
    geometry = cable_geometry(params, pose)
    l_d = geometry.lengths
    l_dot_d = geometry.length_rates(velocity)

    error = l_d - z[:4]
    limit = gains.integrator_limit
    integrator = np.clip(integrator + error*dt, -limit, limit)
    pid = gains.Kp*error + gains.Ki*integrator + gains.Kd*(l_dot_d - z[4:])

    wrench = geometry.J.T @ pid + params.G @ accel - params.gravity_wrench
    tensions, infeasible = saturated_tension_distribution(
        geometry.W, wrench, params.tension_min, params.tension_max
    )
    r = params.winch_radius
    torques = r*tensions + friction_torque(params, -l_dot_d/r)
    return BaselineOutput(torques, integrator, infeasible, wrench)


class BaselineController(Controller):
    """
    The stateful wrapper of :func:`baseline_step`.

    :arg cdprlqg.model.params.RobotParams params:
    :arg BaselineGains gains:
    :arg cdprlqg.trajectory.trajectory.Trajectory reference:
    :arg float dt:
        The control period (s).
    """

    name = "baseline"

    def __init__(self, params, gains, reference, dt):
        self.params = params
        self.gains = gains
        self.reference = reference
        self.dt = float(dt)
        self.integrator = np.zeros(4)
        return None

    def reset(self):
        self.integrator = np.zeros(4)
        return None

    def step(self, t, z):
        out = baseline_step(
            self.params, self.gains, z, self.reference.interpolate(t), self.dt,
            self.integrator
        )
        self.integrator = out.integrator
        flags = FLAG_INFEASIBLE if out.infeasible else 0
        return ControllerOutput(out.torques, None, flags)
