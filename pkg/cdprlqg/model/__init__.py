#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.model
=============

The model of the planar 4-cable robot: parameters, cable kinematics, rigid
body and winch dynamics with friction and the encoder measurement model. All
functions are pure functions of an immutable
:class:`~cdprlqg.model.params.RobotParams` instance.

.. automodule:: cdprlqg.model.params
.. automodule:: cdprlqg.model.kinematics
.. automodule:: cdprlqg.model.dynamics
.. automodule:: cdprlqg.model.measurement
"""

# local
from .params import (
    STATE_DIM, CONTROL_DIM, MEAS_DIM, NUM_CABLES, RobotParams, make_state
)
from .kinematics import CableGeometry, cable_geometry
from .dynamics import (
    DynamicsResult, friction_torque, winch_speeds, forward_dynamics,
    state_derivative, rk4_step, total_energy, continuous_jacobian,
    linearize_dynamics
)
from .measurement import measurement_model, linearize_measurement
