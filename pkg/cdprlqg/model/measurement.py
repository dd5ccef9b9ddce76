#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.model.measurement
=========================

The robot measures the cable lengths and the cable length rates through the
winch encoders:

.. math::

    z = [l_1, .., l_4, \\dot l_1, .., \\dot l_4]
"""

# third party
import numpy as np

# local
from .kinematics import cable_geometry
from .params import MEAS_DIM, STATE_DIM


__all__ = [
    "measurement_model",
    "linearize_measurement"
]


def measurement_model(params, state):
    """
    Returns the noise free measurement :math:`z = [l, J \\dot x]` of *state*.

    :raises cdprlqg.base.errors.DegenerateCable:
    """
    geometry = cable_geometry(params, state[:3])
    return np.concatenate([geometry.lengths, geometry.length_rates(state[3:])])


def linearize_measurement(params, state, exact=False, step=1e-6):
    """
    Returns ``(H, z_nom)`` with :math:`z \\approx z_{nom} + H (x - x_{nom})`.

    The length rows are :math:`[J, 0]`, the rate rows :math:`[0, J]`. The
    dependency of the rates on the pose vanishes at rest and is neglected,
    unless *exact* is true. Then the full Jacobian is computed with central
    differences.
    """
    state = np.asarray(state, dtype=float)
    geometry = cable_geometry(params, state[:3])
    z_nom = np.concatenate(
        [geometry.lengths, geometry.length_rates(state[3:])]
    )

    if exact:
        H = np.empty((MEAS_DIM, STATE_DIM))
        for i in range(STATE_DIM):
            e = np.zeros(STATE_DIM)
            e[i] = step
            H[:, i] = (
                measurement_model(params, state + e)
                - measurement_model(params, state - e)
            )/(2.0*step)
    else:
        H = np.zeros((MEAS_DIM, STATE_DIM))
        H[:4, :3] = geometry.J
        H[4:, 3:] = geometry.J
    return H, z_nom
