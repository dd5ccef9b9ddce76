#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.model.kinematics
========================

Cable kinematics of the planar robot.

The mounting point of cable :math:`i` in the world frame is
:math:`q_i = p + R(\\theta) b_i`. With :math:`s_i = q_i - a_i` the cable
length is :math:`l_i = \\|s_i\\|` and the unit vector :math:`\\hat u_i =
s_i / l_i` points from the anchor to the end effector. A cable pulls the end
effector towards its anchor, so column :math:`i` of the structure matrix is

.. math::

    W_{:,i} = \\begin{bmatrix} R b_i \\times (-\\hat u_i) \\\\ -\\hat u_i
        \\end{bmatrix}

and the wrench :math:`[\\tau_z, f_x, f_y]` of the tensions :math:`t` is
:math:`W t`. The cable Jacobian :math:`\\dot l = J [\\dot\\theta, \\dot p]`
is :math:`J = -W^T`.
"""

# third party
import numpy as np

# local
from ..base import errors
from ..base.utilities import cross2, rotation


__all__ = [
    "MIN_CABLE_LENGTH",
    "CableGeometry",
    "cable_geometry"
]


#: Cables shorter than this are degenerate (m).
MIN_CABLE_LENGTH = 1e-9


class CableGeometry(object):
    """
    The cable geometry at one pose.

    :ivar lengths: 4, the cable lengths :math:`l`
    :ivar unit_vectors: 4x2, :math:`\\hat u_i` (anchor to end effector)
    :ivar arms: 4x2, the rotated mounting points :math:`R(\\theta) b_i`
    :ivar W: 3x4, the structure matrix
    :ivar J: 4x3, the cable Jacobian, :math:`J = -W^T`
    """

    def __init__(self, lengths, unit_vectors, arms):
        """
        """
        self.lengths = lengths
        self.unit_vectors = unit_vectors
        self.arms = arms

        self.W = np.empty((3, 4))
        self.W[0] = cross2(arms, -unit_vectors)
        self.W[1:] = -unit_vectors.T
        self.J = -self.W.T
        return None

    def length_rates(self, velocity):
        """
        Returns :math:`\\dot l = J v` for the velocity
        :math:`v = [\\dot\\theta, \\dot p_x, \\dot p_y]`.
        """
        return self.J @ velocity

    def length_curvature(self, velocity):
        """
        Returns :math:`\\dot J v`, the second derivative of the cable lengths
        along *velocity* at zero acceleration.
        """
        omega = velocity[0]
        # Velocities of the mounting points: p_dot + omega x (R b).
        perp = np.column_stack([-self.arms[:, 1], self.arms[:, 0]])
        point_velocity = velocity[1:] + omega*perp
        rates = np.einsum("ij,ij->i", self.unit_vectors, point_velocity)
        speed2 = np.einsum("ij,ij->i", point_velocity, point_velocity)
        centripetal = np.einsum("ij,ij->i", self.unit_vectors, self.arms)
        return (speed2 - rates**2)/self.lengths - omega**2*centripetal


def cable_geometry(params, pose):
    """
    Computes the cable geometry of *params* at *pose*.

    :arg cdprlqg.model.params.RobotParams params:
    :arg pose:
        :math:`[\\theta, p_x, p_y]`

    :rtype: CableGeometry

    :raises cdprlqg.base.errors.DegenerateCable:
        If a cable is shorter than :data:`MIN_CABLE_LENGTH`.
    """
    arms = params.ee_points @ rotation(pose[0]).T
    s = pose[1:3] + arms - params.frame_points
    lengths = np.sqrt(np.einsum("ij,ij->i", s, s))

    shortest = int(np.argmin(lengths))
    if not lengths[shortest] > MIN_CABLE_LENGTH:
        raise errors.DegenerateCable(shortest, lengths[shortest])
    return CableGeometry(lengths, s/lengths[:, None], arms)
