#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.synthesis.weights
=========================

The LQG weights. The noise entries are given as standard deviations, in the
physical units of the channel, and squared into covariances.
"""

# third party
from cached_property import cached_property
import numpy as np

# local
from ..base import validators


__all__ = [
    "DEFAULT_Q_DIAG",
    "DEFAULT_R_DIAG",
    "DEFAULT_SIGMA0_STD",
    "DEFAULT_MEAS_STD",
    "DEFAULT_TORQUE_STD",
    "LqgWeights"
]


DEFAULT_Q_DIAG = (1e2, 1e4, 1e4, 0.0, 0.0, 0.0)
DEFAULT_R_DIAG = (1.0, 1.0, 1.0, 1.0)

#: 5.7 deg, 0.1 m, 0.1 m; the initial velocity is known.
DEFAULT_SIGMA0_STD = (np.deg2rad(5.7), 0.1, 0.1, 0.0, 0.0, 0.0)

#: 4 cable lengths (m), 4 cable length rates (m/s)
DEFAULT_MEAS_STD = (0.0018,)*4 + (0.04,)*4

#: (N m)
DEFAULT_TORQUE_STD = (0.059,)*4


class LqgWeights(object):
    """
    :arg q_diag:
        The diagonal of the state cost :math:`Q` (6).
    :arg r_diag:
        The diagonal of the torque cost :math:`R` (4).
    :arg sigma0_std:
        The standard deviations of the initial state (6, rad, m, rad/s, m/s).
    :arg meas_std:
        The standard deviations of the measurement (8, m and m/s).
    :arg torque_std:
        The standard deviations of the torque disturbance (4, N m).
    :arg qf_diag:
        The diagonal of the terminal cost, default *q_diag*.
    """

    def __init__(
        self,
        q_diag=DEFAULT_Q_DIAG,
        r_diag=DEFAULT_R_DIAG,
        sigma0_std=DEFAULT_SIGMA0_STD,
        meas_std=DEFAULT_MEAS_STD,
        torque_std=DEFAULT_TORQUE_STD,
        qf_diag=None
        ):
        """
        """
        self.q_diag = np.array(q_diag, dtype=float)
        self.r_diag = np.array(r_diag, dtype=float)
        self.sigma0_std = np.array(sigma0_std, dtype=float)
        self.meas_std = np.array(meas_std, dtype=float)
        self.torque_std = np.broadcast_to(
            np.array(torque_std, dtype=float), (4,)
        ).copy()
        self.qf_diag = self.q_diag.copy() if qf_diag is None \
            else np.array(qf_diag, dtype=float)

        validators.assert_lqg_weights(self)
        return None

    def replace(self, **kargs):
        d = dict(
            q_diag=self.q_diag,
            r_diag=self.r_diag,
            sigma0_std=self.sigma0_std,
            meas_std=self.meas_std,
            torque_std=self.torque_std,
            qf_diag=self.qf_diag
        )
        d.update(kargs)
        return type(self)(**d)

    @cached_property
    def Q(self):
        return np.diag(self.q_diag)

    @cached_property
    def Qf(self):
        return np.diag(self.qf_diag)

    @cached_property
    def R(self):
        return np.diag(self.r_diag)

    @cached_property
    def Sigma_0(self):
        return np.diag(self.sigma0_std**2)

    @cached_property
    def Sigma_meas(self):
        return np.diag(self.meas_std**2)

    @cached_property
    def Sigma_torque(self):
        return np.diag(self.torque_std**2)
