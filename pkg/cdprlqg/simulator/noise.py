#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.simulator.noise
=======================

The noise injected by the simulator. The defaults equal the LQG noise
model, so that the estimator is consistent with the simulated reality.
"""

# third party
import numpy as np

# local
from ..base import validators
from ..synthesis.weights import DEFAULT_SIGMA0_STD


__all__ = [
    "NoiseConfig"
]


class NoiseConfig(object):
    """
    :arg float meas_std_len:
        Cable length noise (m).
    :arg float meas_std_rate:
        Cable length rate noise (m/s).
    :arg float torque_std:
        Torque disturbance, resampled once per control tick (N m).
    :arg initial_std:
        The initial state perturbation (6).
    :arg int seed:
        The seed of the random number generator (unsigned 64 bit).
    """

    def __init__(
        self,
        meas_std_len=0.0018,
        meas_std_rate=0.04,
        torque_std=0.059,
        initial_std=DEFAULT_SIGMA0_STD,
        seed=0
        ):
        """
        """
        self.meas_std_len = float(meas_std_len)
        self.meas_std_rate = float(meas_std_rate)
        self.torque_std = float(torque_std)
        self.initial_std = np.array(initial_std, dtype=float)
        self.seed = int(seed)

        validators.assert_noise_config(self)
        return None

    @classmethod
    def zero(cls, seed=0):
        """
        No noise and no initial perturbation.
        """
        return cls(0.0, 0.0, 0.0, np.zeros(6), seed)

    def replace(self, **kargs):
        d = dict(
            meas_std_len=self.meas_std_len,
            meas_std_rate=self.meas_std_rate,
            torque_std=self.torque_std,
            initial_std=self.initial_std,
            seed=self.seed
        )
        d.update(kargs)
        return type(self)(**d)

    @property
    def measurement_std(self):
        """
        The standard deviations of the 8 measurement channels.
        """
        return np.array([self.meas_std_len]*4 + [self.meas_std_rate]*4)
