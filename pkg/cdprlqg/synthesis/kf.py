#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.synthesis.kf
====================

The time varying Kalman gains along the nominal trajectory. The torque
disturbance enters the state through :math:`B_k`, so the process noise is
:math:`\\Sigma_{w,k} = B_k \\Sigma_d B_k^T + \\epsilon I`.

Step :math:`k = 0 .. N-1` of the schedule corrects with the measurement
:math:`z_k`. Step 0 starts from the prior :math:`\\Sigma_0`.
"""

# std
from collections import namedtuple

# third party
import numpy as np

# local
from ..graph import marginalize_kf
from ..model.measurement import linearize_measurement


__all__ = [
    "PROCESS_NOISE_FLOOR",
    "KalmanStep",
    "synthesize_kf"
]


#: Added to the diagonal of the process noise covariance.
PROCESS_NOISE_FLOOR = 1e-12

KalmanStep = namedtuple(
    "KalmanStep", ["L", "H", "z_nom", "Sigma_prior", "Sigma_post"]
)


def synthesize_kf(params, nominal, weights, linearization):
    """
    :arg cdprlqg.model.params.RobotParams params:
    :arg cdprlqg.synthesis.ilqr.IlqrResult nominal:
    :arg cdprlqg.synthesis.weights.LqgWeights weights:
    :arg cdprlqg.synthesis.lqr.Linearization linearization:

    :rtype: list of :class:`KalmanStep`, one per step ``k = 0 .. N-1``
    """
    N = nominal.horizon
    n = nominal.states.shape[1]
    I = np.eye(n)

    H, z_nom = list(), list()
    for k in range(N):
        Hk, zk = linearize_measurement(params, nominal.states[k])
        H.append(Hk)
        z_nom.append(zk)

    # A leading identity transition without noise turns the posterior
    # argument of the recursion into the prior of step 0.
    A = [I] + list(linearization.A[:N - 1])
    Sigma_w = [np.zeros((n, n))] + [
        B @ weights.Sigma_torque @ B.T + PROCESS_NOISE_FLOOR*I
        for B in linearization.B[:N - 1]
    ]
    gains = marginalize_kf(
        A, H, Sigma_w, [weights.Sigma_meas]*N, weights.Sigma_0
    )
    return [
        KalmanStep(gain.L, Hk, zk, gain.Sigma_prior, gain.Sigma_post)
        for gain, Hk, zk in zip(gains, H, z_nom)
    ]
