#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.synthesis.lqr
=====================

The time varying LQR gains along the nominal trajectory.
"""

# std
from collections import namedtuple
import logging

# third party
import numpy as np

# local
from ..graph import eliminate_lqr


__all__ = [
    "Linearization",
    "linearize_nominal",
    "synthesize_lqr"
]


LOG = logging.getLogger(__file__)


#: The discrete linearizations :math:`(A_k, B_k, c_k)` along a nominal,
#: ``k = 0 .. N-1``, and the gaps :math:`A_k x^*_k + B_k u^*_k + c_k -
#: x^*_{k+1}`.
Linearization = namedtuple("Linearization", ["A", "B", "c", "gaps"])


def linearize_nominal(plant, states, controls):
    """
    Linearizes *plant* at every step of the nominal.

    :arg cdprlqg.synthesis.plant.Plant plant:
    :arg states: (N+1)x6
    :arg controls: Nx4

    :rtype: Linearization
    """
    A, B, c, gaps = list(), list(), list(), list()
    for k in range(controls.shape[0]):
        Ak, Bk, ck = plant.linearize(states[k], controls[k])
        A.append(Ak)
        B.append(Bk)
        c.append(ck)
        gaps.append(Ak @ states[k] + Bk @ controls[k] + ck - states[k + 1])
    return Linearization(A, B, c, gaps)


def synthesize_lqr(nominal, weights, linearization, tracking=True):
    """
    Eliminates the tracking problem in deviation coordinates along the
    nominal: :math:`\\delta u_k = -K_k \\delta x_k - k_k`.

    :arg cdprlqg.synthesis.ilqr.IlqrResult nominal:
    :arg cdprlqg.synthesis.weights.LqgWeights weights:
    :arg Linearization linearization:
    :arg bool tracking:
        If true, the gradients of the tracking cost at the nominal are
        included. At a converged nominal the feedforward terms :math:`k_k`
        vanish then. Otherwise the pure regulator is eliminated.

    :rtype: list of :class:`~cdprlqg.graph.factor.ConditionalGain`
    """
    N = nominal.horizon
    n = nominal.states.shape[1]
    m = nominal.controls.shape[1]
    if tracking:
        q = list((nominal.states[:-1] - nominal.x_ref[:-1]) @ weights.Q)
        r = list((nominal.controls - nominal.u_ref) @ weights.R)
        qf = weights.Qf @ (nominal.states[-1] - nominal.x_ref[-1])
        gaps = linearization.gaps
    else:
        q = [np.zeros(n)]*N
        r = [np.zeros(m)]*N
        qf = np.zeros(n)
        gaps = None

    gains = eliminate_lqr(
        linearization.A, linearization.B, [weights.Q]*N, q, [weights.R]*N, r,
        weights.Qf, qf, c=gaps
    )

    u_scale = float(np.max(np.linalg.norm(nominal.controls, axis=1)))
    residual = max(float(np.linalg.norm(gain.k_ff)) for gain in gains)
    if tracking and residual > 1e-6*max(u_scale, 1.0):
        LOG.warning(
            "The nominal is not stationary, max |k_ff| = %.3g.", residual
        )
    return gains
