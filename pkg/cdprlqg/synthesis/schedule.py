#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.synthesis.schedule
==========================

The gain schedule folds the Kalman filter and the LQR feedback into one
affine estimator update per offline step :math:`k`

.. math::

    \\delta\\hat x_k &= P_k \\delta\\hat x_{k-1} + L_k \\delta z_k + c_k \\\\
    u_k &= u^*_k - K_k \\delta\\hat x_k

with :math:`P_k = (I - L_k H_k)(A_{k-1} - B_{k-1} K_{k-1})` and
:math:`c_k = (I - L_k H_k) g_{k-1}`, where :math:`g_{k-1}` is the gap of the
nominal under the linearized dynamics (zero at an exact nominal). Step 0
corrects the prior, :math:`P_0 = I - L_0 H_0` and :math:`c_0 = 0`.
"""

# std
from collections import namedtuple
import logging
import math

# third party
from cached_property import cached_property
import numpy as np

# local
from ..base import errors
from .ilqr import IlqrOptions, ilqr_nominal
from .kf import synthesize_kf
from .lqr import linearize_nominal, synthesize_lqr
from .plant import CdprPlant


__all__ = [
    "GainSchedule",
    "ScheduleLookup",
    "assemble_schedule",
    "synthesize_schedule"
]


LOG = logging.getLogger(__file__)


#: The record index of a time is rounded up, if the time is this close (in
#: periods) to the next grid point.
GRID_TOL = 1e-9

#: The result of :meth:`GainSchedule.at`.
ScheduleLookup = namedtuple("ScheduleLookup", ["k", "alpha", "beyond_horizon"])


class GainSchedule(object):
    """
    The per step gains of the online controller, ``k = 0 .. N-1``.

    :arg float dt:
        The offline period (s).
    :arg x_nom: Nx6
    :arg u_nom: Nx4
    :arg z_nom: Nx8
    :arg K: Nx4x6, the LQR gains
    :arg L: Nx6x8, the Kalman gains
    :arg P: Nx6x6, the estimator propagation
    :arg c: Nx6, the estimator offset
    """

    def __init__(self, dt, x_nom, u_nom, z_nom, K, L, P, c):
        """
        """
        self.dt = float(dt)
        self.x_nom = np.asarray(x_nom, dtype=float)
        self.u_nom = np.asarray(u_nom, dtype=float)
        self.z_nom = np.asarray(z_nom, dtype=float)
        self.K = np.asarray(K, dtype=float)
        self.L = np.asarray(L, dtype=float)
        self.P = np.asarray(P, dtype=float)
        self.c = np.asarray(c, dtype=float)

        N = self.x_nom.shape[0]
        expected = {
            "x_nom": (N, 6), "u_nom": (N, 4), "z_nom": (N, 8), "K": (N, 4, 6),
            "L": (N, 6, 8), "P": (N, 6, 6), "c": (N, 6)
        }
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise errors.DimensionMismatch(
                    detail="'{}' has shape {}, expected {}."\
                        .format(name, getattr(self, name).shape, shape)
                )
        if N == 0:
            raise errors.InvalidParameter("schedule", "has no records.")
        if not self.dt > 0:
            raise errors.InvalidParameter("dt", "must be > 0.")
        return None

    @property
    def horizon(self):
        return self.x_nom.shape[0]

    @property
    def duration(self):
        """
        The time covered by the records, :math:`N \\Delta t`.
        """
        return self.horizon*self.dt

    @cached_property
    def measurement_offsets(self):
        """
        ``(Lz, Lz_next, Lz_prev)``, the products :math:`L_k z^*_k`, :math:`L_k
        z^*_{k+1}` and :math:`L_k z^*_{k-1}` (the nominal measurements are
        held at both ends).
        """
        Lz = np.einsum("kij,kj->ki", self.L, self.z_nom)
        z_next = np.vstack([self.z_nom[1:], self.z_nom[-1:]])
        z_prev = np.vstack([self.z_nom[:1], self.z_nom[:-1]])
        Lz_next = np.einsum("kij,kj->ki", self.L, z_next)
        Lz_prev = np.einsum("kij,kj->ki", self.L, z_prev)
        return Lz, Lz_next, Lz_prev

    def at(self, t):
        """
        Returns the record index :math:`k = \\lfloor t / \\Delta t \\rfloor`
        and the interpolation weight within the record. Beyond the horizon
        the last record is held.

        :rtype: ScheduleLookup
        """
        s = t/self.dt
        k = int(math.floor(s + GRID_TOL))
        if k >= self.horizon:
            return ScheduleLookup(self.horizon - 1, 0.0, True)
        if k < 0:
            return ScheduleLookup(0, 0.0, False)
        alpha = min(max(s - k, 0.0), 1.0)
        # The last record has no successor to interpolate with.
        if k == self.horizon - 1:
            alpha = 0.0
        return ScheduleLookup(k, alpha, False)

    def _lerp(self, a, k, alpha):
        if alpha == 0.0:
            return a[k]
        return (1.0 - alpha)*a[k] + alpha*a[k + 1]

    def nominal_state(self, lookup):
        return self._lerp(self.x_nom, lookup.k, lookup.alpha)

    def nominal_control(self, lookup):
        return self._lerp(self.u_nom, lookup.k, lookup.alpha)

    def nominal_measurement(self, lookup):
        return self._lerp(self.z_nom, lookup.k, lookup.alpha)

    def offset(self, lookup):
        """
        Returns :math:`\\tilde c = c_k - L_k z^*(t)`, so that the update is
        :math:`P_k \\delta\\hat x + L_k z + \\tilde c`.
        """
        Lz, Lz_next, _ = self.measurement_offsets
        k, alpha = lookup.k, lookup.alpha
        if alpha == 0.0:
            return self.c[k] - Lz[k]
        return self.c[k] - ((1.0 - alpha)*Lz[k] + alpha*Lz_next[k])

    def window_offset(self, k, n):
        """
        Returns :math:`c_k - L_k \\bar z^*` for the mean :math:`\\bar z^*` of
        the nominal measurements at the *n* evenly spaced ticks
        :math:`t_k - j \\Delta t / n`, ``j = 0 .. n-1``:

        .. math::

            \\bar z^* = z^*_k - \\beta (z^*_k - z^*_{k-1}), \\qquad
            \\beta = \\frac{n - 1}{2n}
        """
        Lz, _, Lz_prev = self.measurement_offsets
        beta = (n - 1)/(2.0*n)
        return self.c[k] - ((1.0 - beta)*Lz[k] + beta*Lz_prev[k])

    def equals(self, other):
        """
        True, if both schedules are bit identical.
        """
        return self.dt == other.dt and all(
            np.array_equal(getattr(self, name), getattr(other, name))
            for name in ("x_nom", "u_nom", "z_nom", "K", "L", "P", "c")
        )


def assemble_schedule(nominal, lqr_gains, kf_steps, linearization):
    """
    Folds the LQR and the Kalman gains into a :class:`GainSchedule`. The
    LQR feedforward terms are dropped, they vanish at a converged nominal.

    :arg cdprlqg.synthesis.ilqr.IlqrResult nominal:
    :arg list lqr_gains:
        The result of :func:`~cdprlqg.synthesis.lqr.synthesize_lqr`.
    :arg list kf_steps:
        The result of :func:`~cdprlqg.synthesis.kf.synthesize_kf`.
    :arg cdprlqg.synthesis.lqr.Linearization linearization:

    :raises cdprlqg.base.errors.DimensionMismatch:
        If the horizons differ.
    """
    N = nominal.horizon
    lengths = {
        "lqr_gains": len(lqr_gains), "kf_steps": len(kf_steps),
        "linearization": len(linearization.A)
    }
    for name, length in lengths.items():
        if length != N:
            raise errors.DimensionMismatch(
                detail="'{}' has {} steps, expected {}.".format(name, length, N)
            )

    n = nominal.states.shape[1]
    I = np.eye(n)
    K = np.array([gain.K for gain in lqr_gains])
    L = np.array([step.L for step in kf_steps])
    P = np.empty((N, n, n))
    c = np.zeros((N, n))
    for k in range(N):
        correction = I - kf_steps[k].L @ kf_steps[k].H
        if k == 0:
            P[k] = correction
        else:
            A = linearization.A[k - 1]
            B = linearization.B[k - 1]
            P[k] = correction @ (A - B @ K[k - 1])
            c[k] = correction @ linearization.gaps[k - 1]

    return GainSchedule(
        nominal.dt, nominal.states[:N], nominal.controls,
        np.array([step.z_nom for step in kf_steps]), K, L, P, c
    )


def synthesize_schedule(params, reference, weights, opts=None):
    """
    Runs the offline stage: the nominal trajectory, the LQR and the Kalman
    gains and the assembly of the schedule.

    :arg cdprlqg.model.params.RobotParams params:
    :arg cdprlqg.trajectory.trajectory.Trajectory reference:
    :arg cdprlqg.synthesis.weights.LqgWeights weights:
    :arg cdprlqg.synthesis.ilqr.IlqrOptions opts:

    :returns: ``(schedule, nominal)``
    """
    opts = opts if opts is not None else IlqrOptions()
    nominal = ilqr_nominal(params, reference, weights, opts)
    plant = CdprPlant(params, reference.dt, opts.discretization, opts.substeps)
    linearization = linearize_nominal(plant, nominal.states, nominal.controls)

    lqr_gains = synthesize_lqr(nominal, weights, linearization)
    kf_steps = synthesize_kf(params, nominal, weights, linearization)
    schedule = assemble_schedule(nominal, lqr_gains, kf_steps, linearization)

    traces = [np.trace(step.Sigma_post) for step in kf_steps]
    LOG.info(
        "Schedule: %d records, max posterior trace %.3g.",
        schedule.horizon, max(traces)
    )
    return schedule, nominal
