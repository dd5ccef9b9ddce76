#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.synthesis.plant
=======================

The discrete plant seen by the offline stage. The trajectory optimizer only
needs a step function and its linearization, so that it can be tested on a
linear plant, too.
"""

# third party
import numpy as np

# local
from ..base import errors
from ..model.dynamics import linearize_dynamics, rk4_step, state_derivative


__all__ = [
    "MAX_SUBSTEP",
    "Plant",
    "CdprPlant",
    "LinearPlant"
]


#: The longest RK4 substep of the offline plant (s).
MAX_SUBSTEP = 2e-3


class Plant(object):
    """
    The interface of a discrete time plant :math:`x_{k+1} = f(x_k, u_k)`.
    """

    def step(self, state, control):
        """
        Returns :math:`f(x_k, u_k)`.
        """
        raise NotImplementedError()

    def linearize(self, state, control):
        """
        Returns ``(A, B, c)`` with :math:`f(x, u) \\approx A x + B u + c`
        near the nominal.
        """
        raise NotImplementedError()


class CdprPlant(Plant):
    """
    The cable robot sampled with the period *dt*.

    The winch dynamics are stiff against the offline period, a single RK4
    step of 10 ms is unstable already at rest. The *rk4* plant therefore
    integrates every period with *substeps* RK4 steps.

    :arg cdprlqg.model.params.RobotParams params:
    :arg float dt:
    :arg str discretization:
        ``"rk4"`` (default) or ``"euler"``.
    :arg int substeps:
        The number of RK4 steps per period. The default keeps every substep
        at or below :data:`MAX_SUBSTEP`.
    """

    def __init__(self, params, dt, discretization="rk4", substeps=None):
        if discretization not in ("rk4", "euler"):
            raise errors.InvalidParameter(
                "discretization", "must be 'euler' or 'rk4'."
            )
        if substeps is None:
            substeps = max(1, int(np.ceil(dt/MAX_SUBSTEP - 1e-9)))
        if int(substeps) != substeps or substeps < 1:
            raise errors.InvalidParameter("substeps", "must be a positive integer.")
        self.params = params
        self.dt = float(dt)
        self.discretization = discretization
        self.substeps = int(substeps)
        return None

    def step(self, state, control):
        if self.discretization == "rk4":
            return rk4_step(
                self.params, state, control, dt=self.dt, substeps=self.substeps
            )
        return state + self.dt*state_derivative(self.params, state, control)

    def linearize(self, state, control):
        return linearize_dynamics(
            self.params, state, control, self.dt, method=self.discretization,
            substeps=self.substeps
        )


class LinearPlant(Plant):
    """
    The time invariant plant :math:`x_{k+1} = A x_k + B u_k + c`.
    """

    def __init__(self, A, B, c=None):
        self.A = np.asarray(A, dtype=float)
        self.B = np.asarray(B, dtype=float)
        self.c = np.zeros(self.A.shape[0]) if c is None \
            else np.asarray(c, dtype=float)
        return None

    def step(self, state, control):
        return self.A @ state + self.B @ control + self.c

    def linearize(self, state, control):
        return self.A, self.B, self.c
