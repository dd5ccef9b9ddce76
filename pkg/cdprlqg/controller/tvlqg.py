#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.controller.tvlqg
========================

The online TV-LQG controller. Per offline step the estimator update costs
3 matrix vector products and 3 vector additions:

.. math::

    \\delta\\hat x &\\leftarrow P_k \\delta\\hat x + L_k z + \\tilde c_k(t) \\\\
    u &= u^*(t) - K_k \\delta\\hat x

where :math:`\\tilde c_k(t) = c_k - L_k z^*(t)` is looked up from the
schedule. The control rate is an integer multiple of the offline rate. The
feedback is applied on every call. The measurements of the calls between
two updates are summed up (one vector addition each), and the update of step
:math:`k` corrects with the mean of the *n* measurements received since the
previous update, the current one included. The offset is then taken at the
mean of the nominal measurements of these ticks
(:meth:`~cdprlqg.synthesis.schedule.GainSchedule.window_offset`). With one
call per offline step this is the plain update above.
"""

# std
from collections import namedtuple

# third party
import numpy as np

# local
from .base import Controller, ControllerOutput, FLAG_BEYOND_HORIZON


__all__ = [
    "TvLqgState",
    "OpCounter",
    "CountingOpCounter",
    "initial_state",
    "tvlqg_step",
    "LqgController"
]


#: The controller state. *k* is the offline step of the last estimator
#: update (-1 before the first one). *z_sum* is the sum of the *count*
#: measurements received since then.
TvLqgState = namedtuple(
    "TvLqgState",
    ["k", "delta_xhat", "last_u", "beyond_horizon", "z_sum", "count"]
)


class OpCounter(object):
    """
    The arithmetic of the hot path. This implementation only computes, see
    :class:`CountingOpCounter` for the instrumented one.
    """

    def matvec(self, m, v):
        return m @ v

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b


class CountingOpCounter(OpCounter):
    """
    Counts the matrix vector products and the vector additions
    (subtractions included).
    """

    def __init__(self):
        self.matvecs = 0
        self.adds = 0
        return None

    def reset(self):
        self.matvecs = 0
        self.adds = 0
        return None

    def matvec(self, m, v):
        self.matvecs += 1
        return m @ v

    def add(self, a, b):
        self.adds += 1
        return a + b

    def sub(self, a, b):
        self.adds += 1
        return a - b


#: The default, non counting arithmetic.
PLAIN = OpCounter()


def initial_state(delta_xhat=None):
    """
    Returns the state before the first update, with the initial estimate
    deviation *delta_xhat* (default zero).
    """
    delta_xhat = np.zeros(6) if delta_xhat is None \
        else np.array(delta_xhat, dtype=float)
    return TvLqgState(-1, delta_xhat, None, False, np.zeros(8), 0)


def tvlqg_step(schedule, state, z, t, ops=PLAIN):
    """
    Runs the controller at time *t*.

    :arg cdprlqg.synthesis.schedule.GainSchedule schedule:
    :arg TvLqgState state:
    :arg z:
        The 8d measurement.
    :arg float t:
        The online time (s).
    :arg OpCounter ops:

    :returns: ``(u, state)``. The new state is flagged *beyond_horizon*, if
        *t* is not covered by the schedule.
    """
    lookup = schedule.at(t)
    k = lookup.k
    delta_xhat = state.delta_xhat
    if k > state.k:
        if state.count:
            n = state.count + 1
            z_mean = ops.add(state.z_sum, z)/n
            offset = schedule.window_offset(k, n)
        else:
            z_mean = z
            offset = schedule.offset(lookup)
        delta_xhat = ops.matvec(schedule.P[k], delta_xhat)
        delta_xhat = ops.add(delta_xhat, ops.matvec(schedule.L[k], z_mean))
        delta_xhat = ops.add(delta_xhat, offset)
        z_sum, count = np.zeros(8), 0
    else:
        z_sum, count = ops.add(state.z_sum, z), state.count + 1

    u_nom = schedule.nominal_control(lookup)
    u = ops.sub(u_nom, ops.matvec(schedule.K[k], delta_xhat))
    return u, TvLqgState(
        max(k, state.k), delta_xhat, u, lookup.beyond_horizon, z_sum, count
    )


class LqgController(Controller):
    """
    The stateful wrapper of :func:`tvlqg_step` used by the simulator.

    :arg cdprlqg.synthesis.schedule.GainSchedule schedule:
    :arg delta_xhat0:
        The initial estimate deviation, default zero.
    """

    name = "lqg"

    def __init__(self, schedule, delta_xhat0=None):
        self.schedule = schedule
        self.delta_xhat0 = delta_xhat0
        self.state = initial_state(delta_xhat0)
        return None

    def reset(self):
        self.state = initial_state(self.delta_xhat0)
        return None

    def step(self, t, z):
        u, self.state = tvlqg_step(self.schedule, self.state, z, t)
        lookup = self.schedule.at(t)
        estimate = self.schedule.nominal_state(lookup) + self.state.delta_xhat
        flags = FLAG_BEYOND_HORIZON if self.state.beyond_horizon else 0
        return ControllerOutput(u, estimate, flags)
