#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.controller.base
=======================

The interface between the simulator and the online controllers.
"""

# std
from collections import namedtuple


__all__ = [
    "FLAG_TENSION_LIMIT",
    "FLAG_INFEASIBLE",
    "FLAG_BEYOND_HORIZON",
    "ControllerOutput",
    "Controller"
]


#: The plant tensions left the limits during the tick.
FLAG_TENSION_LIMIT = 1

#: The tension distribution was infeasible and saturated.
FLAG_INFEASIBLE = 2

#: The gain schedule ended before the query time, the last gains are held.
FLAG_BEYOND_HORIZON = 4


#: The result of :meth:`Controller.step`. *estimate* is ``None`` for
#: controllers without a state estimate, *flags* a bitmask.
ControllerOutput = namedtuple("ControllerOutput", ["torques", "estimate", "flags"])


class Controller(object):
    """
    A stateful online controller. The controller state has a single owner,
    the control loop, which calls :meth:`reset` once and then :meth:`step`
    with increasing times.
    """

    #: The name used in logs and reports.
    name = None

    def reset(self):
        """
        Resets the controller state to the start of the trajectory.
        """
        raise NotImplementedError()

    def step(self, t, z):
        """
        Returns the motor torques for the measurement *z* at time *t*.

        :arg float t:
            The online time (s).
        :arg z:
            The 8d measurement.

        :rtype: ControllerOutput
        """
        raise NotImplementedError()
