#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.controller
==================

The online controllers, which run at the control rate: the TV-LQG
controller driven by a precomputed gain schedule and the baseline dual space
feedforward controller. Both share the tension distribution.

.. automodule:: cdprlqg.controller.base
.. automodule:: cdprlqg.controller.tension
.. automodule:: cdprlqg.controller.tvlqg
.. automodule:: cdprlqg.controller.baseline
"""

# local
from .base import (
    FLAG_TENSION_LIMIT, FLAG_INFEASIBLE, FLAG_BEYOND_HORIZON, ControllerOutput,
    Controller
)
from .tension import (
    TensionInterval, tension_interval, tension_distribution,
    saturated_tension_distribution
)
from .tvlqg import (
    TvLqgState, OpCounter, CountingOpCounter, initial_state, tvlqg_step,
    LqgController
)
from .baseline import (
    BaselineGains, BaselineOutput, baseline_step, BaselineController
)
