#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.simulator
=================

The closed loop simulation of the robot with noise and disturbances, the
simulation log and the tracking metrics.

.. automodule:: cdprlqg.simulator.noise
.. automodule:: cdprlqg.simulator.log
.. automodule:: cdprlqg.simulator.simulate
.. automodule:: cdprlqg.simulator.metrics
"""

# local
from .noise import NoiseConfig
from .log import LOG_HEADER, SimLog, save_log, load_log
from .simulate import DEFAULT_RATES, simulate
from .metrics import METRIC_NAMES, METRIC_UNITS, reference_states, rmsd_metrics
