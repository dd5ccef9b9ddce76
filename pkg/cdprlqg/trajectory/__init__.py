#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.trajectory
==================

Reference trajectories: trapezoidal speed profiles, the concentric diamond
benchmark and the CSV file format.

.. automodule:: cdprlqg.trajectory.trajectory
.. automodule:: cdprlqg.trajectory.profile
.. automodule:: cdprlqg.trajectory.diamond
.. automodule:: cdprlqg.trajectory.io
"""

# local
from .trajectory import Trajectory
from .profile import profile_timing, trapezoidal_profile
from .diamond import (
    diamond_vertices, polyline_reference, diamond_reference, hold_reference
)
from .io import save_trajectory, load_trajectory
