#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.graph
=============

A small engine for chain structured Gaussian factor graphs. Backward
variable elimination yields the time varying LQR gains, forward
marginalization yields the time varying Kalman gains.

.. automodule:: cdprlqg.graph.factor
.. automodule:: cdprlqg.graph.elimination
.. automodule:: cdprlqg.graph.marginal
"""

# local
from .factor import QuadraticFactor, ChainGraph, ConditionalGain, MarginalGain
from .elimination import eliminate_lqr, solve_linear_chain
from .marginal import marginalize_kf
