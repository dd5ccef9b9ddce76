#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.synthesis
=================

The offline stage: the iLQR nominal trajectory, the time varying LQR gains
by variable elimination and the time varying Kalman gains by
marginalization, assembled into a :class:`~cdprlqg.synthesis.schedule.GainSchedule`.

.. code-block:: python3

    schedule, nominal = synthesize_schedule(params, reference, LqgWeights())
    save_schedule("diamond.gs", schedule)

.. automodule:: cdprlqg.synthesis.weights
.. automodule:: cdprlqg.synthesis.plant
.. automodule:: cdprlqg.synthesis.ilqr
.. automodule:: cdprlqg.synthesis.lqr
.. automodule:: cdprlqg.synthesis.kf
.. automodule:: cdprlqg.synthesis.schedule
.. automodule:: cdprlqg.synthesis.io
"""

# local
from .weights import LqgWeights
from .plant import Plant, CdprPlant, LinearPlant
from .ilqr import (
    IlqrOptions, IlqrResult, tracking_cost, ilqr_solve, gravity_compensation,
    feedforward_guess, ilqr_nominal
)
from .lqr import Linearization, linearize_nominal, synthesize_lqr
from .kf import KalmanStep, synthesize_kf
from .schedule import GainSchedule, assemble_schedule, synthesize_schedule
from .io import save_schedule, load_schedule, schedule_digest
