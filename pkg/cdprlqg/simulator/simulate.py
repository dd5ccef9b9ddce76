#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.simulator.simulate
==========================

The closed loop simulation. Every control tick

1.  samples the measurement of the true state with noise,
2.  queries the controller,
3.  samples the torque disturbance of the tick and
4.  integrates the dynamics over the tick with RK4 substeps, holding the
    torques and the disturbance.

The random numbers come from one generator seeded with
:attr:`~cdprlqg.simulator.noise.NoiseConfig.seed` and are drawn in a fixed
order: 6 initial state normals, then per tick 8 measurement normals and 4
disturbance normals. Zero standard deviations still consume their draws, so
a seed yields the same stream for every noise level.
"""

# std
import logging

# third party
import numpy as np

# local
from ..base import errors
from ..controller.base import FLAG_TENSION_LIMIT
from ..model.dynamics import forward_dynamics, rk4_step
from ..model.measurement import measurement_model
from .log import SimLog


__all__ = [
    "DEFAULT_RATES",
    "simulate"
]


LOG = logging.getLogger(__file__)


DEFAULT_RATES = {"offline_hz": 100.0, "ctrl_hz": 1000.0, "substeps": 10}


def simulate(params, controller, reference, noise, rates=None, initial_state=None):
    """
    Simulates *controller* tracking *reference*.

    :arg cdprlqg.model.params.RobotParams params:
    :arg cdprlqg.controller.base.Controller controller:
    :arg cdprlqg.trajectory.trajectory.Trajectory reference:
    :arg cdprlqg.simulator.noise.NoiseConfig noise:
    :arg dict rates:
        ``ctrl_hz`` and ``substeps``, default 1 kHz and 10.
    :arg initial_state:
        The unperturbed initial state, default the start of *reference*.

    :rtype: cdprlqg.simulator.log.SimLog

    :raises cdprlqg.base.errors.SimulationDiverged:
        If the state becomes non-finite or the model breaks down. The
        error carries the log up to the failing tick.
    """
    rates = dict(DEFAULT_RATES, **(rates or dict()))
    ctrl_hz = float(rates["ctrl_hz"])
    substeps = int(rates["substeps"])
    dt = 1.0/ctrl_hz
    if not reference.duration > 0:
        raise errors.InvalidParameter("reference", "must have a positive duration.")
    ticks = int(round(reference.duration*ctrl_hz))

    rng = np.random.default_rng(noise.seed)
    meas_std = noise.measurement_std

    x = reference.state_at(0.0) if initial_state is None \
        else np.array(initial_state, dtype=float)
    x = x + rng.standard_normal(6)*noise.initial_std

    log = SimLog.allocate(dt, ticks)
    controller.reset()
    for j in range(ticks):
        t = j*dt
        try:
            z = measurement_model(params, x) + rng.standard_normal(8)*meas_std
            out = controller.step(t, z)
        except errors.NumericalError as err:
            LOG.error("The simulation failed at tick %d: %s", j, err)
            raise errors.SimulationDiverged(j, log.truncated(j))

        log.t[j] = t
        log.states[j] = x
        if out.estimate is not None:
            log.estimates[j] = out.estimate
        log.measurements[j] = z
        log.torques[j] = out.torques
        log.flags[j] = out.flags

        if not np.all(np.isfinite(out.torques)):
            log.tensions[j] = np.nan
            LOG.error("The controller returned non-finite torques at tick %d.", j)
            raise errors.SimulationDiverged(j, log.truncated(j + 1))

        try:
            disturbance = rng.standard_normal(4)*noise.torque_std
            dynamics = forward_dynamics(params, x, out.torques, disturbance)
            x_next = rk4_step(
                params, x, out.torques, disturbance, dt=dt, substeps=substeps
            )
        except errors.NumericalError as err:
            LOG.error("The simulation failed at tick %d: %s", j, err)
            raise errors.SimulationDiverged(j, log.truncated(j))

        log.tensions[j] = dynamics.tensions
        if dynamics.tension_violation:
            log.flags[j] |= FLAG_TENSION_LIMIT

        if not np.all(np.isfinite(x_next)):
            LOG.error("The state became non-finite at tick %d.", j)
            raise errors.SimulationDiverged(j, log.truncated(j + 1))
        x = x_next

    LOG.info(
        "Simulated %s controller: %d ticks, %d flagged.",
        controller.name, ticks, int(np.count_nonzero(log.flags))
    )
    return log
