#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.base.validators
=======================

This module contains validators for the parameter objects (robot, weights,
controller gains, noise). If a value is invalid, the validator detects the
source and creates a verbose error, which names the configuration key, e.g.
``robot.tension_min``.

All validators only assert the invariants of the values. They do not
convert units or fill in defaults.
"""

# third party
import numpy as np

# local
from .errors import InvalidConfig


__all__ = [
    "assert_finite_value",
    "assert_positive",
    "assert_nonnegative",
    "assert_shape",
    "assert_psd_matrix",
    "assert_pd_matrix",
    "assert_robot_params",
    "assert_lqg_weights",
    "assert_baseline_gains",
    "assert_noise_config",
    "assert_rates"
]


def assert_finite_value(value, key):
    """
    Asserts, that *value* (a number or an array) is finite.

    :arg value:
    :arg str key:

    :raises InvalidConfig:
    """
    if not np.all(np.isfinite(np.asarray(value, dtype=float))):
        raise InvalidConfig(key, "The value must be finite.")
    return None


def assert_positive(value, key):
    """
    Asserts, that all entries of *value* are finite and > 0.

    :raises InvalidConfig:
    """
    assert_finite_value(value, key)
    if not np.all(np.asarray(value, dtype=float) > 0):
        raise InvalidConfig(key, "The value must be > 0.")
    return None


def assert_nonnegative(value, key):
    """
    Asserts, that all entries of *value* are finite and >= 0.

    :raises InvalidConfig:
    """
    assert_finite_value(value, key)
    if not np.all(np.asarray(value, dtype=float) >= 0):
        raise InvalidConfig(key, "The value must be >= 0.")
    return None


def assert_shape(value, shape, key):
    """
    Asserts, that the array *value* has the shape *shape*.

    :raises InvalidConfig:
    """
    value = np.asarray(value)
    if value.shape != tuple(shape):
        raise InvalidConfig(
            key, "Expected shape {}, got {}.".format(tuple(shape), value.shape)
        )
    return None


def assert_psd_matrix(m, key, tol=1e-9):
    """
    Asserts, that *m* is a symmetric positive semidefinite matrix.

    :raises InvalidConfig:
    """
    m = np.asarray(m, dtype=float)
    assert_finite_value(m, key)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidConfig(key, "The value must be a square matrix.")
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    if np.max(np.abs(m - m.T), initial=0.0) > tol*scale:
        raise InvalidConfig(key, "The matrix must be symmetric.")
    if m.size and np.min(np.linalg.eigvalsh(m)) < -tol*scale:
        raise InvalidConfig(key, "The matrix must be positive semidefinite.")
    return None


def assert_pd_matrix(m, key):
    """
    Asserts, that *m* is a symmetric positive definite matrix.

    :raises InvalidConfig:
    """
    assert_psd_matrix(m, key)
    m = np.asarray(m, dtype=float)
    if m.size and np.min(np.linalg.eigvalsh(m)) <= 0:
        raise InvalidConfig(key, "The matrix must be positive definite.")
    return None


def assert_robot_params(params, prefix="robot."):
    """
    Asserts the invariants of a :class:`~cdprlqg.model.params.RobotParams`
    instance.

    :arg cdprlqg.model.params.RobotParams params:
    :arg str prefix:
        Prepended to the attribute names in the error messages.

    :raises InvalidConfig:
    """
    assert_shape(params.frame_points, (4, 2), prefix + "frame_points")
    assert_finite_value(params.frame_points, prefix + "frame_points")
    assert_shape(params.ee_points, (4, 2), prefix + "ee_points")
    assert_finite_value(params.ee_points, prefix + "ee_points")

    assert_shape(params.inertia, (3,), prefix + "inertia")
    assert_positive(params.inertia, prefix + "inertia")
    assert_positive(params.winch_inertia, prefix + "winch_inertia")
    assert_positive(params.winch_radius, prefix + "winch_radius")

    assert_nonnegative(params.viscous_friction, prefix + "viscous_friction")
    assert_nonnegative(params.static_friction, prefix + "static_friction")
    assert_nonnegative(params.tanh_mu, prefix + "tanh_mu")

    assert_nonnegative(params.tension_min, prefix + "tension_min")
    assert_finite_value(params.tension_max, prefix + "tension_max")
    if not params.tension_min < params.tension_max:
        raise InvalidConfig(
            prefix + "tension_min",
            "The value must be less than '{}tension_max'.".format(prefix)
        )

    assert_nonnegative(params.gravity, prefix + "gravity")
    return None


def assert_lqg_weights(weights, prefix="weights."):
    """
    Asserts the invariants of a :class:`~cdprlqg.synthesis.weights.LqgWeights`
    instance.

    :raises InvalidConfig:
    """
    assert_shape(weights.Q, (6, 6), prefix + "q_diag")
    assert_psd_matrix(weights.Q, prefix + "q_diag")

    assert_shape(weights.R, (4, 4), prefix + "r_diag")
    assert_pd_matrix(weights.R, prefix + "r_diag")

    assert_shape(weights.Sigma_0, (6, 6), prefix + "sigma0_std")
    assert_psd_matrix(weights.Sigma_0, prefix + "sigma0_std")

    assert_shape(weights.Sigma_meas, (8, 8), prefix + "meas_std")
    assert_pd_matrix(weights.Sigma_meas, prefix + "meas_std")

    assert_shape(weights.Sigma_torque, (4, 4), prefix + "torque_std")
    assert_pd_matrix(weights.Sigma_torque, prefix + "torque_std")
    return None


def assert_baseline_gains(gains, prefix="baseline."):
    """
    Asserts the invariants of a
    :class:`~cdprlqg.controller.baseline.BaselineGains` instance.

    :raises InvalidConfig:
    """
    assert_nonnegative(gains.Kp, prefix + "kp")
    assert_nonnegative(gains.Ki, prefix + "ki")
    assert_nonnegative(gains.Kd, prefix + "kd")
    assert_nonnegative(gains.integrator_limit, prefix + "integrator_limit")
    return None


def assert_noise_config(noise, prefix="noise."):
    """
    Asserts the invariants of a
    :class:`~cdprlqg.simulator.noise.NoiseConfig` instance.

    :raises InvalidConfig:
    """
    assert_nonnegative(noise.meas_std_len, prefix + "meas_std_len")
    assert_nonnegative(noise.meas_std_rate, prefix + "meas_std_rate")
    assert_nonnegative(noise.torque_std, prefix + "torque_std")
    assert_shape(noise.initial_std, (6,), prefix + "initial_std")
    assert_nonnegative(noise.initial_std, prefix + "initial_std")
    if int(noise.seed) != noise.seed or not 0 <= noise.seed < 2**64:
        raise InvalidConfig(prefix + "seed", "The seed must be an unsigned 64 bit integer.")
    return None


def assert_rates(rates, prefix="rates."):
    """
    Asserts, that the rates are positive and that the control rate is an
    integer multiple of the offline rate.

    :arg dict rates:
        ``{"offline_hz": .., "ctrl_hz": .., "substeps": ..}``

    :raises InvalidConfig:
    """
    for key in ("offline_hz", "ctrl_hz", "substeps"):
        assert_positive(rates[key], prefix + key)
    if int(rates["substeps"]) != rates["substeps"]:
        raise InvalidConfig(prefix + "substeps", "The value must be an integer.")
    ratio = rates["ctrl_hz"]/rates["offline_hz"]
    if ratio < 1 or abs(ratio - round(ratio)) > 1e-9:
        raise InvalidConfig(
            prefix + "ctrl_hz",
            "The value must be an integer multiple of '{}offline_hz'."\
                .format(prefix)
        )
    return None
