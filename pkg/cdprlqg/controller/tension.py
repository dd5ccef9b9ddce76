#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.controller.tension
==========================

Tension distribution for the robot with one redundant cable. All tension
vectors realizing a wrench :math:`w` lie on the line

.. math::

    t(\\lambda) = t_p + \\lambda n

with the minimum norm solution :math:`t_p` of :math:`W t = w` and the unit
null vector :math:`n` of :math:`W`. Each of the 8 tension limits cuts the
line in a half-line, their intersection is the feasible interval
:math:`[\\lambda_{lo}, \\lambda_{hi}]`. The returned solution is the one
closest to the middle of the limits,
:math:`t_{mid} = \\frac{1}{2}(t_{min} + t_{max}) \\mathbf{1}`.
"""

# std
from collections import namedtuple

# third party
import numpy as np
import scipy.linalg

# local
from ..base import errors


__all__ = [
    "TensionInterval",
    "tension_interval",
    "tension_distribution",
    "saturated_tension_distribution"
]


#: The line of solutions and its feasible interval.
TensionInterval = namedtuple(
    "TensionInterval", ["particular", "null_vector", "lambda_lo", "lambda_hi",
    "feasible"]
)

#: Null vector components below this magnitude make a cable insensitive to
#: :math:`\\lambda`.
NULL_TOL = 1e-12


def tension_interval(W, wrench, t_min, t_max, tol=1e-12):
    """
    Computes the line of solutions and intersects it with the tension
    limits.

    :arg W: 3x4 structure matrix of rank 3
    :arg wrench: 3
    :arg float t_min:
    :arg float t_max:

    :rtype: TensionInterval

    :raises cdprlqg.base.errors.ConditioningError:
        If *W* does not have full row rank.
    """
    W = np.asarray(W, dtype=float)
    wrench = np.asarray(wrench, dtype=float)

    particular = np.linalg.lstsq(W, wrench, rcond=None)[0]
    null = scipy.linalg.null_space(W)
    if null.shape[1] != 1:
        raise errors.ConditioningError("structure matrix")
    n = null[:, 0]
    if np.sum(n) < 0:
        n = -n

    lo, hi = -np.inf, np.inf
    feasible = True
    for tp, ni in zip(particular, n):
        if abs(ni) < NULL_TOL:
            if tp < t_min - tol or tp > t_max + tol:
                feasible = False
            continue
        a = (t_min - tp)/ni
        b = (t_max - tp)/ni
        lo = max(lo, min(a, b))
        hi = min(hi, max(a, b))
    feasible = feasible and lo <= hi + tol
    return TensionInterval(particular, n, lo, hi, feasible)


def _closest(interval, t_min, t_max, lo, hi):
    t_mid = np.full(interval.particular.shape, 0.5*(t_min + t_max))
    lam = interval.null_vector @ (t_mid - interval.particular)
    lam = min(max(lam, lo), hi)
    return interval.particular + lam*interval.null_vector


def tension_distribution(W, wrench, t_min, t_max):
    """
    Returns the tensions within ``[t_min, t_max]``, which realize *wrench*
    and are closest to the middle of the limits.

    .. code-block:: python3

        t = tension_distribution(geometry.W, wrench, 1.0, 100.0)

    :raises cdprlqg.base.errors.InfeasibleWrench:
        If no tensions within the limits realize *wrench*.
    """
    interval = tension_interval(W, wrench, t_min, t_max)
    if not interval.feasible:
        raise errors.InfeasibleWrench(interval.lambda_lo, interval.lambda_hi)
    lo = min(interval.lambda_lo, interval.lambda_hi)
    return _closest(interval, t_min, t_max, lo, interval.lambda_hi)


def saturated_tension_distribution(W, wrench, t_min, t_max):
    """
    Like :func:`tension_distribution`, but an infeasible wrench does not
    raise. :math:`\\lambda` is saturated to the nearest bound of the
    (empty) interval instead, so the wrench is still realized exactly while
    some tensions violate their limits.

    :returns: ``(tensions, infeasible)``
    """
    interval = tension_interval(W, wrench, t_min, t_max)
    lo = min(interval.lambda_lo, interval.lambda_hi)
    hi = max(interval.lambda_lo, interval.lambda_hi)
    tensions = _closest(interval, t_min, t_max, lo, hi)
    return tensions, not interval.feasible
