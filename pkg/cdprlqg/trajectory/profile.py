#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.trajectory.profile
==========================

Time optimal trapezoidal speed profiles with a speed and an acceleration
cap. If the distance is too short to reach the speed cap, the profile
degenerates to a triangle with the peak speed :math:`\\sqrt{a_{max} d}`.
"""

# std
import math

# third party
import numpy as np

# local
from ..base import errors


__all__ = [
    "profile_timing",
    "trapezoidal_profile"
]


def profile_timing(distance, vmax, amax):
    """
    Returns ``(t_accel, t_cruise, v_peak)`` of the profile.

    .. code-block:: python3

        >>> profile_timing(1.0, 0.5, 1.0)
        (0.5, 1.5, 0.5)
    """
    for name, value in (("distance", distance), ("vmax", vmax), ("amax", amax)):
        if not value > 0:
            raise errors.InvalidParameter(name, "must be > 0.")

    if distance >= vmax**2/amax:
        return vmax/amax, (distance - vmax**2/amax)/vmax, vmax
    v_peak = math.sqrt(amax*distance)
    return v_peak/amax, 0.0, v_peak


def trapezoidal_profile(distance, vmax, amax, dt):
    """
    Samples the profile at :math:`t_k = k \\Delta t` until the distance is
    reached. The samples after the end of the motion are evaluated at the
    end. The acceleration is zero at the rest samples (start and end).

    :arg float distance: (m)
    :arg float vmax: (m/s)
    :arg float amax: (m/s^2)
    :arg float dt: (s)

    :returns:
        Kx3 array with the columns :math:`s, \\dot s, \\ddot s`.
    """
    if not dt > 0:
        raise errors.InvalidParameter("dt", "must be > 0.")
    ta, tc, vp = profile_timing(distance, vmax, amax)
    T = 2.0*ta + tc
    a = vp/ta

    count = int(math.ceil(T/dt - 1e-9)) + 1
    t = np.minimum(np.arange(count)*dt, T)
    td = T - t

    accel = t < ta
    cruise = (t >= ta) & (t < ta + tc)
    decel = (t >= ta + tc) & (t < T)

    s = np.select(
        [accel, cruise, decel],
        [0.5*a*t**2, 0.5*a*ta**2 + vp*(t - ta), distance - 0.5*a*td**2],
        default=distance
    )
    sd = np.select([accel, cruise, decel], [a*t, vp, a*td], default=0.0)
    sdd = np.select([accel, cruise, decel], [a, 0.0, -a], default=0.0)
    sdd[0] = 0.0
    return np.column_stack([s, sd, sdd])
