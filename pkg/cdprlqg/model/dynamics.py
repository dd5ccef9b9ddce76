#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.model.dynamics
======================

Rigid body and winch dynamics of the planar robot.

Sign conventions:

*   A positive motor torque :math:`\\tau_m` reels the cable in and creates
    tension.
*   The winch speed :math:`\\omega = -(J v)/r` is the reel-in speed.
*   The effective torque is :math:`\\tau_{eff} = \\tau_m + d -
    F(\\omega)` with the friction :math:`F(\\omega) = F_v \\omega + F_s
    \\tanh(\\mu \\omega)`.

With the reflected winch inertia :math:`c = J_w / r^2` the equations of
motion are

.. math::

    (G + c J^T J) \\ddot x = W \\tau_{eff}/r + w_g - c J^T \\dot J v

and the cable tensions are :math:`t = (\\tau_{eff} - J_w \\dot\\omega)/r`
with :math:`\\dot\\omega = -(J \\ddot x + \\dot J v)/r`. The kinetic energy
:math:`\\frac{1}{2} v^T G v + \\sum \\frac{1}{2} J_w \\omega_i^2` is
conserved when there is no torque, friction and gravity.
"""

# std
from collections import namedtuple

# third party
import numpy as np

# local
from ..base import errors
from .kinematics import cable_geometry
from .params import CONTROL_DIM, STATE_DIM


__all__ = [
    "DynamicsResult",
    "friction_torque",
    "winch_speeds",
    "forward_dynamics",
    "state_derivative",
    "rk4_step",
    "total_energy",
    "continuous_jacobian",
    "linearize_dynamics"
]


#: The result of :func:`forward_dynamics`.
DynamicsResult = namedtuple(
    "DynamicsResult", ["accel", "tensions", "tension_violation"]
)

#: Central finite difference step of the linearizations.
FD_STEP = 1e-6


def friction_torque(params, omega):
    """
    Returns the winch friction :math:`F_v \\omega + F_s \\tanh(\\mu\\omega)`
    (N m). *omega* may be a scalar or an array (rad/s).
    """
    return params.viscous_friction*omega \
        + params.static_friction*np.tanh(params.tanh_mu*omega)


def winch_speeds(params, geometry, velocity):
    """
    Returns the reel-in speeds :math:`\\omega = -(J v)/r` of the winches.
    """
    return -(geometry.J @ velocity)/params.winch_radius


def forward_dynamics(params, state, torques, disturbance=None):
    """
    Computes the acceleration and the cable tensions.

    :arg cdprlqg.model.params.RobotParams params:
    :arg state:
        The 6d state.
    :arg torques:
        The 4 motor torques (N m).
    :arg disturbance:
        The 4 disturbance torques (N m), default zero.

    :rtype: DynamicsResult
    :returns:
        The acceleration :math:`[\\ddot\\theta, \\ddot p_x, \\ddot p_y]`, the
        tensions and a flag, which is true if a tension is outside
        ``[tension_min, tension_max]``. Tensions are reported, not clamped.

    :raises cdprlqg.base.errors.DegenerateCable:
    :raises cdprlqg.base.errors.ConditioningError:
        If the augmented inertia is singular.
    """
    geometry = cable_geometry(params, state[:3])
    velocity = state[3:]
    r = params.winch_radius
    c = params.reflected_inertia

    omega = -(geometry.J @ velocity)/r
    tau = np.asarray(torques, dtype=float) - friction_torque(params, omega)
    if disturbance is not None:
        tau = tau + disturbance

    curvature = geometry.length_curvature(velocity)
    M = params.G + c*(geometry.J.T @ geometry.J)
    f = geometry.W @ (tau/r) + params.gravity_wrench \
        - c*(geometry.J.T @ curvature)
    try:
        accel = np.linalg.solve(M, f)
    except np.linalg.LinAlgError:
        raise errors.ConditioningError("augmented inertia")

    omega_dot = -(geometry.J @ accel + curvature)/r
    tensions = (tau - params.winch_inertia*omega_dot)/r
    violation = bool(
        np.any(tensions < params.tension_min - 1e-9)
        or np.any(tensions > params.tension_max + 1e-9)
    )
    return DynamicsResult(accel, tensions, violation)


def state_derivative(params, state, torques, disturbance=None):
    """
    Returns :math:`\\dot x = [v, \\ddot x]`.
    """
    accel = forward_dynamics(params, state, torques, disturbance).accel
    return np.concatenate([state[3:], accel])


def rk4_step(params, state, torques, disturbance=None, dt=0.001, substeps=1):
    """
    Integrates the dynamics over *dt* with the classic Runge-Kutta method.
    The torques and the disturbance are held constant.

    :arg int substeps:
        The number of RK4 steps of length ``dt/substeps``.
    """
    h = dt/substeps
    x = np.asarray(state, dtype=float)
    for _ in range(substeps):
        k1 = state_derivative(params, x, torques, disturbance)
        k2 = state_derivative(params, x + 0.5*h*k1, torques, disturbance)
        k3 = state_derivative(params, x + 0.5*h*k2, torques, disturbance)
        k4 = state_derivative(params, x + h*k3, torques, disturbance)
        x = x + (h/6.0)*(k1 + 2.0*k2 + 2.0*k3 + k4)
    return x


def total_energy(params, state):
    """
    Returns the kinetic energy of the end effector and the winches plus the
    potential energy of gravity (J).
    """
    geometry = cable_geometry(params, state[:3])
    velocity = state[3:]
    omega = winch_speeds(params, geometry, velocity)
    kinetic = 0.5*velocity @ params.G @ velocity \
        + 0.5*params.winch_inertia*np.sum(omega**2)
    potential = -params.gravity_wrench[2]*state[2]
    return kinetic + potential


def continuous_jacobian(params, state, torques, step=FD_STEP):
    """
    Returns the Jacobians :math:`(\\partial\\dot x/\\partial x,
    \\partial\\dot x/\\partial u)` of the continuous dynamics. The state
    Jacobian is a central difference. The acceleration is affine in the
    torques, so the control Jacobian :math:`M^{-1} W / r` is exact.
    """
    x = np.asarray(state, dtype=float)
    Fx = np.empty((STATE_DIM, STATE_DIM))
    for i in range(STATE_DIM):
        e = np.zeros(STATE_DIM)
        e[i] = step
        Fx[:, i] = (
            state_derivative(params, x + e, torques)
            - state_derivative(params, x - e, torques)
        )/(2.0*step)

    geometry = cable_geometry(params, x[:3])
    M = params.G + params.reflected_inertia*(geometry.J.T @ geometry.J)
    Fu = np.zeros((STATE_DIM, CONTROL_DIM))
    try:
        Fu[3:] = np.linalg.solve(M, geometry.W/params.winch_radius)
    except np.linalg.LinAlgError:
        raise errors.ConditioningError("augmented inertia")
    return Fx, Fu


def linearize_dynamics(
    params, state, torques, dt, method="euler", substeps=1, step=FD_STEP
    ):
    """
    Returns the discrete linearization :math:`x_{k+1} \\approx A x_k + B u_k
    + c` around *state* and *torques*.

    *euler*
        :math:`A = I + \\Delta t\\, \\partial\\dot x/\\partial x`,
        :math:`B = \\Delta t\\, \\partial\\dot x/\\partial u`; the model is
        exact for the Euler step at the nominal.
    *rk4*
        The step is integrated with *substeps* RK4 steps of length
        :math:`h`. Every substep contributes the RK4 map of the continuous
        linearization at its start point,

        .. math::

            \\Phi = \\sum_{j=0}^{4} \\frac{(hF_x)^j}{j!}, \\qquad
            \\Gamma = h \\sum_{j=0}^{3} \\frac{(hF_x)^j}{(j+1)!} F_u,

        which is the derivative of the RK4 substep at an equilibrium. The
        affine term makes the model exact for :func:`rk4_step` at the
        nominal.

    :arg float dt:
        The step (s), ``dt >= 0``.
    :arg str method:
        ``"euler"`` or ``"rk4"``.
    :arg int substeps:
        The number of RK4 substeps, only used by *rk4*.

    :returns: ``(A, B, c)``
    """
    if not dt >= 0:
        raise errors.InvalidParameter("dt", "must be >= 0.")
    if int(substeps) != substeps or substeps < 1:
        raise errors.InvalidParameter("substeps", "must be a positive integer.")
    x = np.asarray(state, dtype=float)
    u = np.asarray(torques, dtype=float)
    if x.shape != (STATE_DIM,) or u.shape != (CONTROL_DIM,):
        raise errors.DimensionMismatch(
            detail="Expected a 6d state and 4 torques."
        )

    I = np.eye(STATE_DIM)
    if method == "euler":
        Fx, Fu = continuous_jacobian(params, x, u, step)
        A = I + dt*Fx
        B = dt*Fu
        x_next = x + dt*state_derivative(params, x, u)
    elif method == "rk4":
        h = dt/substeps
        A = I
        B = np.zeros((STATE_DIM, CONTROL_DIM))
        x_next = x
        for _ in range(int(substeps)):
            Fx, Fu = continuous_jacobian(params, x_next, u, step)
            hF = h*Fx
            hF2 = hF @ hF
            T = I + hF/2.0 + hF2/6.0 + (hF2 @ hF)/24.0
            Phi = I + hF @ T
            A = Phi @ A
            B = Phi @ B + h*(T @ Fu)
            x_next = rk4_step(params, x_next, u, dt=h)
    else:
        raise errors.InvalidParameter("method", "must be 'euler' or 'rk4'.")

    c = x_next - A @ x - B @ u
    return A, B, c
