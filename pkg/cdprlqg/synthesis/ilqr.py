#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.synthesis.ilqr
======================

The nominal trajectory of the schedule is computed with the iterative linear
quadratic regulator. Every iteration

1.  linearizes the discrete plant along the current nominal,
2.  eliminates the linear quadratic tracking problem in deviation
    coordinates (:func:`~cdprlqg.graph.elimination.eliminate_lqr`),
3.  rolls the nonlinear plant out with the new feedback policy and
    shrinks the feedforward step until the cost decreases.

The first iteration is linearized along the reference and the initial
control guess. The gaps :math:`f(\\bar x_k, \\bar u_k) - \\bar x_{k+1}` enter
the elimination as affine terms, so that the first rollout is already a
closed loop rollout. Costs are compared from the first rollout on, the cost
history is nonincreasing.

The tracking cost is

.. math::

    \\sum_{k=0}^{N-1} \\tfrac{1}{2} \\|x_k - x^{ref}_k\\|^2_Q
        + \\tfrac{1}{2} \\|u_k - u^{ref}_k\\|^2_R
        + \\tfrac{1}{2} \\|x_N - x^{ref}_N\\|^2_{Q_f}
"""

# std
import logging

# third party
from cached_property import cached_property
import numpy as np

# local
from ..base import errors
from ..graph import eliminate_lqr
from ..model.dynamics import forward_dynamics, friction_torque
from ..model.kinematics import cable_geometry
from ..trajectory.trajectory import Trajectory
from ..controller.tension import saturated_tension_distribution
from .plant import CdprPlant


__all__ = [
    "IlqrOptions",
    "IlqrResult",
    "tracking_cost",
    "ilqr_solve",
    "gravity_compensation",
    "feedforward_guess",
    "ilqr_nominal"
]


LOG = logging.getLogger(__file__)


class IlqrOptions(object):
    """
    :arg int max_iters:
        The maximum number of iterations.
    :arg float cost_tol:
        The iteration stops, if the relative cost change drops below this
        value. Costs below 1 are compared absolutely.
    :arg float line_search_shrink:
        The feedforward step is multiplied with this factor after a failed
        rollout.
    :arg int max_shrinks:
        The line search fails after this many shrinks.
    :arg str discretization:
        The discretization of the plant, ``"rk4"`` or ``"euler"``.
    :arg int substeps:
        The RK4 steps per offline period of the *rk4* plant.
    """

    def __init__(
        self,
        max_iters=100,
        cost_tol=1e-8,
        line_search_shrink=0.5,
        max_shrinks=20,
        discretization="rk4",
        substeps=5
        ):
        """
        """
        if int(max_iters) != max_iters or max_iters < 1:
            raise errors.InvalidConfig("ilqr.max_iters", "must be a positive integer.")
        if not cost_tol > 0:
            raise errors.InvalidConfig("ilqr.cost_tol", "must be > 0.")
        if not 0 < line_search_shrink < 1:
            raise errors.InvalidConfig("ilqr.line_search_shrink", "must be in (0, 1).")
        if int(max_shrinks) != max_shrinks or max_shrinks < 0:
            raise errors.InvalidConfig("ilqr.max_shrinks", "must be a non negative integer.")
        if discretization not in ("rk4", "euler"):
            raise errors.InvalidConfig("ilqr.discretization", "must be 'rk4' or 'euler'.")
        if int(substeps) != substeps or substeps < 1:
            raise errors.InvalidConfig("ilqr.substeps", "must be a positive integer.")

        self.max_iters = int(max_iters)
        self.cost_tol = float(cost_tol)
        self.line_search_shrink = float(line_search_shrink)
        self.max_shrinks = int(max_shrinks)
        self.discretization = discretization
        self.substeps = int(substeps)
        return None


class IlqrResult(object):
    """
    The nominal trajectory and the convergence report.

    :ivar states: (N+1)x6
    :ivar controls: Nx4
    :ivar x_ref: (N+1)x6, the tracked reference
    :ivar u_ref: Nx4, the control regularization center
    :ivar float dt:
    :ivar list cost_history:
        The cost of every accepted rollout.
    :ivar int iterations:
        The number of backward passes.
    :ivar bool converged:
    :ivar int tension_violations:
        The number of steps, at which the nominal violates a tension limit.
    """

    def __init__(
        self, states, controls, x_ref, u_ref, dt, cost_history, iterations,
        converged, tension_violations=0
        ):
        self.states = states
        self.controls = controls
        self.x_ref = x_ref
        self.u_ref = u_ref
        self.dt = dt
        self.cost_history = cost_history
        self.iterations = iterations
        self.converged = converged
        self.tension_violations = tension_violations
        return None

    @property
    def horizon(self):
        return self.controls.shape[0]

    @property
    def final_cost(self):
        return self.cost_history[-1]

    @cached_property
    def trajectory(self):
        """
        The nominal as :class:`~cdprlqg.trajectory.trajectory.Trajectory`
        with controls. The accelerations are the velocity differences, the
        last control is held.
        """
        states = self.states
        accelerations = np.zeros((states.shape[0], 3))
        accelerations[:-1] = (states[1:, 3:] - states[:-1, 3:])/self.dt
        controls = np.vstack([self.controls, self.controls[-1:]])
        return Trajectory.from_states(self.dt, states, accelerations, controls)


def tracking_cost(states, controls, x_ref, u_ref, Q, R, Qf):
    """
    Returns the tracking cost of the rollout.
    """
    dx = states[:-1] - x_ref[:-1]
    du = controls - u_ref
    dxf = states[-1] - x_ref[-1]
    return 0.5*float(
        np.einsum("ki,ij,kj->", dx, Q, dx)
        + np.einsum("ki,ij,kj->", du, R, du)
        + dxf @ Qf @ dxf
    )


def _rollout(plant, x0, states, controls, gains, alpha):
    """
    Rolls the plant out with :math:`u_k = \\bar u_k - \\alpha k_k - K_k (x_k
    - \\bar x_k)`. Returns ``None`` if the rollout fails.
    """
    N = controls.shape[0]
    x_new = np.empty_like(states)
    u_new = np.empty_like(controls)
    x_new[0] = x0
    try:
        for k in range(N):
            gain = gains[k]
            u = controls[k] - alpha*gain.k_ff - gain.K @ (x_new[k] - states[k])
            u_new[k] = u
            x_new[k + 1] = plant.step(x_new[k], u)
            if not np.all(np.isfinite(x_new[k + 1])):
                return None
    except errors.NumericalError as err:
        LOG.debug("Rollout failed at step %d: %s", k, err)
        return None
    return x_new, u_new


def ilqr_solve(plant, x_ref, u_ref, u_init, Q, R, Qf, opts=None):
    """
    Optimizes the tracking cost on *plant*, starting at ``x_ref[0]``.

    :arg cdprlqg.synthesis.plant.Plant plant:
    :arg x_ref: (N+1)xn
    :arg u_ref: Nxm
    :arg u_init: Nxm, the initial control guess
    :arg Q:
    :arg R:
    :arg Qf:
    :arg IlqrOptions opts:

    :rtype: IlqrResult

    :raises cdprlqg.base.errors.NotConverged:
        If not even the first rollout is finite.
    """
    opts = opts if opts is not None else IlqrOptions()
    x_ref = np.asarray(x_ref, dtype=float)
    u_ref = np.asarray(u_ref, dtype=float)
    N = u_ref.shape[0]
    if N == 0:
        raise errors.InvalidParameter("u_ref", "must not be empty.")
    if x_ref.shape[0] != N + 1 or np.shape(u_init) != u_ref.shape:
        raise errors.DimensionMismatch(
            detail="The reference must have one more state than controls."
        )

    states = x_ref.copy()
    controls = np.array(u_init, dtype=float)
    x0 = x_ref[0]
    cost = None
    cost_history = list()
    converged = False
    iterations = 0

    while iterations < opts.max_iters:
        A, B, c = zip(*[plant.linearize(states[k], controls[k]) for k in range(N)])
        gaps = [
            A[k] @ states[k] + B[k] @ controls[k] + c[k] - states[k + 1]
            for k in range(N)
        ]
        q = list((states[:-1] - x_ref[:-1]) @ Q)
        r = list((controls - u_ref) @ R)
        qf = Qf @ (states[-1] - x_ref[-1])
        gains = eliminate_lqr(
            A, B, [Q]*N, q, [R]*N, r, Qf, qf, c=gaps, check=False
        )
        iterations += 1

        alpha = 1.0
        first_trial = None
        accepted = None
        for _ in range(opts.max_shrinks + 1):
            rollout = _rollout(plant, x0, states, controls, gains, alpha)
            if rollout is not None:
                trial = tracking_cost(*rollout, x_ref, u_ref, Q, R, Qf)
                if first_trial is None:
                    first_trial = trial
                if cost is None or trial <= cost:
                    accepted = rollout + (trial,)
                    break
            alpha *= opts.line_search_shrink

        if accepted is None:
            if cost is None:
                raise errors.NotConverged(
                    detail="The first rollout diverged for every step size."
                )
            if first_trial is not None \
                and abs(first_trial - cost) <= opts.cost_tol*max(abs(cost), 1.0):
                converged = True
            else:
                LOG.warning(
                    "iLQR line search failed in iteration %d (cost %.6g).",
                    iterations, cost
                )
            break

        states, controls, new_cost = accepted
        LOG.debug(
            "iLQR iteration %d: cost %.9g, step %.3g", iterations, new_cost, alpha
        )
        cost_history.append(new_cost)
        previous, cost = cost, new_cost
        if previous is not None \
            and abs(previous - cost) <= opts.cost_tol*max(abs(previous), 1.0):
            converged = True
            break

    if converged:
        LOG.info(
            "iLQR converged after %d iterations, cost %.9g.", iterations, cost
        )
    else:
        LOG.warning(
            "iLQR did not converge within %d iterations, cost %.9g.",
            iterations, cost
        )
    return IlqrResult(
        states, controls, x_ref, u_ref, getattr(plant, "dt", None),
        cost_history, iterations, converged
    )


def gravity_compensation(params, pose):
    """
    Returns the motor torques, which hold the robot at rest at *pose*:
    :math:`r \\cdot TD(W, -w_g)`.
    """
    geometry = cable_geometry(params, pose)
    tensions, _ = saturated_tension_distribution(
        geometry.W, -params.gravity_wrench, params.tension_min,
        params.tension_max
    )
    return params.winch_radius*tensions


def feedforward_guess(params, reference):
    """
    Returns the inverse dynamics controls of *reference*: the tension
    distribution of :math:`G \\ddot x^{ref} - w_g` and the friction
    feedforward of the desired winch speeds.
    """
    N = len(reference) - 1
    r = params.winch_radius
    guess = np.empty((N, 4))
    for k in range(N):
        geometry = cable_geometry(params, reference.poses[k])
        wrench = params.G @ reference.accelerations[k] - params.gravity_wrench
        tensions, _ = saturated_tension_distribution(
            geometry.W, wrench, params.tension_min, params.tension_max
        )
        omega = -geometry.length_rates(reference.velocities[k])/r
        guess[k] = r*tensions + friction_torque(params, omega)
    return guess


def ilqr_nominal(params, reference, weights, opts=None):
    """
    Computes the nominal trajectory, which tracks *reference* on the robot.
    The controls are regularized towards the static gravity compensation
    at the reference poses.

    :arg cdprlqg.model.params.RobotParams params:
    :arg cdprlqg.trajectory.trajectory.Trajectory reference:
        Sampled with the offline period.
    :arg cdprlqg.synthesis.weights.LqgWeights weights:
    :arg IlqrOptions opts:

    :rtype: IlqrResult
    """
    opts = opts if opts is not None else IlqrOptions()
    if len(reference) < 2:
        raise errors.InvalidParameter("reference", "must have a positive duration.")

    N = len(reference) - 1
    plant = CdprPlant(
        params, reference.dt, opts.discretization, opts.substeps
    )
    x_ref = reference.states
    u_ref = np.array([
        gravity_compensation(params, reference.poses[k]) for k in range(N)
    ])
    u_init = feedforward_guess(params, reference)

    result = ilqr_solve(
        plant, x_ref, u_ref, u_init, weights.Q, weights.R, weights.Qf, opts
    )

    violations = sum(
        forward_dynamics(params, result.states[k], result.controls[k])\
            .tension_violation
        for k in range(N)
    )
    result.tension_violations = int(violations)
    if violations:
        LOG.warning(
            "The nominal violates the tension limits at %d of %d steps.",
            violations, N
        )
    return result
