#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.graph.factor
====================

The types of the chain structured Gaussian factor graph: variables are the
states :math:`x_0, \\ldots, x_N` and the controls :math:`u_0, \\ldots,
u_{N-1}`, factors are quadratic costs, hard (equality) constraints or
stochastic (Gaussian noise) terms attached to at most two adjacent
timesteps.

A variable is addressed by a *handle*, a two tuple ``("x", k)`` or
``("u", k)``.

.. code-block:: python3

    # the dynamics constraint x_1 = A x_0 + B u_0
    QuadraticFactor(
        [("x", 0), ("u", 0), ("x", 1)], [A, B, -np.eye(n)], np.zeros(n),
        kind="constraint"
    )
"""

# std
from collections import OrderedDict

# third party
import numpy as np

# local
from ..base import errors
from ..base.utilities import as_matrix, as_vector, cholesky_inverse


__all__ = [
    "QuadraticFactor",
    "ChainGraph",
    "ConditionalGain",
    "MarginalGain"
]


#: The factor kinds.
KINDS = ("cost", "constraint", "stochastic")


class QuadraticFactor(object):
    """
    The factor :math:`\\| \\sum_i M_i z_i - b \\|^2_W` on the variables
    :math:`z_i`.

    :arg list keys:
        One to three variable handles, e.g. ``[("x", 3), ("u", 3)]``.
    :arg list matrices:
        The coefficient block :math:`M_i` of each variable.
    :arg rhs:
        The right hand side :math:`b`.
    :arg str kind:
        *cost* (weight :math:`W`, default identity), *constraint* (the
        equation :math:`\\sum_i M_i z_i = b` holds exactly) or *stochastic*
        (:math:`W = \\Sigma^{-1}`).
    :arg weight:
        The symmetric PSD weight of a *cost* factor.
    :arg covariance:
        The symmetric PD covariance of a *stochastic* factor.
    """

    def __init__(
        self, keys, matrices, rhs, kind="cost", weight=None, covariance=None
        ):
        """
        """
        if kind not in KINDS:
            raise errors.InvalidParameter(
                "kind", "must be one of {}.".format(", ".join(KINDS))
            )
        if not 1 <= len(keys) <= 3 or len(keys) != len(matrices):
            raise errors.DimensionMismatch(
                detail="A factor needs 1 to 3 variables and one block per variable."
            )

        self.keys = [(str(name), int(k)) for name, k in keys]
        self.kind = kind
        self.rhs = as_vector(rhs, "rhs")

        rows = self.rhs.shape[0]
        self.matrices = [
            as_matrix(m, "matrices[{}]".format(i), (rows, None))
            for i, m in enumerate(matrices)
        ]

        steps = {k for _, k in self.keys}
        if max(steps) - min(steps) > 1:
            raise errors.InvalidParameter(
                "keys", "must span at most two adjacent timesteps."
            )

        if kind == "cost":
            self.weight = np.eye(rows) if weight is None \
                else as_matrix(weight, "weight", (rows, rows))
        elif kind == "stochastic":
            if covariance is None:
                raise errors.InvalidParameter(
                    "covariance", "is required for stochastic factors."
                )
            self.covariance = as_matrix(covariance, "covariance", (rows, rows))
            self.weight = cholesky_inverse(self.covariance, "covariance")
        else:
            self.weight = None
            stacked = np.hstack(self.matrices)
            if np.linalg.matrix_rank(stacked) < rows:
                raise errors.InvalidParameter(
                    "matrices", "of a constraint must have full row rank."
                )
        return None

    @property
    def rows(self):
        return self.rhs.shape[0]

    @property
    def is_constraint(self):
        return self.kind == "constraint"

    def error(self, values):
        """
        Returns the residual :math:`\\sum_i M_i z_i - b`.

        :arg dict values:
            Maps the handles to the variable values.
        """
        e = -self.rhs
        for key, m in zip(self.keys, self.matrices):
            e = e + m @ values[key]
        return e

    def __repr__(self):
        return "QuadraticFactor({}, kind={})".format(self.keys, self.kind)


class ChainGraph(object):
    """
    A factor graph with the chain structure of a finite horizon optimal
    control or filtering problem.

    Every timestep ``0 .. N-1`` has exactly one dynamics constraint linking
    :math:`(x_k, u_k, x_{k+1})`; timestep :math:`N` has no control.

    :arg int horizon:
        The number of timesteps :math:`N`.
    :arg int state_dim:
    :arg int control_dim:
    :arg list factors:
        A list of :class:`QuadraticFactor`.
    """

    def __init__(self, horizon, state_dim, control_dim, factors):
        """
        """
        if horizon < 0 or state_dim < 1 or control_dim < 1:
            raise errors.InvalidParameter(
                "horizon", "and the dimensions must be non negative / positive."
            )
        self.horizon = int(horizon)
        self.state_dim = int(state_dim)
        self.control_dim = int(control_dim)
        self.factors = list(factors)

        self._check_factors()
        return None

    def variable_dim(self, key):
        """
        Returns the dimension of the variable *key*.
        """
        return self.state_dim if key[0] == "x" else self.control_dim

    def variables(self):
        """
        Returns the variable handles in elimination order
        :math:`x_0, u_0, x_1, u_1, \\ldots, x_N`.
        """
        keys = list()
        for k in range(self.horizon):
            keys.append(("x", k))
            keys.append(("u", k))
        keys.append(("x", self.horizon))
        return keys

    def offsets(self):
        """
        Returns an ordered dictionary, which maps each handle to the slice of
        its entries in the stacked variable vector.
        """
        d = OrderedDict()
        start = 0
        for key in self.variables():
            size = self.variable_dim(key)
            d[key] = slice(start, start + size)
            start += size
        return d

    def _check_factors(self):
        """
        Checks the handles, block shapes and the chain invariant.
        """
        valid = set(self.variables())
        dynamics = [0]*self.horizon

        for factor in self.factors:
            for key, m in zip(factor.keys, factor.matrices):
                if key not in valid:
                    raise errors.InvalidParameter(
                        "factors", "refer to the unknown variable {}.".format(key)
                    )
                if m.shape[1] != self.variable_dim(key):
                    raise errors.DimensionMismatch(
                        detail="The block of {} has {} columns, expected {}."\
                            .format(key, m.shape[1], self.variable_dim(key))
                    )

            if factor.is_constraint:
                keys = set(factor.keys)
                k = min(step for _, step in factor.keys)
                if keys == {("x", k), ("u", k), ("x", k + 1)}:
                    dynamics[k] += 1

        for k, count in enumerate(dynamics):
            if count != 1:
                raise errors.InvalidParameter(
                    "factors",
                    "must contain exactly one dynamics constraint at timestep "\
                    "{} (found {}).".format(k, count)
                )
        return None

    @classmethod
    def lqr_tracking(cls, A, B, Q, x_ref, R, u_ref, Qf, xf_ref, x0, c=None):
        """
        Builds the factor graph of the finite horizon tracking problem

        .. math::

            \\min \\sum_k \\|x_k - x^{ref}_k\\|^2_Q + \\|u_k - u^{ref}_k\\|^2_R
                + \\|x_N - x^{ref}_N\\|^2_{Q_f}

        subject to :math:`x_{k+1} = A_k x_k + B_k u_k + c_k` and the initial
        condition :math:`x_0`.
        """
        N = len(A)
        n = np.shape(A[0])[0]
        m = np.shape(B[0])[1]
        c = c if c is not None else [np.zeros(n)]*N

        factors = [
            QuadraticFactor([("x", 0)], [np.eye(n)], x0, kind="constraint")
        ]
        for k in range(N):
            factors.append(QuadraticFactor(
                [("x", k), ("u", k), ("x", k + 1)], [A[k], B[k], -np.eye(n)],
                -np.asarray(c[k], dtype=float), kind="constraint"
            ))
            factors.append(QuadraticFactor(
                [("x", k)], [np.eye(n)], x_ref[k], weight=Q[k]
            ))
            factors.append(QuadraticFactor(
                [("u", k)], [np.eye(m)], u_ref[k], weight=R[k]
            ))
        factors.append(QuadraticFactor(
            [("x", N)], [np.eye(n)], xf_ref, weight=Qf
        ))
        return cls(N, n, m, factors)

    @classmethod
    def state_estimation(cls, A, H, z, Sigma_w, Sigma_v, x0_mean, Sigma_0):
        """
        Builds the factor graph of the linear Gaussian estimation problem

        .. math::

            x_0 \\sim N(\\bar x_0, \\Sigma_0), \\quad
            x_{k+1} = A_k x_k + w_k, \\quad
            z_k = H_k x_{k+1} + v_k

        with :math:`w_k \\sim N(0, \\Sigma_{w,k})` and :math:`v_k \\sim N(0,
        \\Sigma_{v,k})`. The process noise :math:`w_k` takes the place of the
        control :math:`u_k`, so that the chain has the same shape as a
        control problem. Entry ``k`` of *H*, *z* and *Sigma_v* measures the
        state :math:`x_{k+1}`, as in
        :func:`~cdprlqg.graph.marginal.marginalize_kf`.

        The minimizer of the graph is the smoothed estimate, its last state
        is the filtered estimate.
        """
        N = len(A)
        n = np.shape(A[0])[0]
        I = np.eye(n)

        factors = [
            QuadraticFactor(
                [("x", 0)], [I], x0_mean, kind="stochastic", covariance=Sigma_0
            )
        ]
        for k in range(N):
            factors.append(QuadraticFactor(
                [("x", k), ("u", k), ("x", k + 1)], [A[k], I, -I],
                np.zeros(n), kind="constraint"
            ))
            factors.append(QuadraticFactor(
                [("u", k)], [I], np.zeros(n), kind="stochastic",
                covariance=Sigma_w[k]
            ))
            factors.append(QuadraticFactor(
                [("x", k + 1)], [H[k]], z[k], kind="stochastic",
                covariance=Sigma_v[k]
            ))
        return cls(N, n, n, factors)


class ConditionalGain(object):
    """
    The result of eliminating :math:`u_k` and :math:`x_{k+1}`: the
    conditional :math:`u_k = -K x_k - k_{ff}` and the cost-to-go
    :math:`\\frac{1}{2} x^T V x + v^T x` at timestep :math:`k`.
    """

    def __init__(self, K, k_ff, V, v):
        self.K = K
        self.k_ff = k_ff
        self.V = V
        self.v = v
        return None

    def control(self, x):
        """
        Returns :math:`-K x - k_{ff}`.
        """
        return -self.K @ x - self.k_ff


class MarginalGain(object):
    """
    The result of marginalizing the past at timestep :math:`k`: the Kalman
    gain and the prior and posterior covariances.
    """

    def __init__(self, L, Sigma_prior, Sigma_post):
        self.L = L
        self.Sigma_prior = Sigma_prior
        self.Sigma_post = Sigma_post
        return None
