#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.graph.elimination
=========================

Variable elimination on the chain: eliminating :math:`x_{k+1}` through its
dynamics constraint and then :math:`u_k` from the back of the chain leaves a
conditional :math:`u_k = -K_k x_k - k_k` and a new quadratic factor
on :math:`x_k`, the cost-to-go. This is the backward induction of the
Bellman equation, i.e. the discrete Riccati recursion.

The cost convention is

.. math::

    \\sum_{k=0}^{N-1} \\left( \\tfrac{1}{2} x_k^T Q_k x_k + q_k^T x_k
        + \\tfrac{1}{2} u_k^T R_k u_k + r_k^T u_k \\right)
        + \\tfrac{1}{2} x_N^T Q_f x_N + q_f^T x_N

subject to :math:`x_{k+1} = A_k x_k + B_k u_k + c_k`.
"""

# third party
import numpy as np
import scipy.linalg

# local
from ..base import errors
from ..base.utilities import (
    as_matrix, as_vector, assert_symmetric_psd, cholesky_solve, symmetrize
)
from .factor import ConditionalGain


__all__ = [
    "eliminate_lqr",
    "solve_linear_chain"
]


def _check_lengths(horizon, **lists):
    for name, value in lists.items():
        if len(value) != horizon:
            raise errors.DimensionMismatch(
                detail="'{}' has {} entries, expected {}."\
                    .format(name, len(value), horizon)
            )
    return None


def eliminate_lqr(A, B, Q, q, R, r, Qf, qf, c=None, check=True):
    """
    Eliminates the linear quadratic chain from the back and returns the
    gains :math:`K_k, k_k` for :math:`k = 0 .. N-1`, such that
    :math:`u_k = -K_k x_k - k_k` is optimal.

    :arg list A: state matrices, :math:`n \\times n`
    :arg list B: control matrices, :math:`n \\times m`
    :arg list Q: PSD state weights
    :arg list q: linear state weights
    :arg list R: PD control weights
    :arg list r: linear control weights
    :arg Qf: PSD terminal weight
    :arg qf: linear terminal weight
    :arg list c:
        Optional affine dynamics terms (default zero).
    :arg bool check:
        If true, each cost-to-go Hessian is checked to be symmetric PSD.

    :rtype: list of :class:`~cdprlqg.graph.factor.ConditionalGain`

    :raises cdprlqg.base.errors.DimensionMismatch:
    :raises cdprlqg.base.errors.ConditioningError:
        If :math:`R_k` is not positive definite (reported with ``k``).
    """
    N = len(A)
    _check_lengths(N, B=B, Q=Q, q=q, R=R, r=r)
    if c is not None:
        _check_lengths(N, c=c)
    if N == 0:
        return list()

    n = np.shape(A[0])[0]
    m = np.shape(B[0])[1]

    V = symmetrize(as_matrix(Qf, "Qf", (n, n)))
    v = as_vector(qf, "qf", n)

    gains = [None]*N
    for k in range(N - 1, -1, -1):
        Ak = as_matrix(A[k], "A[{}]".format(k), (n, n))
        Bk = as_matrix(B[k], "B[{}]".format(k), (n, m))
        Qk = as_matrix(Q[k], "Q[{}]".format(k), (n, n))
        Rk = as_matrix(R[k], "R[{}]".format(k), (m, m))
        qk = as_vector(q[k], "q[{}]".format(k), n)
        rk = as_vector(r[k], "r[{}]".format(k), m)

        # Eliminate x_{k+1} = A x + B u + c.
        if c is not None:
            v = v + V @ as_vector(c[k], "c[{}]".format(k), n)
        VA = V @ Ak
        VB = V @ Bk
        Qxx = Qk + Ak.T @ VA
        Qux = Bk.T @ VA
        Quu = symmetrize(Rk + Bk.T @ VB)
        qx = qk + Ak.T @ v
        qu = rk + Bk.T @ v

        # Eliminate u_k.
        try:
            scipy.linalg.cho_factor(Rk, lower=True)
        except (np.linalg.LinAlgError, ValueError):
            raise errors.ConditioningError("R", step=k)
        sol = cholesky_solve(Quu, np.column_stack([Qux, qu]), "R + B^T V B", k)
        K = sol[:, :n]
        k_ff = sol[:, n]

        V = symmetrize(Qxx - Qux.T @ K)
        v = qx - Qux.T @ k_ff
        if check:
            assert_symmetric_psd(V, "V[{}]".format(k))
        gains[k] = ConditionalGain(K, k_ff, V, v)
    return gains


def solve_linear_chain(graph, tol=1e-10):
    """
    Returns the minimizer of the summed quadratic factors of *graph*
    subject to its hard constraints.

    The constraints are eliminated exactly: with a particular solution
    :math:`z_p` and an orthonormal null space basis :math:`Z` of the stacked
    constraint matrix, the remaining unconstrained problem in
    :math:`z = z_p + Z y` is solved with a Cholesky factorization.

    :arg cdprlqg.graph.factor.ChainGraph graph:
    :arg float tol:
        Relative tolerance for the rank and consistency checks.

    :returns: ``(states, controls)``, lists of vectors.

    :raises cdprlqg.base.errors.UnderdeterminedSystem:
    :raises cdprlqg.base.errors.NumericalError:
        If the constraints are inconsistent.
    """
    offsets = graph.offsets()
    size = sum(s.stop - s.start for s in offsets.values())

    H = np.zeros((size, size))
    g = np.zeros(size)
    C_rows = list()
    d_rows = list()

    for factor in graph.factors:
        M = np.zeros((factor.rows, size))
        for key, block in zip(factor.keys, factor.matrices):
            M[:, offsets[key]] += block

        if factor.is_constraint:
            C_rows.append(M)
            d_rows.append(factor.rhs)
        else:
            MW = M.T @ factor.weight
            H += MW @ M
            g += MW @ factor.rhs
    H = symmetrize(H)

    if C_rows:
        C = np.vstack(C_rows)
        d = np.concatenate(d_rows)
        z_p = np.linalg.lstsq(C, d, rcond=None)[0]
        residual = np.linalg.norm(C @ z_p - d)
        if residual > tol*max(1.0, np.linalg.norm(d)):
            raise errors.NumericalError(
                detail="The hard constraints are inconsistent (residual {:.3e})."\
                    .format(residual)
            )
        Z = scipy.linalg.null_space(C)
    else:
        z_p = np.zeros(size)
        Z = np.eye(size)

    if Z.shape[1] > 0:
        Hr = symmetrize(Z.T @ H @ Z)
        eig = np.linalg.eigvalsh(Hr)
        scale = max(1.0, float(np.max(np.abs(eig))))
        rank = int(np.sum(eig > tol*scale))
        if rank < Hr.shape[0]:
            raise errors.UnderdeterminedSystem(rank, Hr.shape[0])
        y = cholesky_solve(Hr, Z.T @ (g - H @ z_p), "reduced Hessian")
        z = z_p + Z @ y
    else:
        z = z_p

    states = [z[offsets[("x", k)]] for k in range(graph.horizon + 1)]
    controls = [z[offsets[("u", k)]] for k in range(graph.horizon)]
    return states, controls
