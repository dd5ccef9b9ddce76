#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.graph.marginal
======================

Forward marginalization on the chain of stochastic factors

.. math::

    x_{k} = A_{k-1} x_{k-1} + w_{k-1}, \\quad w \\sim N(0, \\Sigma_w)

    z_k = H_k x_k + v_k, \\quad v \\sim N(0, \\Sigma_v)

Collapsing all variables before :math:`x_k` into a Gaussian prior on
:math:`x_k` at every step (the Markov assumption) yields the covariance form
Kalman recursion.
"""

# third party
import numpy as np
import scipy.linalg

# local
from ..base import errors
from ..base.utilities import as_matrix, assert_symmetric_psd, cholesky_solve, symmetrize
from .factor import MarginalGain


__all__ = [
    "marginalize_kf"
]


#: Added to the diagonal of the initial covariance, so that zero variance
#: entries stay representable.
SIGMA0_FLOOR = 1e-12


def marginalize_kf(A, H, Sigma_w, Sigma_v, Sigma_0, check=True):
    """
    Returns the Kalman gains of the steps :math:`k = 1 .. N` given the
    posterior covariance *Sigma_0* at step 0. Entry ``i`` of each list
    belongs to the transition into, and the measurement at, step ``i + 1``:

    .. math::

        \\Sigma^-_k &= A_{k-1} \\Sigma^+_{k-1} A_{k-1}^T + \\Sigma_{w,k-1} \\\\
        L_k &= \\Sigma^-_k H_k^T (H_k \\Sigma^-_k H_k^T + \\Sigma_{v,k})^{-1} \\\\
        \\Sigma^+_k &= (I - L_k H_k) \\Sigma^-_k (I - L_k H_k)^T + L_k \\Sigma_{v,k} L_k^T

    The posterior is kept in the Joseph form. The plain form :math:`(I - L_k
    H_k) \\Sigma^-_k` cancels catastrophically after a diffuse prior.

    :arg list A:
    :arg list H:
    :arg list Sigma_w: PSD process noise covariances
    :arg list Sigma_v: PD measurement noise covariances
    :arg Sigma_0: PSD initial covariance
    :arg bool check:
        If true, each covariance is checked to be symmetric PSD.

    :rtype: list of :class:`~cdprlqg.graph.factor.MarginalGain`

    :raises cdprlqg.base.errors.DimensionMismatch:
    :raises cdprlqg.base.errors.ConditioningError:
    """
    N = len(A)
    for name, value in (("H", H), ("Sigma_w", Sigma_w), ("Sigma_v", Sigma_v)):
        if len(value) != N:
            raise errors.DimensionMismatch(
                detail="'{}' has {} entries, expected {}."\
                    .format(name, len(value), N)
            )
    if N == 0:
        return list()

    n = np.shape(A[0])[0]
    Sigma = symmetrize(as_matrix(Sigma_0, "Sigma_0", (n, n))) \
        + SIGMA0_FLOOR*np.eye(n)
    I = np.eye(n)

    gains = list()
    for i in range(N):
        Ak = as_matrix(A[i], "A[{}]".format(i), (n, n))
        Hk = as_matrix(H[i], "H[{}]".format(i), (None, n))
        p = Hk.shape[0]
        Wk = as_matrix(Sigma_w[i], "Sigma_w[{}]".format(i), (n, n))
        Vk = as_matrix(Sigma_v[i], "Sigma_v[{}]".format(i), (p, p))

        try:
            scipy.linalg.cho_factor(Vk, lower=True)
        except (np.linalg.LinAlgError, ValueError):
            raise errors.ConditioningError("Sigma_v", step=i + 1)

        prior = symmetrize(Ak @ Sigma @ Ak.T + Wk)
        S = symmetrize(Hk @ prior @ Hk.T + Vk)
        L = cholesky_solve(S, Hk @ prior, "innovation covariance", i + 1).T
        E = I - L @ Hk
        post = symmetrize(E @ prior @ E.T + L @ Vk @ L.T)

        if check:
            assert_symmetric_psd(prior, "Sigma_prior[{}]".format(i + 1))
            assert_symmetric_psd(post, "Sigma_post[{}]".format(i + 1))
        gains.append(MarginalGain(L, prior, post))
        Sigma = post
    return gains
