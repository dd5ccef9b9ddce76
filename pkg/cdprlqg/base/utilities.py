#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.base.utilities
======================

This module contains some helpers for the linear algebra, which is
frequently needed in the different modules.
"""

# third party
import numpy as np
import scipy.linalg

# local
from . import errors


__all__ = [
    "symmetrize",
    "assert_symmetric_psd",
    "cholesky_solve",
    "cholesky_inverse",
    "as_matrix",
    "as_vector",
    "assert_finite",
    "cross2",
    "rotation"
]


def symmetrize(m):
    """
    Returns :math:`(M + M^T)/2`.

    :arg numpy.ndarray m:
    """
    return 0.5*(m + m.T)


def assert_symmetric_psd(m, name, tol=1e-9):
    """
    Asserts, that *m* is symmetric and positive semidefinite within the
    relative tolerance *tol*.

    :arg numpy.ndarray m:
    :arg str name:
        The name of the matrix, used in the error message.
    :arg float tol:

    :raises cdprlqg.base.errors.ConditioningError:
    """
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    if np.max(np.abs(m - m.T), initial=0.0) > tol*scale:
        raise errors.ConditioningError(name + " (asymmetric)")
    if m.size and np.min(np.linalg.eigvalsh(symmetrize(m))) < -tol*scale:
        raise errors.ConditioningError(name)
    return None


def cholesky_solve(m, b, name, step=None):
    """
    Solves :math:`M x = b` for a symmetric positive definite *m* with a
    Cholesky factorization.

    :arg numpy.ndarray m:
    :arg numpy.ndarray b:
        A vector or a matrix with multiple right hand sides.
    :arg str name:
        The name of *m*, used in the error message.
    :arg int step:
        The timestep index, used in the error message.

    :raises cdprlqg.base.errors.ConditioningError:
        If *m* is not positive definite.
    """
    try:
        factor = scipy.linalg.cho_factor(m, lower=True, check_finite=True)
    except (np.linalg.LinAlgError, ValueError):
        raise errors.ConditioningError(name, step=step)
    return scipy.linalg.cho_solve(factor, b, check_finite=False)


def cholesky_inverse(m, name, step=None):
    """
    Returns the inverse of the symmetric positive definite matrix *m*.

    :seealso: :func:`cholesky_solve`
    """
    return symmetrize(cholesky_solve(m, np.eye(m.shape[0]), name, step))


def as_matrix(m, name, shape=None):
    """
    Converts *m* into a 2d float array and checks its shape.

    :arg m:
    :arg str name:
    :arg tuple shape:
        The expected shape. ``None`` entries match every size.

    :raises cdprlqg.base.errors.DimensionMismatch:
    """
    m = np.atleast_2d(np.asarray(m, dtype=float))
    if m.ndim != 2:
        raise errors.DimensionMismatch(
            detail="'{}' must be a matrix.".format(name)
        )
    if shape is not None:
        for expected, actual in zip(shape, m.shape):
            if expected is not None and expected != actual:
                raise errors.DimensionMismatch(
                    detail="'{}' has shape {}, expected {}."\
                        .format(name, m.shape, shape)
                )
    return m


def as_vector(v, name, size=None):
    """
    Converts *v* into a 1d float array and checks its size.

    :raises cdprlqg.base.errors.DimensionMismatch:
    """
    v = np.atleast_1d(np.asarray(v, dtype=float))
    if v.ndim != 1 or (size is not None and v.shape[0] != size):
        raise errors.DimensionMismatch(
            detail="'{}' has shape {}, expected ({},)."\
                .format(name, v.shape, size)
        )
    return v


def assert_finite(a, name):
    """
    :raises cdprlqg.base.errors.NumericalError:
        If *a* contains a NaN or an infinite value.
    """
    if not np.all(np.isfinite(a)):
        raise errors.NumericalError(
            detail="'{}' contains non-finite values.".format(name)
        )
    return None


def cross2(a, b):
    """
    The planar cross product :math:`a_x b_y - a_y b_x`. Works on stacks of
    vectors along the last axis.
    """
    return a[..., 0]*b[..., 1] - a[..., 1]*b[..., 0]


def rotation(theta):
    """
    Returns the planar rotation matrix :math:`R(\\theta)`.
    """
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])
