#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.base.errors
===================

This module implements the base class for all exceptions raised by the
library. Every exception carries the exit code the command line front end
returns when the exception reaches it:

=====  ========================================
code   meaning
=====  ========================================
0      success
1      I/O failure, malformed file
2      usage or validation error
3      the iLQR did not converge
4      numerical failure
=====  ========================================
"""


__all__ = [
    "Error",
    "error_to_exit_code",

    "FileError",
    "FormatError",
    "UsageError",
    "InvalidConfig",
    "InvalidParameter",
    "NotConverged",
    "NumericalError",

    "DimensionMismatch",
    "ConditioningError",
    "UnderdeterminedSystem",
    "DegenerateCable",
    "InfeasibleWrench",
    "SimulationDiverged"
]


class Error(Exception):
    """
    This is the base class for all exceptions thrown by *cdprlqg*. All
    subclasses of this exception are catched by the command line front end
    and converted into an exit code. All other exceptions are considered
    bugs.

    :arg int exit_code:
        The process exit code applicable to this problem.
    :arg str title:
        A short, human-readable summary of the problem. The default value is
        the class name.
    :arg str detail:
        A human-readable explanation specific to this occurrence of the
        problem.
    :arg str source:
        The config key, file path, line or byte offset, which caused the
        problem.
    :arg dict meta:
        Non-standard meta-information about the error.
    """

    def __init__(
        self,
        exit_code=4,
        title=None,
        detail="",
        source=None,
        meta=None
        ):
        """
        """
        self.exit_code = exit_code
        self.title = title if title is not None else type(self).__name__
        self.detail = detail
        self.source = source
        self.meta = meta if meta is not None else dict()
        super().__init__(detail)
        return None

    def __str__(self):
        """
        Returns the :attr:`detail` attribute per default.
        """
        return self.detail


def error_to_exit_code(error):
    """
    Returns the process exit code for *error*. Exceptions, which are not
    derived from :class:`Error`, are numerical failures.

    :arg Exception error:
    :rtype: int
    """
    if isinstance(error, Error):
        return error.exit_code
    return 4


# Common errors
# ~~~~~~~~~~~~~

class FileError(Error):

    def __init__(self, **kargs):
        super().__init__(exit_code=1, **kargs)
        return None


class UsageError(Error):

    def __init__(self, **kargs):
        super().__init__(exit_code=2, **kargs)
        return None


class NotConverged(Error):

    def __init__(self, **kargs):
        super().__init__(exit_code=3, **kargs)
        return None


class NumericalError(Error):

    def __init__(self, **kargs):
        super().__init__(exit_code=4, **kargs)
        return None


# Special errors
# ~~~~~~~~~~~~~~

class FormatError(FileError):
    """
    Raised, if a trajectory, gain schedule or simulation log file is
    malformed. The *source* names the file and the line (text formats) or
    the byte offset (binary formats).
    """

    def __init__(self, path, detail, line=None, offset=None, **kargs):
        self.path = path
        self.line = line
        self.offset = offset

        if line is not None:
            source = "{}:{}".format(path, line)
            detail = "{} (line {})".format(detail, line)
        elif offset is not None:
            source = "{}@{}".format(path, offset)
            detail = "{} (byte offset {})".format(detail, offset)
        else:
            source = str(path)
        super().__init__(detail=detail, source=source, **kargs)
        return None


class InvalidConfig(UsageError):
    """
    Raised, if a configuration value is missing, unknown or violates an
    invariant. The *key* is the dotted configuration key, e.g.
    ``robot.tension_min``.
    """

    def __init__(self, key, detail, **kargs):
        self.key = key

        detail = "{}: {}".format(key, detail)
        super().__init__(detail=detail, source=key, **kargs)
        return None


class InvalidParameter(UsageError):
    """
    Raised, if an argument of a library function violates its precondition.
    """

    def __init__(self, name, detail, **kargs):
        self.name = name

        detail = "'{}' {}".format(name, detail)
        super().__init__(detail=detail, source=name, **kargs)
        return None


class DimensionMismatch(NumericalError):
    """
    Raised, if the shapes of matrices or the lengths of per-timestep lists
    are inconsistent.
    """


class ConditioningError(NumericalError):
    """
    Raised, if a matrix, which must be positive definite by construction,
    can not be factorized.

    :arg str what:
        The name of the matrix, e.g. ``R`` or ``innovation covariance``.
    :arg int step:
        The timestep index at which the factorization failed.
    """

    def __init__(self, what, step=None, **kargs):
        self.what = what
        self.step = step

        if step is None:
            detail = "The matrix '{}' is not positive definite.".format(what)
        else:
            detail = "The matrix '{}' is not positive definite at timestep {}."\
                .format(what, step)
        super().__init__(detail=detail, **kargs)
        return None


class UnderdeterminedSystem(NumericalError):
    """
    Raised, if a linear chain graph has no unique minimizer.
    """

    def __init__(self, rank, size, **kargs):
        self.rank = rank
        self.size = size

        detail = "The reduced system has rank {} < {}.".format(rank, size)
        super().__init__(detail=detail, **kargs)
        return None


class DegenerateCable(NumericalError):
    """
    Raised, if an end effector mounting point coincides with its frame
    anchor.
    """

    def __init__(self, cable, length, **kargs):
        self.cable = cable
        self.length = length

        detail = "Cable {} is degenerate (length {:.3e} m).".format(cable, length)
        super().__init__(detail=detail, **kargs)
        return None


class InfeasibleWrench(NumericalError):
    """
    Raised, if no tension vector within the limits realizes a wrench. The
    feasible interval ``[lambda_lo, lambda_hi]`` along the null space is
    empty.
    """

    def __init__(self, lambda_lo, lambda_hi, **kargs):
        self.lambda_lo = lambda_lo
        self.lambda_hi = lambda_hi

        detail = "The wrench is infeasible (lambda in [{:.6g}, {:.6g}])."\
            .format(lambda_lo, lambda_hi)
        super().__init__(detail=detail, **kargs)
        return None


class SimulationDiverged(NumericalError):
    """
    Raised, if the simulated state or the commanded torques become
    non-finite, or if the model breaks down. The partial log is available as
    :attr:`log`. It includes the failing tick, unless the model broke down
    within it.
    """

    def __init__(self, tick, log=None, **kargs):
        self.tick = tick
        self.log = log

        detail = "The simulation diverged at tick {}.".format(tick)
        super().__init__(detail=detail, **kargs)
        return None
