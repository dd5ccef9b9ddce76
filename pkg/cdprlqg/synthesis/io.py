#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.synthesis.io
====================

The binary gain schedule format. All numbers are little endian:

=========== ============================================================
bytes       content
=========== ============================================================
8           magic ``CDPRGS1\\0``
4 x u32     version (1), N, state_dim (6), control_dim (4), meas_dim (8)
f64         offline period
N records   f64 row major: x* (6), u* (4), z* (8), K (4x6), L (6x8),
            P (6x6), c (6)
=========== ============================================================
"""

# std
import hashlib
import logging
import struct

# third party
import numpy as np

# local
from .. import version
from ..base import errors
from .schedule import GainSchedule


__all__ = [
    "HEADER",
    "RECORD_FIELDS",
    "RECORD_SIZE",
    "save_schedule",
    "load_schedule",
    "schedule_digest"
]


LOG = logging.getLogger(__file__)

HEADER = struct.Struct("<8s5Id")

#: The fields of a record and their shapes.
RECORD_FIELDS = [
    ("x_nom", (6,)),
    ("u_nom", (4,)),
    ("z_nom", (8,)),
    ("K", (4, 6)),
    ("L", (6, 8)),
    ("P", (6, 6)),
    ("c", (6,))
]

#: The number of f64 values per record.
RECORD_VALUES = sum(int(np.prod(shape)) for _, shape in RECORD_FIELDS)

#: The size of a record in bytes.
RECORD_SIZE = 8*RECORD_VALUES


def _records(schedule):
    N = schedule.horizon
    return np.hstack([
        getattr(schedule, name).reshape(N, -1) for name, _ in RECORD_FIELDS
    ])


def save_schedule(path, schedule):
    """
    Writes *schedule* to *path*.

    :raises cdprlqg.base.errors.FileError:
    """
    header = HEADER.pack(
        version.schedule_magic, version.schedule_format_version,
        schedule.horizon, 6, 4, 8, schedule.dt
    )
    body = np.ascontiguousarray(_records(schedule), dtype="<f8").tobytes()
    try:
        with open(path, "wb") as file:
            file.write(header)
            file.write(body)
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))
    LOG.debug("Wrote %d records to '%s'.", schedule.horizon, path)
    return None


def load_schedule(path):
    """
    Reads a gain schedule from *path*.

    :raises cdprlqg.base.errors.FileError:
        If the file can not be read.
    :raises cdprlqg.base.errors.FormatError:
        If the magic, the version or the dimensions do not match, if the
        file is truncated or if it contains non-finite values. The message
        names the byte offset.
    """
    try:
        with open(path, "rb") as file:
            data = file.read()
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))

    if len(data) < HEADER.size:
        if data[:8] != version.schedule_magic[:len(data)]:
            raise errors.FormatError(path, "Bad magic bytes.", offset=0)
        raise errors.FormatError(path, "Truncated header.", offset=len(data))
    magic, format_version, N, n, m, p, dt = HEADER.unpack_from(data)
    if magic != version.schedule_magic:
        raise errors.FormatError(path, "Bad magic bytes.", offset=0)
    if format_version != version.schedule_format_version:
        raise errors.FormatError(
            path, "Unsupported version {}.".format(format_version), offset=8
        )
    if (n, m, p) != (6, 4, 8):
        raise errors.FormatError(
            path, "Unexpected dimensions {}.".format((n, m, p)), offset=16
        )
    if not np.isfinite(dt) or not dt > 0:
        raise errors.FormatError(path, "Invalid period.", offset=28)
    if N == 0:
        raise errors.FormatError(path, "The schedule has no records.", offset=12)

    expected = HEADER.size + N*RECORD_SIZE
    if len(data) < expected:
        complete = (len(data) - HEADER.size)//RECORD_SIZE
        raise errors.FormatError(
            path, "Truncated in record {} of {}.".format(complete, N),
            offset=HEADER.size + complete*RECORD_SIZE
        )
    if len(data) > expected:
        raise errors.FormatError(path, "Trailing bytes.", offset=expected)

    table = np.frombuffer(data, dtype="<f8", offset=HEADER.size)\
        .astype(float).reshape(N, RECORD_VALUES)
    bad = np.flatnonzero(~np.isfinite(table))
    if bad.size:
        raise errors.FormatError(
            path, "Non-finite value.", offset=HEADER.size + 8*int(bad[0])
        )

    fields = dict()
    start = 0
    for name, shape in RECORD_FIELDS:
        size = int(np.prod(shape))
        fields[name] = table[:, start:start + size].reshape((N,) + shape)
        start += size
    LOG.debug("Read %d records from '%s'.", N, path)
    return GainSchedule(dt, **fields)


def schedule_digest(path):
    """
    Returns the SHA-256 hex digest of the schedule file at *path*.
    """
    try:
        with open(path, "rb") as file:
            return hashlib.sha256(file.read()).hexdigest()
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))
