#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.base
============

This is the *base* of the *cdprlqg* library. It contains the exception
hierarchy, the parameter validators and the linear algebra helpers, which
are used by all other subpackages.

.. automodule:: cdprlqg.base.errors
.. automodule:: cdprlqg.base.utilities
.. automodule:: cdprlqg.base.validators
"""

# local
from . import errors
from . import utilities
from . import validators
