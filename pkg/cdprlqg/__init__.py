#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

# local
from . import base
from . import graph
from . import model
from . import trajectory
from . import controller
from . import synthesis
from . import simulator
from . import cli
from . import version
