#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.cli
===========

The command line front end: configuration, the subcommands and the SVG
plots.

.. automodule:: cdprlqg.cli.config
.. automodule:: cdprlqg.cli.commands
.. automodule:: cdprlqg.cli.plot
.. automodule:: cdprlqg.cli.main
"""

# local
from .config import Config, parse_config, load_config, dump_config
from .main import build_parser, main
