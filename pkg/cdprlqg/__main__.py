#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

# std
import sys

# local
from .cli.main import main


sys.exit(main())
