#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.


#: The current version of this library
version = "0.1.0"

#: The version of the binary gain schedule format.
schedule_format_version = 1

#: The magic bytes at the start of a gain schedule file.
schedule_magic = b"CDPRGS1\0"
