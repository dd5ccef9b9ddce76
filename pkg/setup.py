#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

# std
from setuptools import setup

# local: read the version without importing the package (which needs its
# runtime dependencies to be installed already)
_version_ns = {}
with open("cdprlqg/version.py") as f:
    exec(f.read(), _version_ns)


try:
    long_description = open("README.rst").read()
except OSError:
    long_description = "not available"

try:
    license_ = open("LICENSE").read()
except OSError:
    license_ = "not available"

setup(
    name = "cdpr-lqg",
    version = _version_ns["version"],
    description = "Time varying LQG control of a planar cable-driven parallel robot",
    long_description = long_description,
    author = "The cdpr-lqg authors",
    packages = [
        "cdprlqg",
        "cdprlqg.base",
        "cdprlqg.graph",
        "cdprlqg.model",
        "cdprlqg.trajectory",
        "cdprlqg.synthesis",
        "cdprlqg.controller",
        "cdprlqg.simulator",
        "cdprlqg.cli"
    ],
    package_data = {
        "cdprlqg": ["data/default.cfg"]
    },
    license = license_,
    install_requires = [
        "cached-property",
        "numpy",
        "scipy"
    ],
    extras_require = {
        "test": ["pytest", "hypothesis"],
        "docs": ["sphinx", "sphinx_rtd_theme"]
    },
    entry_points = {
        "console_scripts": ["cdprlqg = cdprlqg.cli.main:main"]
    },
    include_package_data = True,
    classifiers = [
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering",
        "Topic :: Software Development :: Libraries"
    ]
)
