#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.cli.config
==================

The configuration file is a flat list of ``section.key = value`` lines.
``#`` starts a comment. Vector entries are comma separated, point lists use
``;`` between the points. Angle valued entries accept the suffix ``deg``
per element. Keys missing in the file keep their defaults, unknown keys are
errors.

.. code-block:: text

    # Robot
    robot.winch_radius = 0.02         # m
    robot.tension_min = 1             # N
    weights.sigma0_std = 5.7 deg, 0.1, 0.1, 0, 0, 0
    rates.ctrl_hz = 1000
"""

# std
from collections import OrderedDict
import logging
import os

# third party
import numpy as np

# local
from ..base import errors, validators
from ..controller.baseline import BaselineGains
from ..model.params import RobotParams
from ..simulator.noise import NoiseConfig
from ..synthesis.ilqr import IlqrOptions
from ..synthesis.weights import LqgWeights
from ..trajectory.io import format_float


__all__ = [
    "SCHEMA",
    "Config",
    "parse_config",
    "load_config",
    "dump_config",
    "default_config_path"
]


LOG = logging.getLogger(__file__)


# The value kinds: "float", "int", "bool", "str", ("vector", size),
# ("points", count). The third entry is true for angle valued entries.
SCHEMA = OrderedDict([
    ("robot.frame_points", (("points", 4), False, "m, world frame")),
    ("robot.ee_points", (("points", 4), False, "m, body frame")),
    ("robot.inertia", (("vector", 3), False, "I_z kg m^2, m kg, m kg")),
    ("robot.winch_inertia", ("float", False, "kg m^2")),
    ("robot.winch_radius", ("float", False, "m")),
    ("robot.viscous_friction", ("float", False, "N m s")),
    ("robot.static_friction", ("float", False, "N m")),
    ("robot.tanh_mu", ("float", False, "s/rad")),
    ("robot.tension_min", ("float", False, "N")),
    ("robot.tension_max", ("float", False, "N")),
    ("robot.gravity_enabled", ("bool", False, "")),
    ("robot.gravity", ("float", False, "m/s^2")),

    ("weights.q_diag", (("vector", 6), False, "")),
    ("weights.r_diag", (("vector", 4), False, "")),
    ("weights.qf_diag", (("vector", 6), False, "")),
    ("weights.sigma0_std", (("vector", 6), True, "rad, m, m, rad/s, m/s, m/s")),
    ("weights.meas_std", (("vector", 8), False, "4 x m, 4 x m/s")),
    ("weights.torque_std", (("vector", 4), False, "N m")),

    ("baseline.kp", ("float", False, "N/m")),
    ("baseline.ki", ("float", False, "N/(m s)")),
    ("baseline.kd", ("float", False, "N s/m")),
    ("baseline.integrator_limit", ("float", False, "m s")),

    ("noise.meas_std_len", ("float", False, "m")),
    ("noise.meas_std_rate", ("float", False, "m/s")),
    ("noise.torque_std", ("float", False, "N m")),
    ("noise.initial_std", (("vector", 6), True, "rad, m, m, rad/s, m/s, m/s")),
    ("noise.seed", ("int", False, "")),

    ("rates.offline_hz", ("float", False, "Hz")),
    ("rates.ctrl_hz", ("float", False, "Hz")),
    ("rates.substeps", ("int", False, "RK4 steps per control tick")),

    ("ilqr.max_iters", ("int", False, "")),
    ("ilqr.cost_tol", ("float", False, "relative")),
    ("ilqr.line_search_shrink", ("float", False, "")),
    ("ilqr.max_shrinks", ("int", False, "")),
    ("ilqr.substeps", ("int", False, "RK4 steps per offline period")),
    ("ilqr.discretization", ("str", False, "rk4 or euler"))
])


class Config(object):
    """
    The validated configuration.

    :ivar cdprlqg.model.params.RobotParams robot:
    :ivar cdprlqg.synthesis.weights.LqgWeights weights:
    :ivar cdprlqg.controller.baseline.BaselineGains baseline:
    :ivar cdprlqg.simulator.noise.NoiseConfig noise:
    :ivar dict rates:
    :ivar cdprlqg.synthesis.ilqr.IlqrOptions ilqr:
    """

    def __init__(
        self, robot=None, weights=None, baseline=None, noise=None, rates=None,
        ilqr=None
        ):
        self.robot = robot if robot is not None else RobotParams()
        self.weights = weights if weights is not None else LqgWeights()
        self.baseline = baseline if baseline is not None else BaselineGains()
        self.noise = noise if noise is not None else NoiseConfig()
        self.rates = rates if rates is not None \
            else {"offline_hz": 100.0, "ctrl_hz": 1000.0, "substeps": 10}
        self.ilqr = ilqr if ilqr is not None else IlqrOptions()

        validators.assert_rates(self.rates)
        return None

    @property
    def offline_dt(self):
        return 1.0/self.rates["offline_hz"]

    def values(self):
        """
        Returns the flat ``key -> value`` mapping of :data:`SCHEMA`.
        """
        robot, weights, baseline = self.robot, self.weights, self.baseline
        noise, rates, ilqr = self.noise, self.rates, self.ilqr
        return OrderedDict([
            ("robot.frame_points", robot.frame_points),
            ("robot.ee_points", robot.ee_points),
            ("robot.inertia", robot.inertia),
            ("robot.winch_inertia", robot.winch_inertia),
            ("robot.winch_radius", robot.winch_radius),
            ("robot.viscous_friction", robot.viscous_friction),
            ("robot.static_friction", robot.static_friction),
            ("robot.tanh_mu", robot.tanh_mu),
            ("robot.tension_min", robot.tension_min),
            ("robot.tension_max", robot.tension_max),
            ("robot.gravity_enabled", robot.gravity_enabled),
            ("robot.gravity", robot.gravity),
            ("weights.q_diag", weights.q_diag),
            ("weights.r_diag", weights.r_diag),
            ("weights.qf_diag", weights.qf_diag),
            ("weights.sigma0_std", weights.sigma0_std),
            ("weights.meas_std", weights.meas_std),
            ("weights.torque_std", weights.torque_std),
            ("baseline.kp", baseline.Kp),
            ("baseline.ki", baseline.Ki),
            ("baseline.kd", baseline.Kd),
            ("baseline.integrator_limit", baseline.integrator_limit),
            ("noise.meas_std_len", noise.meas_std_len),
            ("noise.meas_std_rate", noise.meas_std_rate),
            ("noise.torque_std", noise.torque_std),
            ("noise.initial_std", noise.initial_std),
            ("noise.seed", noise.seed),
            ("rates.offline_hz", rates["offline_hz"]),
            ("rates.ctrl_hz", rates["ctrl_hz"]),
            ("rates.substeps", rates["substeps"]),
            ("ilqr.max_iters", ilqr.max_iters),
            ("ilqr.cost_tol", ilqr.cost_tol),
            ("ilqr.line_search_shrink", ilqr.line_search_shrink),
            ("ilqr.max_shrinks", ilqr.max_shrinks),
            ("ilqr.substeps", ilqr.substeps),
            ("ilqr.discretization", ilqr.discretization)
        ])

    @classmethod
    def from_values(cls, values):
        """
        Builds the configuration from a flat mapping. Missing keys take the
        defaults.

        :raises cdprlqg.base.errors.InvalidConfig:
        """
        d = cls().values()
        d.update(values)

        robot = RobotParams(
            frame_points=d["robot.frame_points"],
            ee_points=d["robot.ee_points"],
            inertia=d["robot.inertia"],
            winch_inertia=d["robot.winch_inertia"],
            winch_radius=d["robot.winch_radius"],
            viscous_friction=d["robot.viscous_friction"],
            static_friction=d["robot.static_friction"],
            tanh_mu=d["robot.tanh_mu"],
            tension_min=d["robot.tension_min"],
            tension_max=d["robot.tension_max"],
            gravity_enabled=d["robot.gravity_enabled"],
            gravity=d["robot.gravity"]
        )
        weights = LqgWeights(
            q_diag=d["weights.q_diag"],
            r_diag=d["weights.r_diag"],
            sigma0_std=d["weights.sigma0_std"],
            meas_std=d["weights.meas_std"],
            torque_std=d["weights.torque_std"],
            qf_diag=d["weights.qf_diag"]
        )
        baseline = BaselineGains(
            Kp=d["baseline.kp"],
            Ki=d["baseline.ki"],
            Kd=d["baseline.kd"],
            integrator_limit=d["baseline.integrator_limit"]
        )
        noise = NoiseConfig(
            meas_std_len=d["noise.meas_std_len"],
            meas_std_rate=d["noise.meas_std_rate"],
            torque_std=d["noise.torque_std"],
            initial_std=d["noise.initial_std"],
            seed=d["noise.seed"]
        )
        rates = {
            "offline_hz": float(d["rates.offline_hz"]),
            "ctrl_hz": float(d["rates.ctrl_hz"]),
            "substeps": int(d["rates.substeps"])
        }
        ilqr = IlqrOptions(
            max_iters=d["ilqr.max_iters"],
            cost_tol=d["ilqr.cost_tol"],
            line_search_shrink=d["ilqr.line_search_shrink"],
            max_shrinks=d["ilqr.max_shrinks"],
            substeps=d["ilqr.substeps"],
            discretization=d["ilqr.discretization"]
        )
        return cls(robot, weights, baseline, noise, rates, ilqr)

    def equals(self, other):
        """
        True, if both configurations have the same values.
        """
        a, b = self.values(), other.values()
        return all(np.array_equal(a[key], b[key]) for key in SCHEMA)


def _parse_number(token, key, angle):
    token = token.strip()
    degrees = token.endswith("deg")
    if degrees:
        if not angle:
            raise errors.InvalidConfig(key, "The 'deg' suffix is not allowed here.")
        token = token[:-3].strip()
    try:
        value = float(token)
    except ValueError:
        raise errors.InvalidConfig(key, "'{}' is not a number.".format(token))
    return float(np.deg2rad(value)) if degrees else value


def _parse_value(key, text):
    kind, angle, _ = SCHEMA[key]
    text = text.strip()
    if kind == "str":
        return text
    if kind == "bool":
        if text.lower() in ("true", "yes", "on", "1"):
            return True
        if text.lower() in ("false", "no", "off", "0"):
            return False
        raise errors.InvalidConfig(key, "'{}' is not a boolean.".format(text))
    if kind == "int":
        try:
            return int(text)
        except ValueError:
            raise errors.InvalidConfig(key, "'{}' is not an integer.".format(text))
    if kind == "float":
        return _parse_number(text, key, angle)

    shape, size = kind
    if shape == "vector":
        values = [_parse_number(token, key, angle) for token in text.split(",")]
        if len(values) != size:
            raise errors.InvalidConfig(
                key, "Expected {} values, found {}.".format(size, len(values))
            )
        return np.array(values)

    points = [
        [_parse_number(token, key, angle) for token in point.split(",")]
        for point in text.split(";")
    ]
    if len(points) != size or any(len(point) != 2 for point in points):
        raise errors.InvalidConfig(
            key, "Expected {} points with 2 coordinates.".format(size)
        )
    return np.array(points)


def parse_config(text, source="<config>"):
    """
    Parses the configuration *text* and validates it.

    :arg str text:
    :arg str source:
        The file name used in error messages.

    :rtype: Config

    :raises cdprlqg.base.errors.InvalidConfig:
    """
    values = OrderedDict()
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise errors.InvalidConfig(
                "{}:{}".format(source, number), "Expected 'key = value'."
            )
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in SCHEMA:
            raise errors.InvalidConfig(key, "Unknown key.")
        if key in values:
            raise errors.InvalidConfig(key, "Duplicate key.")
        values[key] = _parse_value(key, value)
    return Config.from_values(values)


def load_config(path=None):
    """
    Reads the configuration file at *path*. Without a path, the shipped
    default configuration is read.

    :raises cdprlqg.base.errors.FileError:
    :raises cdprlqg.base.errors.InvalidConfig:
    """
    path = path if path is not None else default_config_path()
    try:
        with open(path, "r") as file:
            text = file.read()
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))
    LOG.debug("Read the configuration '%s'.", path)
    return parse_config(text, source=str(path))


def _format_value(key, value):
    kind = SCHEMA[key][0]
    if kind == "str":
        return value
    if kind == "bool":
        return "true" if value else "false"
    if kind == "int":
        return str(int(value))
    if kind == "float":
        return format_float(value)
    if kind[0] == "vector":
        return ", ".join(format_float(v) for v in value)
    return "; ".join(
        ", ".join(format_float(v) for v in point) for point in value
    )


def dump_config(config):
    """
    Returns the text of *config*. Angles are written in radians, so that
    :func:`parse_config` restores the same values.
    """
    lines = list()
    section = None
    for key, value in config.values().items():
        if key.split(".")[0] != section:
            section = key.split(".")[0]
            if lines:
                lines.append("")
            lines.append("# {}".format(section))
        unit = SCHEMA[key][2]
        line = "{} = {}".format(key, _format_value(key, value))
        if unit:
            line += "  # " + unit
        lines.append(line)
    return "\n".join(lines) + "\n"


def default_config_path():
    """
    The path of the shipped default configuration.
    """
    return os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "default.cfg")
