#!/usr/bin/env python3

# The MIT License (MIT)
#
# Copyright (c) 2026 The cdpr-lqg authors
#
# See the LICENSE file for the full text.

"""
cdprlqg.cli.plot
================

Self contained SVG plots of a simulation: the reference and the realized
path in the x-y plane and the error traces of the pose over time. Every
series is one ``polyline`` element.
"""

# std
import xml.etree.ElementTree as ET

# third party
import numpy as np

# local
from ..base import errors
from ..simulator.metrics import reference_states


__all__ = [
    "SVG_NS",
    "tracking_svg",
    "save_svg"
]


SVG_NS = "http://www.w3.org/2000/svg"

WIDTH = 640
PANEL_HEIGHT = 240
MARGIN = 40

COLORS = {
    "reference": "#888888",
    "realized": "#1f77b4",
    "theta": "#2ca02c",
    "x": "#d62728",
    "y": "#9467bd"
}


def _points(xs, ys, box, bounds):
    """
    Maps the data to the pixel rectangle *box* ``(left, top, width,
    height)``.
    """
    left, top, width, height = box
    x0, x1, y0, y1 = bounds
    sx = width/(x1 - x0) if x1 > x0 else 1.0
    sy = height/(y1 - y0) if y1 > y0 else 1.0
    px = left + (xs - x0)*sx
    py = top + height - (ys - y0)*sy
    return " ".join("{:.2f},{:.2f}".format(a, b) for a, b in zip(px, py))


def _bounds(*arrays):
    lo = min(float(np.min(a)) for a in arrays)
    hi = max(float(np.max(a)) for a in arrays)
    if hi - lo < 1e-12:
        lo, hi = lo - 0.5, hi + 0.5
    return lo, hi


def _panel(svg, title, top):
    ET.SubElement(svg, "text", {
        "x": str(MARGIN), "y": str(top - 8), "font-family": "sans-serif",
        "font-size": "12"
    }).text = title
    ET.SubElement(svg, "rect", {
        "x": str(MARGIN), "y": str(top), "width": str(WIDTH - 2*MARGIN),
        "height": str(PANEL_HEIGHT), "fill": "none", "stroke": "#cccccc"
    })
    return (MARGIN, top, WIDTH - 2*MARGIN, PANEL_HEIGHT)


def _polyline(svg, name, points):
    ET.SubElement(svg, "polyline", {
        "points": points, "fill": "none", "stroke": COLORS[name],
        "stroke-width": "1", "data-series": name
    })
    return None


def tracking_svg(log, reference):
    """
    Returns the plot of *log* against *reference* as an
    :class:`xml.etree.ElementTree.Element`.
    """
    if len(log) == 0:
        raise errors.InvalidParameter("log", "has no samples.")
    ref = reference_states(reference, log.t)
    height = 2*PANEL_HEIGHT + 3*MARGIN
    svg = ET.Element("svg", {
        "xmlns": SVG_NS, "width": str(WIDTH), "height": str(height),
        "viewBox": "0 0 {} {}".format(WIDTH, height)
    })

    # x-y path
    box = _panel(svg, "path (x-y, m)", MARGIN)
    bx = _bounds(reference.poses[:, 1], log.states[:, 1])
    by = _bounds(reference.poses[:, 2], log.states[:, 2])
    bounds = bx + by
    _polyline(svg, "reference", _points(
        reference.poses[:, 1], reference.poses[:, 2], box, bounds
    ))
    _polyline(svg, "realized", _points(
        log.states[:, 1], log.states[:, 2], box, bounds
    ))

    # error traces
    box = _panel(svg, "error (theta deg, x mm, y mm) over t (s)",
        2*MARGIN + PANEL_HEIGHT)
    scale = np.array([180.0/np.pi, 1e3, 1e3])
    error = (log.states[:, :3] - ref[:, :3])*scale
    bounds = _bounds(log.t) + _bounds(error)
    for i, name in enumerate(("theta", "x", "y")):
        _polyline(svg, name, _points(log.t, error[:, i], box, bounds))
    return svg


def save_svg(path, svg):
    """
    :raises cdprlqg.base.errors.FileError:
    """
    tree = ET.ElementTree(svg)
    try:
        tree.write(path, encoding="utf-8", xml_declaration=True)
    except OSError as err:
        raise errors.FileError(detail=str(err), source=str(path))
    return None
