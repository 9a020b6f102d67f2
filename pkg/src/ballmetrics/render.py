"""Minimal SVG emitter for unit-disk figures.

The canvas maps [-1.05, 1.05]^2 onto a square viewport with the
mathematical orientation (y up); the unit circle is always drawn.
Output is deterministic: fixed float formatting, no timestamps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class StrokeStyle:
    color: str = "#000000"
    width: float = 0.006
    dash: Optional[str] = None

    def attrs(self) -> str:
        s = 'fill="none" stroke="%s" stroke-width="%s"' % (self.color, _fmt(self.width))
        if self.dash:
            s += ' stroke-dasharray="%s"' % self.dash
        return s


@dataclass(frozen=True)
class RenderSpec:
    """Viewport and per-role stroke styles; aspect ratio is fixed at 1."""

    canvas_px: int = 640
    unit_circle: StrokeStyle = field(default_factory=lambda: StrokeStyle("#000000", 0.006))
    metric_curve: StrokeStyle = field(default_factory=lambda: StrokeStyle("#1f77b4", 0.008))
    aux_curve: StrokeStyle = field(default_factory=lambda: StrokeStyle("#888888", 0.004, "0.02 0.02"))
    witness: StrokeStyle = field(default_factory=lambda: StrokeStyle("#d62728", 0.012))


def _fmt(v: float) -> str:
    return "%.6f" % float(v)


def curve_color(index: int) -> str:
    return _PALETTE[index % len(_PALETTE)]


def svg_document(curves: Sequence, spec: RenderSpec = RenderSpec(),
                 aux_circles: Sequence = (), points: Sequence = (),
                 center: Optional[complex] = None) -> str:
    """Render polyline curves (sequences of complex vertices), auxiliary
    Euclidean circles ((center, radius) pairs), and marked points into a
    standalone SVG string."""
    px = spec.canvas_px
    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    out.append('<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
               'viewBox="-1.05 -1.05 2.1 2.1">' % (px, px))
    out.append('<g transform="scale(1,-1)">')
    out.append('<circle cx="0" cy="0" r="1" %s/>' % spec.unit_circle.attrs())
    for c, r in aux_circles:
        out.append('<circle cx="%s" cy="%s" r="%s" %s/>' % (
            _fmt(c.real), _fmt(c.imag), _fmt(r), spec.aux_curve.attrs()))
    for i, curve in enumerate(curves):
        pts = np.asarray(curve, dtype=complex)
        if len(pts) == 0:
            continue
        closed = np.append(pts, pts[0])
        coords = " ".join("%s,%s" % (_fmt(p.real), _fmt(p.imag)) for p in closed)
        style = StrokeStyle(curve_color(i), spec.metric_curve.width)
        out.append('<polyline points="%s" %s/>' % (coords, style.attrs()))
    if center is not None:
        out.append('<circle cx="%s" cy="%s" r="%s" fill="%s"/>' % (
            _fmt(center.real), _fmt(center.imag), _fmt(spec.witness.width),
            spec.unit_circle.color))
    for p in points:
        out.append('<circle cx="%s" cy="%s" r="%s" fill="%s"/>' % (
            _fmt(p.real), _fmt(p.imag), _fmt(spec.witness.width),
            spec.witness.color))
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
