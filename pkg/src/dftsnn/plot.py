"""Deterministic SVG stem, polar and trace-grid plots.

Every panel is a 640x480 viewBox. All coordinates are written with four
decimals and elements are emitted in a fixed order, so identical inputs give
byte-identical files. Markers carry ``data-*`` attributes with the plotted
values, which is what the structural tests read back.
"""

from __future__ import annotations

import enum
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .dft import Signal, Spectrum, reconstruct
from .errors import EmptyData, UnwritablePath, ValidationError
from .phasor import TWO_PI, PhaseConvention, wrap_phase
from .snn import DEFAULT_INTERPOLATION, network_from_spectrum, network_sum_trace, neuron_trace

SVG_NS = "http://www.w3.org/2000/svg"
PANEL_W, PANEL_H = 640, 480
LEFT, RIGHT, TOP, BOTTOM = 70.0, 600.0, 50.0, 420.0
STAR_SIZE = 5.0
MARKER_RADIUS = 4.0

COLORS = {"axis": "#000000", "grid": "#c8c8c8", "real": "#1f77b4", "phase": "#d62728", "stem": "#1f77b4"}


class PlotStyle(str, enum.Enum):
    TIME_STEM = "time_stem"
    MAGNITUDE_STEM = "magnitude_stem"
    PHASE_STEM = "phase_stem"
    POLAR = "polar"
    TRACE_GRID = "trace_grid"

    @property
    def default_convention(self) -> PhaseConvention:
        return PhaseConvention.HALF_OPEN_2PI if self is PlotStyle.POLAR else PhaseConvention.HALF_OPEN_PI


@dataclass(frozen=True)
class PlotSpec:
    style: PlotStyle
    phase_convention: Optional[PhaseConvention] = None
    interpolation: int = DEFAULT_INTERPOLATION
    output_path: Optional[Path] = None
    limit: Optional[float] = None  # y-limit of stem plots, radial limit of polar plots

    def __post_init__(self):
        object.__setattr__(self, "style", PlotStyle(self.style))
        if self.phase_convention is None:
            object.__setattr__(self, "phase_convention", self.style.default_convention)
        else:
            object.__setattr__(self, "phase_convention", PhaseConvention.parse(self.phase_convention))
        if int(self.interpolation) != self.interpolation or self.interpolation < 1:
            raise ValidationError(f"interpolation factor must be an integer >= 1, got {self.interpolation!r}")
        if self.limit is not None and not (math.isfinite(self.limit) and self.limit > 0):
            raise ValidationError(f"axis limit must be positive, got {self.limit!r}")


def fmt(v: float) -> str:
    s = f"{v:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _angle_label(theta: float) -> str:
    quarter = round(theta / (math.pi / 2))
    labels = {-2: "-π", -1: "-π/2", 0: "0", 1: "π/2", 2: "π", 3: "3π/2", 4: "2π"}
    if abs(theta - quarter * math.pi / 2) < 1e-9 and quarter in labels:
        return labels[quarter]
    return fmt(theta)


class _Panel:
    """One 640x480 viewBox with a linear data-to-pixel mapping."""

    def __init__(self, parent: ET.Element, title: str, x_range, y_range, y_offset: float = 0.0, **attrs):
        self.el = ET.SubElement(parent, "svg", {
            "class": attrs.pop("cls", "panel"),
            "x": "0",
            "y": fmt(y_offset),
            "width": str(PANEL_W),
            "height": str(PANEL_H),
            "viewBox": f"0 0 {PANEL_W} {PANEL_H}",
            **attrs,
        })
        self.x0, self.x1 = x_range
        self.y0, self.y1 = y_range
        ET.SubElement(self.el, "rect", {
            "class": "background", "x": "0", "y": "0",
            "width": str(PANEL_W), "height": str(PANEL_H), "fill": "#ffffff",
        })
        t = ET.SubElement(self.el, "text", {
            "class": "title", "x": fmt(PANEL_W / 2), "y": "28",
            "text-anchor": "middle", "font-family": "sans-serif", "font-size": "16",
        })
        t.text = title

    def px(self, x: float) -> float:
        return LEFT + (x - self.x0) / (self.x1 - self.x0) * (RIGHT - LEFT)

    def py(self, y: float) -> float:
        return BOTTOM - (y - self.y0) / (self.y1 - self.y0) * (BOTTOM - TOP)

    def line(self, x1, y1, x2, y2, cls: str, color: str, **attrs) -> ET.Element:
        return ET.SubElement(self.el, "line", {
            "class": cls, **attrs,
            "x1": fmt(x1), "y1": fmt(y1), "x2": fmt(x2), "y2": fmt(y2),
            "stroke": color, "stroke-width": "1.5" if cls != "grid" else "1",
        })

    def text(self, x, y, label: str, anchor: str = "middle", cls: str = "tick") -> ET.Element:
        t = ET.SubElement(self.el, "text", {
            "class": cls, "x": fmt(x), "y": fmt(y), "text-anchor": anchor,
            "font-family": "sans-serif", "font-size": "12",
        })
        t.text = label
        return t

    def frame(self, x_ticks: Sequence[float], y_ticks: Sequence[float], y_label=fmt, x_label=fmt):
        self.line(LEFT, BOTTOM, RIGHT, BOTTOM, "axis", COLORS["axis"])
        self.line(LEFT, TOP, LEFT, BOTTOM, "axis", COLORS["axis"])
        for x in x_ticks:
            self.text(self.px(x), BOTTOM + 18, x_label(x))
        for y in y_ticks:
            self.line(LEFT, self.py(y), RIGHT, self.py(y), "grid", COLORS["grid"])
            self.text(LEFT - 8, self.py(y) + 4, y_label(y), anchor="end")

    def path(self, points: Sequence[tuple[float, float]], cls: str, color: str, break_above: Optional[float] = None):
        """Polyline through data points; a jump larger than ``break_above`` starts a new subpath."""
        parts = []
        prev = None
        for x, y in points:
            cmd = "L"
            if prev is None or (break_above is not None and abs(y - prev) > break_above):
                cmd = "M"
            parts.append(f"{cmd}{fmt(self.px(x))},{fmt(self.py(y))}")
            prev = y
        return ET.SubElement(self.el, "path", {
            "class": cls, "d": " ".join(parts), "fill": "none", "stroke": color, "stroke-width": "1.5",
        })

    def circle(self, cx: float, cy: float, cls: str, color: str, **data) -> ET.Element:
        return ET.SubElement(self.el, "circle", {
            "class": cls, **data,
            "cx": fmt(cx), "cy": fmt(cy), "r": fmt(MARKER_RADIUS),
            "fill": "none", "stroke": color, "stroke-width": "1.5",
        })

    def star(self, cx: float, cy: float, color: str, **data) -> ET.Element:
        """Six-armed asterisk centred at (cx, cy)."""
        s = STAR_SIZE
        h = s * math.sqrt(3) / 2
        d = (f"M{fmt(-s)},0 L{fmt(s)},0 "
             f"M{fmt(-s / 2)},{fmt(-h)} L{fmt(s / 2)},{fmt(h)} "
             f"M{fmt(-s / 2)},{fmt(h)} L{fmt(s / 2)},{fmt(-h)}")
        return ET.SubElement(self.el, "path", {
            "class": "marker star", **data,
            "transform": f"translate({fmt(cx)},{fmt(cy)})",
            "d": d, "fill": "none", "stroke": color, "stroke-width": "1.5",
        })


def _root(height_panels: int = 1) -> ET.Element:
    h = PANEL_H * height_panels
    return ET.Element("svg", {
        "xmlns": SVG_NS, "version": "1.1",
        "width": str(PANEL_W), "height": str(h), "viewBox": f"0 0 {PANEL_W} {h}",
    })


def _serialize(root: ET.Element) -> str:
    ET.indent(root, space="  ")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def _stems(panel: _Panel, values: Sequence[float], color: str, name: str) -> None:
    base = panel.py(max(panel.y0, min(0.0, panel.y1)))
    for k, v in enumerate(values):
        x = panel.px(k)
        panel.line(x, base, x, panel.py(v), "stem", color, **{"data-k": str(k)})
        panel.circle(x, panel.py(v), "marker stem-head", color, **{"data-k": str(k), f"data-{name}": fmt(v)})


def _index_range(n: int) -> tuple[float, float]:
    return (-0.5, n - 0.5)


def _check_data(values: Sequence) -> None:
    if len(values) == 0:
        raise EmptyData("nothing to plot")


def render_time_stem(x: Signal, limit: Optional[float] = None) -> str:
    _check_data(x.samples)
    hi = limit if limit is not None else max(1.0, max(x.samples))
    lo = min(0.0, min(x.samples))
    if limit is not None and lo < 0.0:
        lo = -limit
    root = _root()
    title = f"x(t) = {x.to_bits()}" if x.is_binary() else f"x(t), N = {x.n}"
    panel = _Panel(root, title, _index_range(x.n), (lo, hi), cls="panel time-stem")
    panel.frame(range(x.n), sorted({lo, 0.0, hi}), x_label=lambda v: str(int(v)))
    _stems(panel, x.samples, COLORS["stem"], "value")
    return _serialize(root)


def render_magnitude_stem(Y: Spectrum, limit: Optional[float] = None) -> str:
    _check_data(Y.coefficients)
    mags = [c.magnitude for c in Y.coefficients]
    hi = limit if limit is not None else max(1.0, max(mags))
    root = _root()
    panel = _Panel(root, f"|Y[k]|, N = {Y.n}", _index_range(Y.n), (0.0, hi), cls="panel magnitude-stem")
    panel.frame(range(Y.n), [0.0, hi / 2, hi], x_label=lambda v: str(int(v)))
    _stems(panel, mags, COLORS["stem"], "value")
    return _serialize(root)


def render_phase_stem(Y: Spectrum, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI) -> str:
    _check_data(Y.coefficients)
    convention = PhaseConvention.parse(convention)
    phases = [0.0 if c.magnitude == 0.0 else wrap_phase(c.phase, convention) for c in Y.coefficients]
    if convention is PhaseConvention.HALF_OPEN_PI:
        y_range, ticks = (-math.pi, math.pi), [-math.pi, -math.pi / 2, 0.0, math.pi / 2, math.pi]
    else:
        y_range, ticks = (0.0, TWO_PI), [0.0, math.pi / 2, math.pi, 3 * math.pi / 2, TWO_PI]
    root = _root()
    panel = _Panel(root, f"angle Y[k], N = {Y.n}", _index_range(Y.n), y_range, cls="panel phase-stem")
    panel.frame(range(Y.n), ticks, y_label=_angle_label, x_label=lambda v: str(int(v)))
    _stems(panel, phases, COLORS["phase"], "theta")
    return _serialize(root)


POLAR_CENTER = (320.0, 250.0)
POLAR_RADIUS = 180.0


def polar_position(r: float, theta: float, rmax: float) -> tuple[float, float]:
    """Pixel position of a phasor in the polar panel (y grows downward)."""
    cx, cy = POLAR_CENTER
    scale = POLAR_RADIUS * r / rmax
    return cx + scale * math.cos(theta), cy - scale * math.sin(theta)


def render_polar(
    Y: Spectrum, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_2PI, limit: Optional[float] = None
) -> str:
    _check_data(Y.coefficients)
    convention = PhaseConvention.parse(convention)
    rmax = limit if limit is not None else max(1.0, max(c.magnitude for c in Y.coefficients))
    root = _root()
    panel = _Panel(root, f"Y[k] polar, N = {Y.n}", (0.0, 1.0), (0.0, 1.0), cls="panel polar")
    cx, cy = POLAR_CENTER
    for frac in (0.5, 1.0):
        ET.SubElement(panel.el, "circle", {
            "class": "grid", "cx": fmt(cx), "cy": fmt(cy), "r": fmt(POLAR_RADIUS * frac),
            "fill": "none", "stroke": COLORS["grid"], "stroke-width": "1",
        })
    for q in range(4):
        theta = wrap_phase(q * math.pi / 2, convention)
        x, y = polar_position(rmax, theta, rmax)
        panel.line(cx, cy, x, y, "grid", COLORS["grid"])
        lx, ly = polar_position(rmax * 1.12, theta, rmax)
        panel.text(lx, ly + 4, _angle_label(theta), cls="angle-label")
    panel.text(cx + POLAR_RADIUS + 4, cy - 4, fmt(rmax), anchor="start", cls="radius-label")
    for k, c in enumerate(Y.coefficients):
        theta = 0.0 if c.magnitude == 0.0 else wrap_phase(c.phase, convention)
        x, y = polar_position(c.magnitude, theta, rmax)
        panel.line(cx, cy, x, y, "polar-stem", COLORS["stem"], **{"data-k": str(k)})
        panel.circle(x, y, "marker polar", COLORS["stem"], **{
            "data-k": str(k), "data-r": fmt(c.magnitude), "data-theta": fmt(theta),
        })
    return _serialize(root)


def render_trace_grid(
    Y: Spectrum,
    interpolation: int = DEFAULT_INTERPOLATION,
    convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI,
) -> str:
    """One panel per neuron (real part and phase) followed by the summed reconstruction.

    Integer-time samples are marked with ``*`` on the real part and ``o`` on
    the phase.
    """
    _check_data(Y.coefficients)
    convention = PhaseConvention.parse(convention)
    net = network_from_spectrum(Y)
    n = net.n
    if convention is PhaseConvention.HALF_OPEN_PI:
        p_lo, p_hi = -math.pi, math.pi
    else:
        p_lo, p_hi = 0.0, TWO_PI
    root = _root(n + 1)
    for s in net.neurons:
        tr = neuron_trace(s, n, interpolation)
        amp = max(1.0, s.amplitude)
        panel = _Panel(
            root, f"s{s.index}: A = {fmt(s.amplitude)}, phi = {fmt(wrap_phase(s.initial_phase, convention))}",
            (0.0, float(n)), (-amp, amp), y_offset=PANEL_H * s.index,
            cls="panel neuron", **{"data-k": str(s.index)},
        )
        panel.frame(range(n + 1), [-amp, 0.0, amp], x_label=lambda v: str(int(v)))
        times = list(tr.times)
        panel.path(list(zip(times, tr.real)), "trace real", COLORS["real"])
        # phase shares the panel height: p_lo..p_hi spans -amp..amp
        phase = tr.phase(convention)
        scaled = [-amp + (p - p_lo) / (p_hi - p_lo) * 2 * amp for p in phase]
        panel.path(list(zip(times, scaled)), "trace phase", COLORS["phase"], break_above=amp)
        for j in range(0, len(times), tr.marker_stride):
            t = times[j]
            panel.star(panel.px(t), panel.py(tr.real[j]), COLORS["real"],
                       **{"data-t": fmt(t), "data-value": fmt(tr.real[j])})
            panel.circle(panel.px(t), panel.py(scaled[j]), "marker circle", COLORS["phase"],
                         **{"data-t": fmt(t), "data-theta": fmt(phase[j])})
    total = network_sum_trace(net, interpolation)
    x = reconstruct(Y)
    lo = min(0.0, min(x.samples)) - 0.25
    hi = max(1.0, max(x.samples)) + 0.25
    title = f"sum: x(t) = {_bits_of(x)}" if _is_bits(x) else "sum"
    panel = _Panel(root, title, (0.0, float(n)), (lo, hi), y_offset=PANEL_H * n, cls="panel sum")
    panel.frame(range(n + 1), sorted({0.0, 1.0}), x_label=lambda v: str(int(v)))
    times = list(total.times)
    panel.path(list(zip(times, total.real)), "trace real", COLORS["real"])
    for j in range(0, len(times), total.marker_stride):
        panel.star(panel.px(times[j]), panel.py(total.real[j]), COLORS["real"],
                   **{"data-t": fmt(times[j]), "data-value": fmt(total.real[j])})
    return _serialize(root)


def _is_bits(x: Signal) -> bool:
    return all(abs(v) < 1e-9 or abs(v - 1.0) < 1e-9 for v in x.samples)


def _bits_of(x: Signal) -> str:
    return "".join("1" if abs(v - 1.0) < 1e-9 else "0" for v in x.samples)


def render(spec: PlotSpec, spectrum: Spectrum, signal: Optional[Signal] = None) -> str:
    """Render ``spec.style`` for the given data; ``signal`` defaults to the reconstruction."""
    style = spec.style
    if style is PlotStyle.TIME_STEM:
        return render_time_stem(signal if signal is not None else reconstruct(spectrum), spec.limit)
    if style is PlotStyle.MAGNITUDE_STEM:
        return render_magnitude_stem(spectrum, spec.limit)
    if style is PlotStyle.PHASE_STEM:
        return render_phase_stem(spectrum, spec.phase_convention)
    if style is PlotStyle.POLAR:
        return render_polar(spectrum, spec.phase_convention, spec.limit)
    return render_trace_grid(spectrum, spec.interpolation, spec.phase_convention)


def write_svg(path: Path | str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UnwritablePath(f"cannot write {path}: {exc.strerror or exc}") from exc
