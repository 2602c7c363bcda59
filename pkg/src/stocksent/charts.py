"""Hand-assembled SVG line charts, no plotting dependency.

A chart is a fixed 960x480 canvas with margins, linear scales, y grid
lines, axis tick labels, a legend, and one polyline per series. The
scale construction is exposed so readers of an emitted file can map
pixel coordinates back to data values.
"""

import math
from datetime import date as _date
from xml.sax.saxutils import escape

from .errors import EmptyInput

WIDTH = 960
HEIGHT = 480
MARGIN_LEFT = 60
MARGIN_RIGHT = 20
MARGIN_TOP = 40
MARGIN_BOTTOM = 50

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")

Y_PAD_FRACTION = 0.05


class LinearScale:
    """Affine map from a data domain onto a pixel range."""

    def __init__(self, d0: float, d1: float, r0: float, r1: float):
        if d1 == d0:
            raise ValueError("degenerate domain")
        self.d0 = d0
        self.d1 = d1
        self.r0 = r0
        self.r1 = r1

    def apply(self, v: float) -> float:
        return self.r0 + (v - self.d0) / (self.d1 - self.d0) * (self.r1 - self.r0)

    def invert(self, pixel: float) -> float:
        return self.d0 + (pixel - self.r0) / (self.r1 - self.r0) * (self.d1 - self.d0)


def pad_domain(values, frac: float = Y_PAD_FRACTION):
    """Data extent padded by frac of the span; unit pad when constant."""
    lo = min(values)
    hi = max(values)
    if lo == hi:
        return lo - 1.0, hi + 1.0
    pad = frac * (hi - lo)
    return lo - pad, hi + pad


def _x_domain(ordinals):
    lo = min(ordinals)
    hi = max(ordinals)
    if lo == hi:
        return lo - 1.0, hi + 1.0
    return float(lo), float(hi)


def chart_scales(series):
    """The (x, y) scales line_chart uses for this data."""
    xs = [d.toordinal() for _, points in series for d, _ in points]
    ys = [v for _, points in series for _, v in points]
    if not xs:
        raise EmptyInput("no points to chart")
    xscale = LinearScale(*_x_domain(xs), MARGIN_LEFT, WIDTH - MARGIN_RIGHT)
    yscale = LinearScale(*pad_domain(ys), HEIGHT - MARGIN_BOTTOM, MARGIN_TOP)
    return xscale, yscale


def _y_ticks(lo: float, hi: float, max_ticks: int = 6):
    """Round tick values (1/2/5 times a power of ten) covering [lo, hi]."""
    span = hi - lo
    raw = span / max_ticks
    power = math.floor(math.log10(raw))
    base = 10.0 ** power
    for mult in (1.0, 2.0, 5.0, 10.0):
        step = mult * base
        if span / step <= max_ticks:
            break
    first = math.ceil(lo / step) * step
    ticks = []
    v = first
    while v <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(v) < 1e-12 * step else v)
        v += step
    return ticks


def _x_ticks(lo: float, hi: float, max_ticks: int = 6):
    """Up to max_ticks day ordinals, evenly spaced, as (ordinal, label)."""
    lo_i = int(lo)
    hi_i = int(hi)
    count = min(max_ticks, hi_i - lo_i + 1)
    if count <= 1:
        mid = (lo_i + hi_i) // 2
        return [(mid, _date.fromordinal(mid).isoformat())]
    ticks = []
    for k in range(count):
        ordn = round(lo_i + k * (hi_i - lo_i) / (count - 1))
        if not ticks or ticks[-1][0] != ordn:
            ticks.append((ordn, _date.fromordinal(ordn).isoformat()))
    return ticks


def line_chart(title: str, series, out_path=None) -> str:
    """Render labeled (day, value) series to an SVG document string.

    series is a sequence of (label, points) with points a sequence of
    (datetime.date, float). Writes to out_path when given.
    """
    series = [(label, list(points)) for label, points in series]
    xscale, yscale = chart_scales(series)
    plot_left = MARGIN_LEFT
    plot_right = WIDTH - MARGIN_RIGHT
    plot_top = MARGIN_TOP
    plot_bottom = HEIGHT - MARGIN_BOTTOM

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{WIDTH / 2:.2f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{escape(title)}</text>',
    ]

    for tick in _y_ticks(yscale.d0, yscale.d1):
        py = yscale.apply(tick)
        parts.append(
            f'<line x1="{plot_left}" y1="{py:.2f}" x2="{plot_right}" '
            f'y2="{py:.2f}" stroke="#dddddd" stroke-width="1"/>')
        parts.append(
            f'<text x="{plot_left - 8}" y="{py + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{tick:g}</text>')
    if yscale.d0 < 0.0 < yscale.d1:
        zero = yscale.apply(0.0)
        parts.append(
            f'<line x1="{plot_left}" y1="{zero:.2f}" x2="{plot_right}" '
            f'y2="{zero:.2f}" stroke="#999999" stroke-width="1"/>')

    for ordn, label in _x_ticks(xscale.d0, xscale.d1):
        px = xscale.apply(ordn)
        parts.append(
            f'<line x1="{px:.2f}" y1="{plot_bottom}" x2="{px:.2f}" '
            f'y2="{plot_bottom + 5}" stroke="#333333" stroke-width="1"/>')
        parts.append(
            f'<text x="{px:.2f}" y="{plot_bottom + 20}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{label}</text>')

    parts.append(
        f'<line x1="{plot_left}" y1="{plot_top}" x2="{plot_left}" '
        f'y2="{plot_bottom}" stroke="#333333" stroke-width="1"/>')
    parts.append(
        f'<line x1="{plot_left}" y1="{plot_bottom}" x2="{plot_right}" '
        f'y2="{plot_bottom}" stroke="#333333" stroke-width="1"/>')

    for i, (label, points) in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        coords = " ".join(
            f"{xscale.apply(d.toordinal()):.2f},{yscale.apply(v):.2f}"
            for d, v in points)
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
            f'points="{coords}"/>')

    legend_x = plot_left + 12
    for i, (label, _) in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        ly = plot_top + 14 + 18 * i
        parts.append(
            f'<line x1="{legend_x}" y1="{ly - 4}" x2="{legend_x + 22}" '
            f'y2="{ly - 4}" stroke="{color}" stroke-width="2"/>')
        parts.append(
            f'<text x="{legend_x + 28}" y="{ly}" font-family="sans-serif" '
            f'font-size="12">{escape(label)}</text>')

    parts.append("</svg>")
    svg = "\n".join(parts) + "\n"
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return svg
