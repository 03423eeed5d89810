"""Deterministic SVG rendering of inclusion regions.

Plain SVG 1.1 serialization: no graphics library, fixed number formatting,
fixed element order, so identical inputs give byte-identical documents.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .regions import InclusionRegion

# Fixed stroke palette, cycled per group.
GROUP_COLORS = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)

_EIG_COLOR = "#c2185b"
_SPECIAL_COLOR = "#000000"


def _fmt(x: float) -> str:
    if x == 0.0:
        return "0"
    return format(float(x), ".6g")


def render_region_svg(
    region: InclusionRegion,
    eigenvalues: Sequence[complex] | None = None,
    pixel_width: int = 720,
) -> str:
    """Render the region as a standalone SVG document string.

    Shows the unit circle for reference, each group's discs stroked in a
    per-group color, the special point as a plus marker, and (optionally)
    eigenvalues as X markers. The view box covers all geometry with a 10%
    margin; y grows upward in the complex plane, so plane coordinates are
    drawn with the imaginary axis negated.
    """
    xs = [-1.0, 1.0, region.special_point.real]
    ys = [-1.0, 1.0, region.special_point.imag]
    for group in region.groups:
        for disc in group.discs:
            xs += [disc.center.real - disc.radius, disc.center.real + disc.radius]
            ys += [disc.center.imag - disc.radius, disc.center.imag + disc.radius]
    eigs = [complex(z) for z in eigenvalues] if eigenvalues is not None else []
    for z in eigs:
        xs.append(z.real)
        ys.append(z.imag)
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1e-9)
    pad = 0.1 * span
    width = (max_x - min_x) + 2.0 * pad
    height = (max_y - min_y) + 2.0 * pad
    # SVG y axis points down; map plane (x, y) to svg (x, -y).
    view = (min_x - pad, -(max_y + pad), width, height)
    stroke = 0.004 * span
    marker = 0.018 * span

    lines: list[str] = []
    lines.append(
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="%s %s %s %s" '
        'width="%d" height="%d">'
        % (
            _fmt(view[0]),
            _fmt(view[1]),
            _fmt(view[2]),
            _fmt(view[3]),
            pixel_width,
            round(pixel_width * height / width),
        )
    )
    lines.append(
        '<rect x="%s" y="%s" width="%s" height="%s" fill="#ffffff"/>'
        % (_fmt(view[0]), _fmt(view[1]), _fmt(view[2]), _fmt(view[3]))
    )
    # Axes through the origin, then the reference unit circle.
    axis = '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#cccccc" stroke-width="%s"/>'
    lines.append(axis % (_fmt(view[0]), "0", _fmt(view[0] + width), "0", _fmt(stroke)))
    lines.append(axis % ("0", _fmt(view[1]), "0", _fmt(view[1] + height), _fmt(stroke)))
    lines.append(
        '<circle cx="0" cy="0" r="1" fill="none" stroke="#999999" '
        'stroke-width="%s" stroke-dasharray="%s %s"/>'
        % (_fmt(stroke), _fmt(4 * stroke), _fmt(4 * stroke))
    )
    for index, group in enumerate(region.groups, start=1):
        color = GROUP_COLORS[(index - 1) % len(GROUP_COLORS)]
        lines.append('<g fill="none" stroke="%s" stroke-width="%s">' % (color, _fmt(1.5 * stroke)))
        for disc, label in zip(group.discs, group.labels):
            lines.append(
                '<circle cx="%s" cy="%s" r="%s"><title>group %d, state %d</title></circle>'
                % (
                    _fmt(disc.center.real),
                    _fmt(-disc.center.imag),
                    _fmt(disc.radius),
                    index,
                    label,
                )
            )
        lines.append("</g>")
    sx, sy = region.special_point.real, -region.special_point.imag
    lines.append(
        '<path d="M %s %s L %s %s M %s %s L %s %s" stroke="%s" stroke-width="%s" class="special"/>'
        % (
            _fmt(sx - marker),
            _fmt(sy),
            _fmt(sx + marker),
            _fmt(sy),
            _fmt(sx),
            _fmt(sy - marker),
            _fmt(sx),
            _fmt(sy + marker),
            _SPECIAL_COLOR,
            _fmt(1.5 * stroke),
        )
    )
    for z in eigs:
        ex, ey = z.real, -z.imag
        lines.append(
            '<path d="M %s %s L %s %s M %s %s L %s %s" stroke="%s" stroke-width="%s" class="eig"/>'
            % (
                _fmt(ex - marker),
                _fmt(ey - marker),
                _fmt(ex + marker),
                _fmt(ey + marker),
                _fmt(ex - marker),
                _fmt(ey + marker),
                _fmt(ex + marker),
                _fmt(ey - marker),
                _EIG_COLOR,
                _fmt(1.5 * stroke),
            )
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
