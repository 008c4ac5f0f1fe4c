# encoding: utf-8
""" Drawings of one- and two-dimensional crease patterns.

Every crease is one line segment. Valleys are drawn solid and crests dashed,
in the colours of the style. In two dimensions the y axis points up; the
one-dimensional sheet is drawn as a row of ticks across a horizontal strip.
"""
from dataclasses import dataclass
from typing import List, Tuple

from ..creases import CreasePattern, Sign

__all__ = ["RenderStyle", "render_svg"]


@dataclass(frozen=True)
class RenderStyle:
    """How `render_svg` draws a pattern.

    Attributes
    ----------
    cell_size: float
        Side of a unit cell, in pixels.
    margin: float
        Blank space around the sheet, in pixels.
    stroke_width: float
    valley_stroke: str
        Colour of valleys.
    crest_stroke: str
        Colour of crests.
    crest_dash: str
        The `stroke-dasharray` of crests.
    """

    cell_size: float = 20.0
    margin: float = 10.0
    stroke_width: float = 2.0
    valley_stroke: str = "#1f4e9c"
    crest_stroke: str = "#c0392b"
    crest_dash: str = "4 3"

    def __post_init__(self) -> None:
        for name in ("cell_size", "margin", "stroke_width"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(
                    """The {} of a render style must be strictly positive, got
                    {}.""".format(
                        name.replace("_", " "), value
                    )
                )


def _number(value: float) -> str:
    return "{:.3f}".format(value).rstrip("0").rstrip(".")


def _segments(pattern: CreasePattern) -> List[Tuple[Tuple[float, float], Tuple[float, float], Sign]]:
    """Endpoints of every crease in sheet coordinates, in (axis, corner) order."""
    segments = []
    for face, sign in pattern.items():
        if pattern.d == 1:
            (x,) = face.corner
            segments.append(((x, -0.5), (x, 0.5), sign))
        elif face.axis == 1:
            x, y = face.corner
            segments.append(((x, y), (x, y + 1), sign))
        else:
            x, y = face.corner
            segments.append(((x, y), (x + 1, y), sign))
    return segments


def render_svg(pattern: CreasePattern, style: RenderStyle = RenderStyle()) -> str:
    """Draw `pattern` as an SVG document.

    The output only depends on the pattern and the style, so rendering the
    same pattern twice gives the same bytes.

    Raises
    ------
    ValueError
        If the pattern is more than two-dimensional.

    Examples
    --------
    >>> from paperfold.creases import build_S1
    >>> render_svg(build_S1(2)).count("<line")
    4
    """
    if pattern.d > 2:
        raise ValueError(
            """Only one- and two-dimensional patterns can be drawn, got a
            {}-dimensional one. Cut a two-dimensional slice first.""".format(
                pattern.d
            )
        )
    h = pattern.extent
    side = 2 * h * style.cell_size
    width = side + 2 * style.margin
    height = (side if pattern.d == 2 else style.cell_size) + 2 * style.margin
    top = h if pattern.d == 2 else 0.5

    def x_of(x: float) -> str:
        return _number(style.margin + (x + h) * style.cell_size)

    def y_of(y: float) -> str:
        return _number(style.margin + (top - y) * style.cell_size)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" '
        'viewBox="0 0 {0} {1}">'.format(_number(width), _number(height)),
        '  <rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#999999" '
        'stroke-width="1"/>'.format(
            _number(style.margin),
            _number(style.margin),
            _number(side),
            _number(height - 2 * style.margin),
        ),
    ]
    for (x1, y1), (x2, y2), sign in _segments(pattern):
        if sign is Sign.VALLEY:
            paint = 'stroke="{}"'.format(style.valley_stroke)
        else:
            paint = 'stroke="{}" stroke-dasharray="{}"'.format(
                style.crest_stroke, style.crest_dash
            )
        lines.append(
            '  <line x1="{}" y1="{}" x2="{}" y2="{}" {} stroke-width="{}"/>'.format(
                x_of(x1), y_of(y1), x_of(x2), y_of(y2), paint, _number(style.stroke_width)
            )
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
