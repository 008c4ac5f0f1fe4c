from .serialize import (
    dumps,
    loads,
    pattern_from_json,
    pattern_to_json,
    symbolic_from_json,
    symbolic_to_json,
)
from .svg import RenderStyle, render_svg

__all__ = [
    "RenderStyle",
    "dumps",
    "loads",
    "pattern_from_json",
    "pattern_to_json",
    "render_svg",
    "symbolic_from_json",
    "symbolic_to_json",
]
