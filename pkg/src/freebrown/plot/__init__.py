"""Figure output."""

from freebrown.plot.svg import SvgCanvas, branch_polyline, render_svg, write_svg

__all__ = ["SvgCanvas", "branch_polyline", "render_svg", "write_svg"]
