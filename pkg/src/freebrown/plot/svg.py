"""SVG rendering of the support curve, corner atoms and an optional eigenvalue scatter."""

import logging
import math
from pathlib import Path
from typing import Optional

import numpy as np

from freebrown.atomic import atomic_write_text
from freebrown.brown.lambdas import BranchIndex, LambdaBranch, lambda_at
from freebrown.config import get_settings
from freebrown.models.descriptor import BrownDescriptor

logger = logging.getLogger(__name__)


class SvgCanvas:
    """Affine map from the complex plane onto an SVG viewport, y axis pointing up."""

    WIDTH = 640
    HEIGHT = 640
    MARGIN = 40

    def __init__(self, lo: complex, hi: complex):
        span_x = max(hi.real - lo.real, 1e-12)
        span_y = max(hi.imag - lo.imag, 1e-12)
        pad = 0.1 * max(span_x, span_y)
        self.x0, self.y0 = lo.real - pad, lo.imag - pad
        inner = min(self.WIDTH, self.HEIGHT) - 2 * self.MARGIN
        self.unit = inner / (max(span_x, span_y) + 2 * pad)

    def x(self, z) -> np.ndarray:
        return self.MARGIN + (np.real(z) - self.x0) * self.unit

    def y(self, z) -> np.ndarray:
        return self.HEIGHT - self.MARGIN - (np.imag(z) - self.y0) * self.unit

    def points(self, z: np.ndarray) -> str:
        return " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(self.x(z), self.y(z)))


DOCUMENT = """<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">
<title>{title}</title>
<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>
{body}
</svg>
"""

RECTANGLE = '<polygon class="rectangle" points="{points}" fill="none" stroke="#999999" stroke-dasharray="4 3" stroke-width="1"/>'
BRANCH = '<polyline class="branch" data-branch="{index}" points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>'
ATOM = '<circle class="atom" cx="{cx:.3f}" cy="{cy:.3f}" r="{r:.3f}" fill="#d62728" fill-opacity="0.8"><title>mass {mass:.6g}</title></circle>'
POINT = '<circle class="eigenvalue" cx="{cx:.3f}" cy="{cy:.3f}" r="1.2" fill="#1f77b4" fill-opacity="0.5"/>'

BRANCH_COLORS = {BranchIndex.ONE: "#2ca02c", BranchIndex.TWO: "#9467bd"}


def branch_polyline(desc: BrownDescriptor, index: BranchIndex, points: int) -> np.ndarray:
    """`points` samples of lambda_index over [0, pi/2]."""
    theta = np.linspace(0.0, math.pi / 2, points)
    return np.asarray(lambda_at(LambdaBranch(index, desc.geometry), theta), dtype=complex)


def render_svg(
    desc: BrownDescriptor,
    eigenvalues: Optional[np.ndarray] = None,
    points_per_branch: Optional[int] = None,
    title: str = "",
) -> str:
    """SVG document: rectangle outline, both branches, atoms sized by mass, then the scatter on top."""
    if points_per_branch is None:
        points_per_branch = get_settings().plot_points_per_branch
    g = desc.geometry
    canvas = SvgCanvas(complex(g.alpha, g.beta), complex(g.alpha_prime, g.beta_prime))

    body = [RECTANGLE.format(points=canvas.points(np.array(g.corners())[[0, 1, 3, 2]]))]
    for index in BranchIndex:
        curve = branch_polyline(desc, index, points_per_branch)
        body.append(BRANCH.format(index=int(index), points=canvas.points(curve), color=BRANCH_COLORS[index]))
    for atom in desc.charged_atoms():
        body.append(
            ATOM.format(
                cx=float(canvas.x(atom.position)),
                cy=float(canvas.y(atom.position)),
                r=3 + 12 * math.sqrt(atom.mass),
                mass=atom.mass,
            )
        )
    if eigenvalues is not None:
        values = np.asarray(eigenvalues, dtype=complex).reshape(-1)
        for x, y in zip(canvas.x(values), canvas.y(values)):
            body.append(POINT.format(cx=x, cy=y))

    if not title:
        p, q = desc.params.law_p, desc.params.law_q
        title = (
            f"p: {p.pos_low:g}/{p.pos_high:g} (weight {p.weight_low:g}), "
            f"q: {q.pos_low:g}/{q.pos_high:g} (weight {q.weight_low:g})"
        )
    return DOCUMENT.format(width=SvgCanvas.WIDTH, height=SvgCanvas.HEIGHT, title=title, body="\n".join(body))


def write_svg(
    path: Path,
    desc: BrownDescriptor,
    eigenvalues: Optional[np.ndarray] = None,
    points_per_branch: Optional[int] = None,
) -> Path:
    path = atomic_write_text(Path(path), render_svg(desc, eigenvalues, points_per_branch))
    logger.info(f"wrote plot to {path}")
    return path
