"""Reconciliation checks between an eigenvalue cloud and the analytic Brown measure."""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np
import pandas as pd
from scipy import stats

from freebrown.brown.nu import NuDensity
from freebrown.brown.support import nearest_points
from freebrown.errors import DomainError
from freebrown.models.codec import complex_from_dict, complex_to_dict
from freebrown.models.cloud import EsdCloud
from freebrown.models.descriptor import BrownDescriptor
from freebrown.models.geometry import Orientation

logger = logging.getLogger(__name__)

# Pullback component labels.
ATOM = -1
OUTLIER = 2

CloudLike = Union[EsdCloud, np.ndarray, list]


def _values(cloud: CloudLike) -> np.ndarray:
    if isinstance(cloud, EsdCloud):
        return cloud.eigenvalues
    return np.asarray(cloud, dtype=complex).reshape(-1)


@dataclass(frozen=True)
class AtomRow:
    """Analytic and empirical mass at one rectangle corner."""

    corner: complex
    analytic_mass: float
    empirical_mass: float
    radius: float

    def to_dict(self) -> dict:
        return {
            "corner": complex_to_dict(self.corner),
            "analytic_mass": self.analytic_mass,
            "empirical_mass": self.empirical_mass,
            "radius": self.radius,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AtomRow":
        return cls(
            corner=complex_from_dict(data["corner"]),
            analytic_mass=float(data["analytic_mass"]),
            empirical_mass=float(data["empirical_mass"]),
            radius=float(data["radius"]),
        )


def _check_radius(desc: BrownDescriptor, radius: float) -> None:
    if radius < 0:
        raise DomainError(f"atom radius must be nonnegative, got {radius}")
    limit = min(abs(desc.geometry.gap_a), abs(desc.geometry.gap_b)) / 2
    if radius >= limit:
        raise DomainError(f"atom radius {radius} makes corner balls overlap (must be < {limit})")


def _atom_mask(values: np.ndarray, desc: BrownDescriptor, radius: float) -> np.ndarray:
    """Index of the corner each value sits on (within radius), or -1."""
    corners = np.array(desc.geometry.corners())
    owner = np.full(values.size, -1)
    for index, corner in enumerate(corners):
        owner[np.abs(values - corner) <= radius] = index
    return owner


def detect_atoms(cloud: CloudLike, desc: BrownDescriptor, radius: float) -> list[AtomRow]:
    """Fraction of the cloud within `radius` of each corner, in corner order."""
    _check_radius(desc, radius)
    values = _values(cloud)
    owner = _atom_mask(values, desc, radius)
    rows = []
    for index, atom in enumerate(desc.atoms):
        hits = int(np.count_nonzero(owner == index))
        empirical = hits / values.size if values.size else 0.0
        rows.append(AtomRow(corner=atom.position, analytic_mass=atom.mass, empirical_mass=empirical, radius=radius))
    return rows


@dataclass(frozen=True)
class Pullback:
    """Eigenvalues mapped back to the angle of their nearest support point.

    `component` is ATOM (-1) for corner atoms, 0 or 1 for the two branches
    and OUTLIER (2) for points too far from the curve.
    """

    thetas: tuple[np.ndarray, np.ndarray]
    component: np.ndarray
    theta: np.ndarray
    distance: np.ndarray
    outlier_threshold: float

    @property
    def outliers(self) -> int:
        return int(np.count_nonzero(self.component == OUTLIER))


def theta_pullback(cloud: CloudLike, desc: BrownDescriptor, atom_radius: float) -> Pullback:
    """Assign each non-atom eigenvalue to its nearest branch and recover its angle."""
    _check_radius(desc, atom_radius)
    values = _values(cloud)
    owner = _atom_mask(values, desc, atom_radius)
    nearest = nearest_points(desc.geometry, values)

    free = owner < 0
    distances = nearest.distance
    if np.any(free):
        p99 = float(np.percentile(distances[free], 99))
    else:
        p99 = 0.0
    threshold = max(10 * p99, 1e-8 * desc.geometry.scale)

    component = np.where(free, nearest.branch - 1, ATOM)
    component = np.where(free & (distances > threshold), OUTLIER, component)
    thetas = (nearest.theta[component == 0], nearest.theta[component == 1])
    logger.debug(
        f"pullback: {np.count_nonzero(~free)} atom, {thetas[0].size} + {thetas[1].size} branch, "
        f"{np.count_nonzero(component == OUTLIER)} outlier eigenvalues"
    )
    return Pullback(
        thetas=thetas,
        component=component,
        theta=nearest.theta,
        distance=distances,
        outlier_threshold=threshold,
    )


def ks_statistic(thetas, nu: NuDensity) -> float:
    """Kolmogorov-Smirnov distance between the empirical law of `thetas` and nu."""
    thetas = np.asarray(thetas, dtype=float).reshape(-1)
    if thetas.size == 0:
        raise DomainError("KS statistic needs at least one sample")
    return float(stats.kstest(thetas, nu.cdf).statistic)


def support_distances(cloud: CloudLike, desc: BrownDescriptor) -> np.ndarray:
    return nearest_points(desc.geometry, _values(cloud)).distance


def empirical_component_masses(cloud: CloudLike, desc: BrownDescriptor, atom_radius: float) -> tuple[float, float]:
    """Fractions of the cloud on the (left, right) or (bottom, top) components, atoms included."""
    values = _values(cloud)
    if values.size == 0:
        return 0.0, 0.0
    pullback = theta_pullback(values, desc, atom_radius)
    owner = _atom_mask(values, desc, atom_radius)
    if desc.geometry.orientation is Orientation.WIDE_OR_SQUARE:
        first_corners = (0, 1)  # x = alpha
    else:
        first_corners = (0, 2)  # y = beta
    on_first_atom = np.isin(owner, first_corners)
    on_second_atom = (owner >= 0) & ~on_first_atom
    first = np.count_nonzero(pullback.component == 0) + np.count_nonzero(on_first_atom)
    second = np.count_nonzero(pullback.component == 1) + np.count_nonzero(on_second_atom)
    return first / values.size, second / values.size


def pullback_frame(cloud: CloudLike, desc: BrownDescriptor, atom_radius: float) -> pd.DataFrame:
    """Per-eigenvalue table with columns re, im, component, theta, dist."""
    values = _values(cloud)
    pullback = theta_pullback(values, desc, atom_radius)
    return pd.DataFrame(
        {
            "re": values.real,
            "im": values.imag,
            "component": pullback.component,
            "theta": pullback.theta,
            "dist": pullback.distance,
        }
    )
