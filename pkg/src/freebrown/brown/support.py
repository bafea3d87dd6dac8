"""Distance from points to the support curve H intersected with R."""

import math
from dataclasses import dataclass

import numpy as np

from freebrown.brown.lambdas import BranchIndex, half_offset
from freebrown.models.descriptor import BrownDescriptor
from freebrown.models.geometry import Orientation, SupportGeometry

GRID_POINTS = 256
_GOLDEN = (math.sqrt(5) - 1) / 2
_GOLDEN_STEPS = 64
_CHUNK = 4096


@dataclass(frozen=True)
class NearestPoints:
    """Closest point of H intersected with R for each query point."""

    branch: np.ndarray  # 1 or 2
    theta: np.ndarray
    distance: np.ndarray
    point: np.ndarray


def _branch_points(geometry: SupportGeometry, theta: np.ndarray, sign: np.ndarray) -> np.ndarray:
    return geometry.center + sign * half_offset(geometry, theta)


def _nearest_chunk(geometry: SupportGeometry, z: np.ndarray) -> tuple[np.ndarray, ...]:
    grid = np.linspace(0.0, math.pi / 2, GRID_POINTS)
    offsets = half_offset(geometry, grid)
    curves = np.stack([geometry.center - offsets, geometry.center + offsets])  # (2, GRID_POINTS)

    sq = np.abs(z[:, None, None] - curves[None, :, :]) ** 2
    flat = sq.reshape(len(z), -1).argmin(axis=1)
    branch_idx, grid_idx = np.divmod(flat, GRID_POINTS)
    sign = np.where(branch_idx == 0, -1.0, 1.0)

    lo = grid[np.maximum(grid_idx - 1, 0)]
    hi = grid[np.minimum(grid_idx + 1, GRID_POINTS - 1)]

    def objective(theta):
        return np.abs(z - _branch_points(geometry, theta, sign)) ** 2

    # Vectorized golden-section search inside the bracketing grid cells.
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = objective(x1), objective(x2)
    for _ in range(_GOLDEN_STEPS):
        left = f1 < f2
        hi = np.where(left, x2, hi)
        lo = np.where(left, lo, x1)
        x1_new = np.where(left, hi - _GOLDEN * (hi - lo), x2)
        x2_new = np.where(left, x1, lo + _GOLDEN * (hi - lo))
        f1_new = np.where(left, objective(x1_new), f2)
        f2_new = np.where(left, f1, objective(x2_new))
        x1, x2, f1, f2 = x1_new, x2_new, f1_new, f2_new
    theta = np.clip((lo + hi) / 2, 0.0, math.pi / 2)

    # Grid endpoints are the rectangle corners; keep them when they win.
    grid_best = grid[grid_idx]
    use_grid = objective(grid_best) < objective(theta)
    theta = np.where(use_grid, grid_best, theta)
    point = _branch_points(geometry, theta, sign)
    distance = np.abs(z - point)

    corners = np.array(geometry.corners())
    corner_branch = _corner_branches(geometry)
    corner_theta = np.array([0.0, math.pi / 2, math.pi / 2, 0.0])
    corner_dist = np.abs(z[:, None] - corners[None, :])
    best_corner = corner_dist.argmin(axis=1)
    closer = corner_dist[np.arange(len(z)), best_corner] <= distance

    branch = np.where(closer, corner_branch[best_corner], branch_idx + 1)
    theta = np.where(closer, corner_theta[best_corner], theta)
    point = np.where(closer, corners[best_corner], point)
    distance = np.where(closer, corner_dist[np.arange(len(z)), best_corner], distance)
    return branch, theta, distance, point


def _corner_branches(geometry: SupportGeometry) -> np.ndarray:
    """Branch through each corner, in corner order."""
    if geometry.orientation is Orientation.WIDE_OR_SQUARE:
        # lambda_1 joins the left corners, lambda_2 the right ones.
        return np.array([1, 1, 2, 2])
    # lambda_1 joins the bottom corners, lambda_2 the top ones.
    return np.array([1, 2, 1, 2])


def nearest_points(geometry: SupportGeometry, z) -> NearestPoints:
    """Branch, angle, distance and location of the closest point of the support curve."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    parts = [_nearest_chunk(geometry, z[i : i + _CHUNK]) for i in range(0, len(z), _CHUNK)]
    if not parts:
        empty = np.array([], dtype=float)
        return NearestPoints(np.array([], dtype=int), empty, empty, np.array([], dtype=complex))
    branch, theta, distance, point = (np.concatenate(column) for column in zip(*parts))
    return NearestPoints(branch=branch.astype(int), theta=theta, distance=distance, point=point)


def nearest_point(geometry: SupportGeometry, z: complex) -> tuple[BranchIndex, float, float]:
    """(branch, theta, distance) of the closest point of H intersected with R to z."""
    found = nearest_points(geometry, [z])
    return BranchIndex(int(found.branch[0])), float(found.theta[0]), float(found.distance[0])


def distance_to_support(desc: BrownDescriptor, z) -> float:
    return nearest_point(desc.geometry, z)[2]


def in_support(desc: BrownDescriptor, z: complex, tol: float) -> bool:
    """True iff z lies within tol of H intersected with R."""
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    return distance_to_support(desc, z) <= tol
