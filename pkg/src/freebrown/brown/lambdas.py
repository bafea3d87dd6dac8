"""Parameterization of the two hyperbola components by the angle theta."""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from freebrown.errors import DomainError
from freebrown.models.geometry import Orientation, SupportGeometry
from freebrown.models.laws import ModelParams


class BranchIndex(int, Enum):
    ONE = 1  # left (wide) or bottom (tall) component
    TWO = 2  # right (wide) or top (tall) component


@dataclass(frozen=True)
class LambdaBranch:
    index: BranchIndex
    geometry: SupportGeometry

    @property
    def sign(self) -> int:
        return -1 if self.index is BranchIndex.ONE else 1


def branches(geometry: SupportGeometry) -> tuple[LambdaBranch, LambdaBranch]:
    return LambdaBranch(BranchIndex.ONE, geometry), LambdaBranch(BranchIndex.TWO, geometry)


def _check_theta(theta) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    if np.any(theta < 0.0) or np.any(theta > math.pi / 2) or np.any(np.isnan(theta)):
        raise DomainError("theta must lie in [0, pi/2]")
    return theta


def half_offset(geometry: SupportGeometry, theta) -> np.ndarray:
    """Offset of branch TWO from the center; branch ONE is its negative."""
    a, b = geometry.gap_a, geometry.gap_b
    cos2 = np.cos(2 * np.asarray(theta, dtype=float))
    if geometry.orientation is Orientation.WIDE_OR_SQUARE:
        return 0.5 * np.sqrt(a * a - b * b + 2j * a * b * cos2)
    return 0.5j * np.sqrt(b * b - a * a - 2j * a * b * cos2)


def lambda_at(branch: LambdaBranch, theta):
    """lambda_1(theta) or lambda_2(theta) for theta in [0, pi/2]; accepts arrays."""
    theta = _check_theta(theta)
    value = branch.geometry.center + branch.sign * half_offset(branch.geometry, theta)
    return value[()] if value.ndim == 0 else value


def log_pair_distance(geometry: SupportGeometry, z: complex, theta: float) -> float:
    """log|z - lambda_1(theta)| + log|z - lambda_2(theta)| as log|(z - c)^2 - offset^2|."""
    w = z - geometry.center
    a, b = geometry.gap_a, geometry.gap_b
    square = (a * a - b * b + 2j * a * b * math.cos(2 * theta)) / 4
    return math.log(abs(w * w - square))


def two_by_two_model(params: ModelParams, theta: float) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian 2x2 realization: p = alpha + A R diag(1, 0) R^T and q = beta + B diag(1, 0)."""
    c, s = math.cos(theta), math.sin(theta)
    rotated = np.array([[c * c, c * s], [c * s, s * s]], dtype=complex)
    gap_a = params.alpha_prime - params.alpha
    gap_b = params.beta_prime - params.beta
    p_mat = params.alpha * np.eye(2, dtype=complex) + gap_a * rotated
    q_mat = params.beta * np.eye(2, dtype=complex) + gap_b * np.diag([1.0, 0.0]).astype(complex)
    return p_mat, q_mat


def hz_singular_values(params: ModelParams, z: complex, theta: float) -> tuple[float, float]:
    """Singular values s1 >= s2 of z - (p + iq) in the 2x2 model."""
    p_mat, q_mat = two_by_two_model(params, theta)
    s1, s2 = np.linalg.svd(z * np.eye(2) - (p_mat + 1j * q_mat), compute_uv=False)
    return float(s1), float(s2)
