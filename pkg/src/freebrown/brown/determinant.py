"""Fuglede-Kadison log-determinant of z - X and the distributional Laplacian check."""

import logging
import math
from typing import Optional

import numpy as np
from scipy import integrate

from freebrown.brown.lambdas import BranchIndex, LambdaBranch, hz_singular_values, lambda_at, log_pair_distance
from freebrown.brown.support import nearest_point
from freebrown.config import get_settings
from freebrown.errors import DomainError
from freebrown.models.descriptor import BrownDescriptor

logger = logging.getLogger(__name__)


def _quad(fn, lo: float, hi: float, points: Optional[list[float]] = None) -> float:
    settings = get_settings()
    inner = [p for p in (points or []) if lo < p < hi]
    value, _ = integrate.quad(
        fn,
        lo,
        hi,
        points=inner or None,
        epsabs=settings.quad_epsabs,
        epsrel=settings.quad_epsrel,
        limit=settings.quad_limit,
    )
    return value


def log_fk_determinant(desc: BrownDescriptor, z: complex) -> float:
    """log Delta(z - X).

    Sum of m log|z - corner| over charged corners plus
    eps * integral of (log|z - lambda_1| + log|z - lambda_2|)/2 dnu.
    Returns -inf at a charged corner.
    """
    z = complex(z)
    total = 0.0
    for atom in desc.charged_atoms():
        if z == atom.position:
            return -math.inf
        total += atom.mass * math.log(abs(z - atom.position))

    geometry = desc.geometry
    nu = desc.nu
    lo, hi = nu.support
    _, theta_star, distance = nearest_point(geometry, z)
    # The integrand has a log singularity where z meets the curve.
    points = [theta_star] if distance < 1e-3 * geometry.scale else None

    def integrand(theta: float) -> float:
        return 0.5 * log_pair_distance(geometry, z, theta) * float(nu.density(theta))

    total += desc.eps * _quad(integrand, lo, hi, points)
    return total


def _bump(s: np.ndarray) -> np.ndarray:
    inside = s < 1.0
    out = np.zeros_like(s)
    out[inside] = np.exp(-1.0 / (1.0 - s[inside]))
    return out


def _bump_laplacian(s: np.ndarray, radius: float) -> np.ndarray:
    """Laplacian of exp(-1/(1 - r^2/radius^2)) as (4/radius^2)(s phi'' + phi') in s = r^2/radius^2."""
    inside = s < 1.0
    out = np.zeros_like(s)
    si = s[inside]
    phi = np.exp(-1.0 / (1.0 - si))
    d1 = -phi / (1.0 - si) ** 2
    d2 = phi / (1.0 - si) ** 4 - 2 * phi / (1.0 - si) ** 3
    out[inside] = 4.0 / radius**2 * (si * d2 + d1)
    return out


def smoothed_mass(desc: BrownDescriptor, center: complex, radius: float) -> float:
    """Integral of the bump exp(-1/(1 - |z - center|^2/radius^2)) against the Brown measure."""
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")

    def phi(points) -> np.ndarray:
        return _bump(np.abs(np.asarray(points) - center) ** 2 / radius**2)

    total = sum(atom.mass * float(phi(atom.position)) for atom in desc.charged_atoms())
    first = LambdaBranch(BranchIndex.ONE, desc.geometry)
    second = LambdaBranch(BranchIndex.TWO, desc.geometry)

    def integrand(theta: float) -> float:
        pair = phi(np.array([lambda_at(first, theta), lambda_at(second, theta)]))
        return 0.5 * float(pair.sum()) * float(desc.nu.density(theta))

    lo, hi = desc.nu.support
    total += desc.eps * _quad(integrand, lo, hi)
    return total


def laplacian_mass(desc: BrownDescriptor, center: complex, radius: float, steps: int = 64) -> float:
    """(1/2pi) * integral of log Delta(z - X) times the Laplacian of the bump, on a midpoint grid.

    Equals smoothed_mass up to discretization error. The disc must not
    contain a charged atom.
    """
    center = complex(center)
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    for atom in desc.charged_atoms():
        if abs(atom.position - center) < radius:
            raise DomainError(f"atom at {atom.position} lies inside the bump")

    h = 2 * radius / steps
    offsets = -radius + (np.arange(steps) + 0.5) * h
    xs, ys = np.meshgrid(center.real + offsets, center.imag + offsets)
    zs = xs + 1j * ys
    weight = _bump_laplacian(np.abs(zs - center) ** 2 / radius**2, radius)

    total = 0.0
    for z, w in zip(zs.ravel(), weight.ravel()):
        if w != 0.0:
            total += log_fk_determinant(desc, z) * w
    logger.debug(f"laplacian mass on {steps}x{steps} grid around {center}: {total * h * h / (2 * math.pi):.6g}")
    return total * h * h / (2 * math.pi)


def hz_moments(desc: BrownDescriptor, z: complex, k: int) -> float:
    """k-th moment of the spectral measure of (z - X)^*(z - X)."""
    if k < 0:
        raise DomainError(f"moment order must be nonnegative, got {k}")
    total = sum(atom.mass * abs(z - atom.position) ** (2 * k) for atom in desc.charged_atoms())

    def integrand(theta: float) -> float:
        s1, s2 = hz_singular_values(desc.params, z, theta)
        return 0.5 * (s1 ** (2 * k) + s2 ** (2 * k)) * float(desc.nu.density(theta))

    lo, hi = desc.nu.support
    total += desc.eps * _quad(integrand, lo, hi)
    return total
