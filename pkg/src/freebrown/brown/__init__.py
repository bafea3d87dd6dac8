"""Analytic Brown measure of p + iq for free two-atom p and q."""

from freebrown.brown.determinant import hz_moments, laplacian_mass, log_fk_determinant, smoothed_mass
from freebrown.brown.lambdas import (
    BranchIndex,
    LambdaBranch,
    branches,
    hz_singular_values,
    lambda_at,
    two_by_two_model,
)
from freebrown.brown.measure import (
    brown_measure,
    component_masses,
    control_cloud,
    normal_spectral_measure,
    sample_brown,
    spectral_projection_traces,
)
from freebrown.brown.nu import NuDensity, boundary_density, build_nu, nu_density, nu_support
from freebrown.brown.recovery import recover_laws
from freebrown.brown.support import (
    NearestPoints,
    distance_to_support,
    in_support,
    nearest_point,
    nearest_points,
)
from freebrown.brown.weights import atom_census, weights

__all__ = [
    "BranchIndex",
    "LambdaBranch",
    "NearestPoints",
    "NuDensity",
    "atom_census",
    "boundary_density",
    "branches",
    "brown_measure",
    "build_nu",
    "component_masses",
    "control_cloud",
    "distance_to_support",
    "hz_moments",
    "hz_singular_values",
    "in_support",
    "lambda_at",
    "laplacian_mass",
    "log_fk_determinant",
    "nearest_point",
    "nearest_points",
    "normal_spectral_measure",
    "nu_density",
    "nu_support",
    "recover_laws",
    "sample_brown",
    "smoothed_mass",
    "spectral_projection_traces",
    "two_by_two_model",
    "weights",
]
