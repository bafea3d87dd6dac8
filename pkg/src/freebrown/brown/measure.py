"""Assembly and sampling of the Brown measure of X = p + iq."""

import logging
from typing import Optional

import numpy as np

from freebrown.brown.lambdas import BranchIndex, LambdaBranch, lambda_at
from freebrown.brown.nu import build_nu
from freebrown.brown.weights import atom_census, weights
from freebrown.models.cloud import EsdCloud
from freebrown.models.descriptor import BrownDescriptor
from freebrown.models.geometry import Orientation, geometry
from freebrown.models.laws import ModelParams
from freebrown.models.weights import Atom

logger = logging.getLogger(__name__)


def brown_measure(params: ModelParams, grid_points: Optional[int] = None) -> BrownDescriptor:
    """Corner atoms (w00, w01, w10, w11) plus w_cont times the average of the two lambda pushforwards of nu.

    Raises NormalOperatorError for degenerate laws.
    """
    support = geometry(params)
    atom_weights = weights(params.a, params.b)
    atoms = tuple(
        Atom(position=corner, mass=mass)
        for corner, mass in zip(support.corners(), atom_weights.corner_masses)
    )
    nu = build_nu(params.a, params.b, grid_points=grid_points)
    logger.info(
        f"Brown measure for a={params.a}, b={params.b}: "
        f"{atom_census(atom_weights)} atom(s), continuous weight {atom_weights.w_cont:.6g}"
    )
    return BrownDescriptor(params=params, geometry=support, weights=atom_weights, atoms=atoms, nu=nu)


def component_masses(desc: BrownDescriptor) -> tuple[float, float]:
    """Mass of the (left, right) components when wide, (bottom, top) when tall, atoms included."""
    w = desc.weights
    half = w.w_cont / 2
    if desc.geometry.orientation is Orientation.WIDE_OR_SQUARE:
        return w.w00 + w.w01 + half, w.w10 + w.w11 + half
    return w.w00 + w.w10 + half, w.w01 + w.w11 + half


def spectral_projection_traces(desc: BrownDescriptor) -> dict[str, float]:
    """Traces of the spectral projections of p and q read back from the measure.

    Each side x = alpha, x = alpha', y = beta, y = beta' of the rectangle
    carries its two corner atoms plus half of the continuous weight.
    """
    w = desc.weights
    half = w.w_cont / 2
    return {
        "p_low": w.w00 + w.w01 + half,
        "p_high": w.w10 + w.w11 + half,
        "q_low": w.w00 + w.w10 + half,
        "q_high": w.w01 + w.w11 + half,
    }


def sample_brown(desc: BrownDescriptor, n: int, seed: int) -> np.ndarray:
    """n independent draws from the Brown measure, deterministic in `seed`."""
    if n < 1:
        raise ValueError(f"sample size must be positive, got {n}")
    rng = np.random.default_rng(seed)
    probabilities = np.array([*desc.weights.corner_masses, desc.weights.w_cont])
    kinds = rng.choice(5, size=n, p=probabilities / probabilities.sum())

    samples = np.empty(n, dtype=complex)
    for index, atom in enumerate(desc.atoms):
        samples[kinds == index] = atom.position

    continuous = np.flatnonzero(kinds == 4)
    theta = desc.nu.quantile(rng.random(continuous.size))
    on_first = rng.random(continuous.size) < 0.5
    first = LambdaBranch(BranchIndex.ONE, desc.geometry)
    second = LambdaBranch(BranchIndex.TWO, desc.geometry)
    samples[continuous] = np.where(on_first, lambda_at(first, theta), lambda_at(second, theta))
    return samples


def control_cloud(desc: BrownDescriptor, n: int, seed: int) -> EsdCloud:
    """Exact Brown samples packaged as a cloud, for the control arm of a comparison."""
    return EsdCloud(
        n=n,
        seed=seed,
        params=desc.params,
        eigenvalues=sample_brown(desc, n, seed),
        trial=0,
        source="exact",
    )


def normal_spectral_measure(params: ModelParams) -> list[Atom]:
    """Spectral measure of X when p or q is constant (X normal): products of the two laws' atoms."""
    atoms: dict[complex, float] = {}
    for x, mass_p in params.law_p.atoms():
        for y, mass_q in params.law_q.atoms():
            position = complex(x, y)
            atoms[position] = atoms.get(position, 0.0) + mass_p * mass_q
    return [Atom(position=position, mass=mass) for position, mass in atoms.items()]
