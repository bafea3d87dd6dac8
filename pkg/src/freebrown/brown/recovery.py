"""Recovery of the two laws from samples of the Brown measure."""

import logging
from typing import Optional

import numpy as np
import pandas as pd

from freebrown.config import get_settings
from freebrown.errors import InvalidLawError, RecoveryError
from freebrown.models.laws import ModelParams, make_two_atom

logger = logging.getLogger(__name__)


def _find_atoms(samples: np.ndarray, radius: float, min_mass: float) -> pd.DataFrame:
    """Cells of side `radius` holding at least `min_mass` of the samples (and at least two).

    Returns one row per atom with its mean position x, y and its mass.
    """
    frame = pd.DataFrame(
        {
            "ix": np.round(samples.real / radius).astype(np.int64),
            "iy": np.round(samples.imag / radius).astype(np.int64),
            "x": samples.real,
            "y": samples.imag,
        }
    )
    counts = frame.value_counts(["ix", "iy"])
    threshold = max(2, int(np.ceil(min_mass * len(samples))))
    heavy = counts[counts >= threshold]
    if heavy.empty:
        return pd.DataFrame({column: pd.Series(dtype=float) for column in ("x", "y", "mass")})
    cells = frame.merge(heavy.rename("count").reset_index(), on=["ix", "iy"])
    atoms = cells.groupby(["ix", "iy"]).agg(x=("x", "mean"), y=("y", "mean"), count=("count", "first"))
    atoms["mass"] = atoms["count"] / len(samples)
    return atoms.reset_index().drop(columns="count")


def _recover_degenerate(atoms: pd.DataFrame, tol: float) -> ModelParams:
    """Atomic input: X is normal and one of p, q is constant."""
    xs = atoms["x"].to_numpy()
    ys = atoms["y"].to_numpy()
    masses = atoms["mass"].to_numpy() / atoms["mass"].sum()

    def law_from(values: np.ndarray):
        order = np.argsort(values)
        values, weights = values[order], masses[order]
        distinct = np.unique(np.round(values / tol))
        if len(distinct) > 2:
            raise RecoveryError("more than two atom positions along one axis")
        if len(distinct) == 1:
            return make_two_atom(values.mean(), values.mean(), 1.0)
        low = np.round(values / tol) == distinct[0]
        return make_two_atom(values[low].mean(), values[~low].mean(), weights[low].sum())

    same_y = np.ptp(ys) <= tol
    same_x = np.ptp(xs) <= tol
    if not (same_x or same_y):
        raise RecoveryError("atomic input whose atoms do not lie on a horizontal or vertical line")
    return ModelParams(law_p=law_from(xs), law_q=law_from(ys))


def recover_laws(
    samples,
    atom_radius: Optional[float] = None,
    min_atom_mass: float = 1e-3,
    fit_tol: float = 1e-6,
) -> ModelParams:
    """Reconstruct (law of p, law of q) from samples of the Brown measure of p + iq.

    Corners come from the atoms (or the extent of the curve when there are
    none), the center from a least-squares fit of the hyperbola
    x^2 - y^2 + Dx + Ey + F = 0, and the weights from the side masses:
    a = mass(x = alpha) and b = mass(y = beta), each side holding half of
    the continuous weight.
    """
    samples = np.asarray(samples, dtype=complex).reshape(-1)
    if samples.size == 0:
        raise RecoveryError("no samples")
    if atom_radius is None:
        atom_radius = get_settings().atom_radius

    atoms = _find_atoms(samples, atom_radius, min_atom_mass)
    in_atom = np.zeros(samples.size, dtype=bool)
    for x, y in zip(atoms["x"], atoms["y"]):
        in_atom |= np.abs(samples - complex(x, y)) <= atom_radius
    curve = samples[~in_atom]
    logger.info(f"recovering laws from {samples.size} samples: {len(atoms)} atom(s), {curve.size} curve points")

    if curve.size == 0:
        return _recover_degenerate(atoms, atom_radius)
    if curve.size < 3:
        raise RecoveryError("too few continuous samples to fit the hyperbola")

    x, y = curve.real, curve.imag
    design = np.column_stack([x, y, np.ones_like(x)])
    (d, e, f), *_ = np.linalg.lstsq(design, -(x * x - y * y), rcond=None)
    residual = np.abs(x * x - y * y + d * x + e * y + f)
    scale = max(np.ptp(x), np.ptp(y), 1e-300)
    if residual.max() > fit_tol * scale * scale:
        raise RecoveryError(f"samples do not lie on a hyperbola (residual {residual.max():.3g})")

    cx, cy = -d / 2, e / 2
    if len(atoms):
        half_a = float(np.abs(atoms["x"] - cx).mean())
        half_b = float(np.abs(atoms["y"] - cy).mean())
    else:
        half_a = float(np.abs(x - cx).max())
        half_b = float(np.abs(y - cy).max())

    alpha, alpha_prime = cx - half_a, cx + half_a
    beta, beta_prime = cy - half_b, cy + half_b

    eps = 1.0 - float(atoms["mass"].sum())
    side_tol = max(1e-9, 1e-6 * max(half_a, half_b))
    a = eps / 2 + float(atoms.loc[np.abs(atoms["x"] - alpha) <= side_tol, "mass"].sum())
    b = eps / 2 + float(atoms.loc[np.abs(atoms["y"] - beta) <= side_tol, "mass"].sum())

    try:
        return ModelParams(
            law_p=make_two_atom(alpha, alpha_prime, a),
            law_q=make_two_atom(beta, beta_prime, b),
        )
    except InvalidLawError as exc:
        raise RecoveryError(f"recovered laws are invalid: {exc}") from exc
