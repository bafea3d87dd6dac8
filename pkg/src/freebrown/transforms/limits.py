"""Boundary limits of Stieltjes transforms: atom masses, interval masses and Taylor coefficients."""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from freebrown.config import get_settings
from freebrown.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

# Powers of the approach height removed by Richardson extrapolation. Square-root
# band edges and inverse square-root endpoints produce the half-integer terms.
_RICHARDSON_POWERS = (0.5, 1.0, 1.5)


@dataclass(frozen=True)
class LimitEstimate:
    """An extrapolated limit with its estimated numerical error."""

    value: float
    error: float


def extract_atom_mass(
    g: Callable,
    s: float,
    k_min: int = 10,
    k_max: int = 40,
    tol: float = 1e-8,
) -> LimitEstimate:
    """Estimate mu({s}) = lim (z - s) G(z) along z_k = s + i 2^-k.

    Raises ConvergenceError when the extrapolated sequence has not settled
    to within `tol`.
    """
    heights = 2.0 ** -np.arange(k_min, k_max + 1)
    values = []
    for h in heights:
        z = complex(s, h)
        values.append(((z - s) * g(z)).real)
    table = np.array(values, dtype=float)
    if not np.all(np.isfinite(table)):
        raise ConvergenceError(f"non-finite values approaching {s}")

    # Dyadic heights: eliminating h^p combines neighbours with ratio 2^p.
    for power in _RICHARDSON_POWERS:
        ratio = 2.0**power
        table = (ratio * table[1:] - table[:-1]) / (ratio - 1)

    error = float(np.max(np.abs(np.diff(table[-4:]))))
    if error > tol:
        raise ConvergenceError(f"atom mass at {s} did not converge (spread {error:.3g} > {tol:g})")
    return LimitEstimate(value=float(table[-1]), error=error)


def atom_mass_at(g: Callable, s: float, tol: float = 1e-8) -> float:
    """Mass of the atom at real point s of the measure whose Stieltjes transform is g, clamped to [0, 1]."""
    estimate = extract_atom_mass(g, s, tol=tol)
    logger.debug(f"atom mass at {s}: {estimate.value:.3e} (error {estimate.error:.1e})")
    return min(1.0, max(0.0, estimate.value))


def taylor_coefficients(
    fn: Callable,
    order: int,
    radius: float = 0.5,
    samples: int = 64,
) -> np.ndarray:
    """Coefficients c_0..c_order of fn at 0 from a discrete Cauchy integral on |z| = radius.

    fn must accept a numpy array and be analytic on a disc slightly larger
    than `radius`.
    """
    if order >= samples:
        raise DomainError(f"order {order} needs more than {samples} samples")
    nodes = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
    coefficients = np.fft.fft(fn(nodes)) / samples
    return coefficients[: order + 1] / radius ** np.arange(order + 1)


def interval_mass(
    g: Callable,
    lo: float,
    hi: float,
    height: float = 1e-7,
    epsabs: Optional[float] = None,
    limit: Optional[int] = None,
) -> float:
    """mu((lo, hi)) + mu({lo})/2 + mu({hi})/2, as -(1/pi) * integral of Im G(x + i*height) over [lo, hi]."""
    if not hi > lo:
        raise DomainError(f"empty interval [{lo}, {hi}]")
    settings = get_settings()
    value, abserr = integrate.quad(
        lambda x: g(complex(x, height)).imag,
        lo,
        hi,
        epsabs=settings.quad_epsabs if epsabs is None else epsabs,
        limit=settings.quad_limit if limit is None else limit,
    )
    logger.debug(f"interval mass on [{lo}, {hi}]: quadrature error {abserr:.1e}")
    return -value / np.pi
