"""The angular measure nu of the continuous part, tabulated for CDF and quantile lookups."""

import logging
import math
from typing import Literal, Optional

import numpy as np
import pandas as pd
from scipy import integrate
from scipy.interpolate import PchipInterpolator

from freebrown.brown.weights import check_traces, is_tie, weights
from freebrown.config import get_settings
from freebrown.errors import DomainError
from freebrown.transforms.fpoly import FPoly

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2

# Rows of the table kept in JSON previews.
PREVIEW_ROWS = 65


def nu_support(a: float, b: float) -> tuple[float, float]:
    """Interval [theta_lo, theta_hi] outside which the density of nu vanishes.

    cos^2(theta) runs over [t_lo, t_hi], the interval where t^2 + c1 t + c2 <= 0.
    """
    check_traces(a, b)
    fp = FPoly(a, b)
    t_lo, _ = fp.t_roots()
    theta_lo = math.asin(math.sqrt(min(1.0, fp.one_minus_t_hi())))
    theta_hi = math.acos(math.sqrt(t_lo))
    return theta_lo, theta_hi


def boundary_density(a: float, b: float, end: Literal["zero", "right_angle"]) -> float:
    """Limit of the density at theta -> 0 (end="zero") or theta -> pi/2 (end="right_angle").

    The limit is 4 sqrt(a(1 - a)) / (pi eps) when a + b = 1 (at 0) or a = b
    (at pi/2), and 0 otherwise.
    """
    check_traces(a, b)
    if end == "zero":
        touches = is_tie(a + b - 1)
    elif end == "right_angle":
        touches = is_tie(a - b)
    else:
        raise DomainError(f"unknown end {end!r}")
    if not touches:
        return 0.0
    return 4 * math.sqrt(a * (1 - a)) / (math.pi * weights(a, b).w_cont)


class _DensityKernel:
    """Constants of the nu density for fixed (a, b)."""

    def __init__(self, a: float, b: float):
        check_traces(a, b)
        fp = FPoly(a, b)
        self.t_lo, _ = fp.t_roots()
        self.gap_hi = fp.one_minus_t_hi()
        self.scale = 2 / (math.pi * weights(a, b).w_cont)
        self.at_zero = boundary_density(a, b, "zero")
        self.at_right_angle = boundary_density(a, b, "right_angle")

    def scalar(self, theta: float) -> float:
        if theta == 0.0:
            return self.at_zero
        if theta == HALF_PI:
            return self.at_right_angle
        sin, cos = math.sin(theta), math.cos(theta)
        inner = (cos * cos - self.t_lo) * (sin * sin - self.gap_hi)
        if inner <= 0.0:
            return 0.0
        return self.scale * math.sqrt(inner) / (sin * cos)

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        if np.any(theta < 0.0) or np.any(theta > HALF_PI) or np.any(np.isnan(theta)):
            raise DomainError("theta must lie in [0, pi/2]")
        if theta.ndim == 0:
            return self.scalar(float(theta))
        sin, cos = np.sin(theta), np.cos(theta)
        inner = (cos * cos - self.t_lo) * (sin * sin - self.gap_hi)
        with np.errstate(divide="ignore", invalid="ignore"):
            value = self.scale * np.sqrt(np.maximum(inner, 0.0)) / (sin * cos)
        value = np.where(theta == 0.0, self.at_zero, value)
        return np.where(theta == HALF_PI, self.at_right_angle, value)


def nu_density(a: float, b: float, theta):
    """Density of nu on [0, pi/2]: (2 / (pi eps)) Im sqrt(f(sec^2 theta)) cot(theta).

    Evaluated as (2 / (pi eps)) sqrt((cos^2 - t_lo)(t_hi - cos^2)) / (sin cos),
    which stays accurate next to the band edges. Accepts arrays.
    """
    return _DensityKernel(a, b)(theta)


class NuDensity:
    """Tabulated nu: analytic density plus CDF and quantile interpolants.

    The table lives on a cosine-clustered grid over the support so that the
    square-root behaviour at band edges is resolved.
    """

    def __init__(
        self,
        a: float,
        b: float,
        eps: float,
        grid_points: int,
        theta: np.ndarray,
        density: np.ndarray,
        cdf: np.ndarray,
        normalization: float,
    ):
        self.a = a
        self.b = b
        self.eps = eps
        self.grid_points = grid_points
        self.support = (float(theta[0]), float(theta[-1]))
        self.normalization = normalization
        self._theta = theta
        self._density = density
        self._cdf = cdf
        self._kernel = _DensityKernel(a, b)
        self._cdf_interp = PchipInterpolator(theta, cdf)
        # Drop repeated CDF values so the inverse interpolant has strictly increasing nodes.
        levels, first = np.unique(cdf, return_index=True)
        self._quantile_interp = PchipInterpolator(levels, theta[first])

    @property
    def grid(self) -> pd.DataFrame:
        """The table as columns theta, density, cdf."""
        return pd.DataFrame({"theta": self._theta, "density": self._density, "cdf": self._cdf})

    def density(self, theta):
        """Analytic density; accepts arrays."""
        return self._kernel(theta)

    def cdf(self, theta):
        """nu([0, theta]); accepts arrays."""
        theta = np.asarray(theta, dtype=float)
        if np.any(theta < 0.0) or np.any(theta > HALF_PI) or np.any(np.isnan(theta)):
            raise DomainError("theta must lie in [0, pi/2]")
        lo, hi = self.support
        value = np.clip(self._cdf_interp(np.clip(theta, lo, hi)), 0.0, 1.0)
        return value[()] if value.ndim == 0 else value

    def quantile(self, u):
        """Inverse of cdf, refined by one guarded Newton step; accepts arrays."""
        u = np.asarray(u, dtype=float)
        if np.any(u < 0.0) or np.any(u > 1.0) or np.any(np.isnan(u)):
            raise DomainError("u must lie in [0, 1]")
        lo, hi = self.support
        theta = np.clip(self._quantile_interp(u), lo, hi)

        residual = self._cdf_interp(theta) - u
        slope = self.density(theta) / self.normalization
        with np.errstate(divide="ignore", invalid="ignore"):
            polished = np.clip(theta - residual / slope, lo, hi)
        better = (slope > 0) & (np.abs(self._cdf_interp(polished) - u) < np.abs(residual))
        theta = np.where(better, polished, theta)
        theta = np.where(u == 0.0, lo, np.where(u == 1.0, hi, theta))
        return theta[()] if theta.ndim == 0 else theta

    def moment(self, k: int) -> float:
        """Integral of cos^(2k)(theta) against nu."""
        settings = get_settings()
        lo, hi = self.support
        value, _ = integrate.quad(
            lambda t: math.cos(t) ** (2 * k) * self._kernel.scalar(t),
            lo,
            hi,
            epsabs=settings.quad_epsabs,
            epsrel=settings.quad_epsrel,
            limit=settings.quad_limit,
        )
        return value

    def to_dict(self) -> dict:
        """Parameters, support and a down-sampled preview; from_dict rebuilds the full table."""
        step = max(1, (len(self._theta) - 1) // (PREVIEW_ROWS - 1))
        rows = self.grid.iloc[::step]
        return {
            "a": self.a,
            "b": self.b,
            "eps": self.eps,
            "grid_points": self.grid_points,
            "support": list(self.support),
            "preview": rows.to_dict(orient="list"),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NuDensity":
        return build_nu(float(data["a"]), float(data["b"]), grid_points=int(data["grid_points"]))


def build_nu(a: float, b: float, grid_points: Optional[int] = None) -> NuDensity:
    """Tabulate nu on its support with a cumulative Simpson rule.

    The grid is theta(s) = lo + (hi - lo)(1 - cos(pi s))/2 for uniform s,
    and the CDF is integrated in s, where the integrand is smooth.
    """
    check_traces(a, b)
    if grid_points is None:
        grid_points = get_settings().nu_grid_points
    if grid_points < 3:
        raise DomainError(f"nu table needs at least 3 points, got {grid_points}")

    lo, hi = nu_support(a, b)
    s = np.linspace(0.0, 1.0, grid_points)
    theta = lo + (hi - lo) * (1 - np.cos(np.pi * s)) / 2
    theta[0], theta[-1] = lo, hi
    dtheta_ds = (hi - lo) * (np.pi / 2) * np.sin(np.pi * s)

    density = nu_density(a, b, theta)
    cumulative = integrate.cumulative_simpson(density * dtheta_ds, x=s, initial=0.0)
    normalization = float(cumulative[-1])
    cdf = np.maximum.accumulate(np.clip(cumulative / normalization, 0.0, 1.0))
    cdf[-1] = 1.0

    logger.debug(
        f"nu table for a={a}, b={b}: {grid_points} points on [{lo:.6f}, {hi:.6f}], "
        f"normalization {normalization:.12f}"
    )
    return NuDensity(
        a=a,
        b=b,
        eps=weights(a, b).w_cont,
        grid_points=grid_points,
        theta=theta,
        density=density,
        cdf=cdf,
        normalization=normalization,
    )
