"""Hyperbola and rectangle carrying the Brown measure of p + iq."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from freebrown.errors import InvalidLawError
from freebrown.models.codec import complex_from_dict, complex_to_dict
from freebrown.models.laws import ModelParams


class Orientation(str, Enum):
    """Which pair of rectangle sides the two hyperbola components join."""

    WIDE_OR_SQUARE = "wide_or_square"  # |A| >= |B|: left and right components
    TALL = "tall"  # |A| < |B|: bottom and top components


@dataclass(frozen=True)
class SupportGeometry:
    """Rectangle R spanned by the atoms of p and q, and the hyperbola H through its corners.

    H is (x - alpha)(x - alpha') = (y - beta)(y - beta'), equivalently
    x'^2 - A^2/4 = y'^2 - B^2/4 in coordinates centered at `center`.
    """

    center: complex
    gap_a: float
    gap_b: float
    orientation: Orientation
    alpha: float
    alpha_prime: float
    beta: float
    beta_prime: float

    def __post_init__(self):
        if self.gap_a == 0.0 or self.gap_b == 0.0:
            raise InvalidLawError("rectangle is degenerate: both gaps must be nonzero")
        expected = Orientation.WIDE_OR_SQUARE if abs(self.gap_a) >= abs(self.gap_b) else Orientation.TALL
        if self.orientation is not expected:
            raise InvalidLawError(f"orientation {self.orientation.value} inconsistent with gaps")

    @property
    def scale(self) -> float:
        """Largest side of the rectangle."""
        return max(abs(self.gap_a), abs(self.gap_b))

    def corners(self) -> tuple[complex, complex, complex, complex]:
        """Corners in the order alpha+i*beta, alpha+i*beta', alpha'+i*beta, alpha'+i*beta'."""
        return (
            complex(self.alpha, self.beta),
            complex(self.alpha, self.beta_prime),
            complex(self.alpha_prime, self.beta),
            complex(self.alpha_prime, self.beta_prime),
        )

    def hyperbola_residual(self, z):
        """(x - alpha)(x - alpha') - (y - beta)(y - beta'); zero on H."""
        z = np.asarray(z, dtype=complex)
        x, y = z.real, z.imag
        return (x - self.alpha) * (x - self.alpha_prime) - (y - self.beta) * (y - self.beta_prime)

    def centered_residual(self, z):
        """x'^2 - A^2/4 - y'^2 + B^2/4 with x' + iy' = z - center."""
        w = np.asarray(z, dtype=complex) - self.center
        return w.real**2 - self.gap_a**2 / 4 - w.imag**2 + self.gap_b**2 / 4

    def in_rectangle(self, z, tol: float = 0.0):
        z = np.asarray(z, dtype=complex)
        return (
            (z.real >= self.alpha - tol)
            & (z.real <= self.alpha_prime + tol)
            & (z.imag >= self.beta - tol)
            & (z.imag <= self.beta_prime + tol)
        )

    def to_dict(self) -> dict:
        return {
            "center": complex_to_dict(self.center),
            "gap_a": self.gap_a,
            "gap_b": self.gap_b,
            "orientation": self.orientation.value,
            "alpha": self.alpha,
            "alpha_prime": self.alpha_prime,
            "beta": self.beta,
            "beta_prime": self.beta_prime,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SupportGeometry":
        return cls(
            center=complex_from_dict(data["center"]),
            gap_a=float(data["gap_a"]),
            gap_b=float(data["gap_b"]),
            orientation=Orientation(data["orientation"]),
            alpha=float(data["alpha"]),
            alpha_prime=float(data["alpha_prime"]),
            beta=float(data["beta"]),
            beta_prime=float(data["beta_prime"]),
        )


def geometry(params: ModelParams) -> SupportGeometry:
    """Build the support geometry of X = p + iq.

    Raises NormalOperatorError when either law is a point mass.
    """
    params.require_non_degenerate()
    gap_a = params.alpha_prime - params.alpha
    gap_b = params.beta_prime - params.beta
    orientation = Orientation.WIDE_OR_SQUARE if abs(gap_a) >= abs(gap_b) else Orientation.TALL
    return SupportGeometry(
        center=complex((params.alpha + params.alpha_prime) / 2, (params.beta + params.beta_prime) / 2),
        gap_a=gap_a,
        gap_b=gap_b,
        orientation=orientation,
        alpha=params.alpha,
        alpha_prime=params.alpha_prime,
        beta=params.beta,
        beta_prime=params.beta_prime,
    )
