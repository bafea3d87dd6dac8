"""The quadratic f(z) = 1 + c1 z + c2 z^2 behind the pqp transforms, and its square root."""

import math
from dataclasses import dataclass

import numpy as np

from freebrown.errors import InvalidLawError


@dataclass(frozen=True)
class FPoly:
    """f(z) = 1 + (4ab - 2(a + b)) z + (a - b)^2 z^2 for traces a, b in (0, 1).

    f is invariant under (a, b) -> (1 - a, 1 - b) and f(1) = (a + b - 1)^2.
    Its roots lie in [1, inf); they are the reciprocals of the roots
    t_lo <= t_hi of g(t) = t^2 + c1 t + c2, which lie in [0, 1].
    """

    a: float
    b: float

    def __post_init__(self):
        for name, value in (("a", self.a), ("b", self.b)):
            if not 0.0 < value < 1.0:
                raise InvalidLawError(f"{name} must lie in (0, 1), got {value}")

    @property
    def c0(self) -> float:
        return 1.0

    @property
    def c1(self) -> float:
        return 4 * self.a * self.b - 2 * (self.a + self.b)

    @property
    def c2(self) -> float:
        return (self.a - self.b) ** 2

    @property
    def discriminant(self) -> float:
        """c1^2 - 4 c2, written in the form that is exact in sign."""
        return 16 * self.a * self.b * (1 - self.a) * (1 - self.b)

    def __call__(self, z):
        return 1 + self.c1 * z + self.c2 * z * z

    def t_roots(self) -> tuple[float, float]:
        """Roots (t_lo, t_hi) of t^2 + c1 t + c2, computed without cancellation."""
        t_hi = (-self.c1 + math.sqrt(self.discriminant)) / 2
        return self.c2 / t_hi, t_hi

    def one_minus_t_hi(self) -> float:
        """1 - t_hi from g(1) = (1 - t_lo)(1 - t_hi) = (a + b - 1)^2."""
        t_lo, _ = self.t_roots()
        return (self.a + self.b - 1) ** 2 / (1 - t_lo)

    def roots(self) -> tuple[float, float]:
        """Roots r1 <= r2 of f; r2 is inf when a = b and f is linear."""
        t_lo, t_hi = self.t_roots()
        r2 = math.inf if t_lo == 0.0 else 1 / t_lo
        return 1 / t_hi, r2


def sqrt_f(fp: FPoly, z):
    """Branch of sqrt(f) analytic off [r1, r2] (a subset of [1, inf)) with sqrt_f(0) = 1.

    For a != b this is -|a - b| sqrt(z - r1) sqrt(z - r2) with principal
    roots; for a = b it is the principal sqrt(1 + c1 z).
    """
    z = np.asarray(z, dtype=complex)
    if fp.c2 == 0.0:
        value = np.sqrt(1 + fp.c1 * z)
    else:
        r1, r2 = fp.roots()
        value = -abs(fp.a - fp.b) * np.sqrt(z - r1) * np.sqrt(z - r2)
    return value[()] if value.ndim == 0 else value
