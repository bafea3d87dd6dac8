"""Argument checks shared by the transform kernels."""

import numpy as np

from freebrown.errors import DomainError, PoleError


def check_pole(z, pole: complex, name: str) -> None:
    """Raise PoleError when any entry of z equals `pole`."""
    if np.any(np.asarray(z) == pole):
        raise PoleError(f"{name} has a pole at {pole}")


def check_off_ray(z, start: float, name: str) -> None:
    """Raise DomainError when any entry of z lies on the real ray [start, inf)."""
    z = np.asarray(z, dtype=complex)
    if np.any((z.imag == 0.0) & (z.real >= start)):
        raise DomainError(f"{name} is not defined on the cut [{start}, inf)")


def check_off_interval(z, lo: float, hi: float, name: str) -> None:
    """Raise DomainError when any entry of z lies on the real segment [lo, hi]."""
    z = np.asarray(z, dtype=complex)
    if np.any((z.imag == 0.0) & (z.real >= lo) & (z.real <= hi)):
        raise DomainError(f"{name} is not defined on [{lo}, {hi}]")
