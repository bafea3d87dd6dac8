"""Closed-form transforms of pqp for free projections p, q of traces a and b."""

import numpy as np

from freebrown.errors import DomainError
from freebrown.transforms._checks import check_off_interval, check_off_ray, check_pole
from freebrown.transforms.fpoly import FPoly, sqrt_f


def chi_pqp(a: float, b: float, w):
    """chi(w) = w (1 + w) / ((w + a)(w + b))."""
    check_pole(w, -a, "chi_pqp")
    check_pole(w, -b, "chi_pqp")
    return w * (1 + w) / ((w + a) * (w + b))


def s_pqp(a: float, b: float, w):
    """S(w) = (w + 1)^2 / ((w + a)(w + b)), the product of the two projection S-transforms."""
    check_pole(w, -a, "s_pqp")
    check_pole(w, -b, "s_pqp")
    return (w + 1) ** 2 / ((w + a) * (w + b))


def _psi_closed_form(trace_sum: float, fp: FPoly, z):
    check_off_ray(z, 1.0, "psi_pqp")
    return (1 - trace_sum * z - sqrt_f(fp, z)) / (2 * (z - 1))


def psi_pqp(a: float, b: float, z):
    """psi(z) = (1 - (a + b) z - sqrt f(z)) / (2 (z - 1)); analytic off [1, inf)."""
    return _psi_closed_form(a + b, FPoly(a, b), z)


def psi_complement(a: float, b: float, z):
    """psi of (1 - p)(1 - q)(1 - p): the pqp formula with 2 - a - b in place of a + b."""
    return _psi_closed_form(2 - a - b, FPoly(a, b), z)


def g_pqp(a: float, b: float, z):
    """G(z) = (z + a + b - 2 + z sqrt f(1/z)) / (2 z (z - 1)); defined off [0, 1]."""
    check_pole(z, 0.0, "g_pqp")
    check_off_interval(z, 0.0, 1.0, "g_pqp")
    fp = FPoly(a, b)
    return (z + a + b - 2 + z * sqrt_f(fp, 1 / np.asarray(z, dtype=complex))) / (2 * z * (z - 1))


def g_nu_star(a: float, b: float, eps: float, z):
    """Stieltjes transform of the law of cos^2(theta) under nu.

    G(z) = sqrt f(1/z) / (eps (z - 1)) - (1 - eps) / (eps z) - (w00 + w11) / (eps z (z - 1)),
    where w00 + w11 = |a + b - 1| is the mass of the p^q and (1-p)^(1-q) atoms.
    """
    if not eps > 0.0:
        raise DomainError(f"continuous weight must be positive, got {eps}")
    check_pole(z, 0.0, "g_nu_star")
    check_off_interval(z, 0.0, 1.0, "g_nu_star")
    fp = FPoly(a, b)
    corner = abs(a + b - 1)
    root = sqrt_f(fp, 1 / np.asarray(z, dtype=complex))
    return root / (eps * (z - 1)) - (1 - eps) / (eps * z) - corner / (eps * z * (z - 1))
