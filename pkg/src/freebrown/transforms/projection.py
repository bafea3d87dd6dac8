"""Transforms of two-atom laws and of single projections.

For a projection of trace a the moment generating function is
psi(z) = a z / (1 - z), its inverse chi(w) = w / (w + a) and the
S-transform S(w) = chi(w) (w + 1) / w = (w + 1) / (w + a).
"""

from typing import Callable

from freebrown.models.laws import TwoAtomLaw
from freebrown.transforms._checks import check_pole


def stieltjes_two_atom(law: TwoAtomLaw, z):
    """G(z) = a / (z - alpha) + (1 - a) / (z - alpha') for the law a*delta(alpha) + (1-a)*delta(alpha')."""
    total = 0.0
    for position, mass in law.atoms():
        check_pole(z, position, "Stieltjes transform")
        total = total + mass / (z - position)
    return total


def psi_two_atom(law: TwoAtomLaw, z):
    """Moment generating function sum_k m_k z^k = sum over atoms of m * t z / (1 - t z)."""
    total = 0.0
    for position, mass in law.atoms():
        if position != 0.0:
            check_pole(z, 1.0 / position, "psi transform")
        total = total + mass * position * z / (1 - position * z)
    return total


def psi_projection(trace: float, z):
    check_pole(z, 1.0, "psi of a projection")
    return trace * z / (1 - z)


def chi_projection(trace: float, w):
    """Inverse of psi_projection near 0."""
    check_pole(w, -trace, "chi of a projection")
    return w / (w + trace)


def s_projection(trace: float, w):
    check_pole(w, -trace, "S-transform of a projection")
    return (w + 1) / (w + trace)


def s_from_chi(chi_value, w):
    """S(w) = chi(w) (w + 1) / w."""
    check_pole(w, 0.0, "S-transform")
    return chi_value * (w + 1) / w


def g_from_psi(psi: Callable, z):
    """G(z) = (psi(1/z) + 1) / z."""
    check_pole(z, 0.0, "Stieltjes transform from psi")
    return (psi(1 / z) + 1) / z


def psi_from_g(g: Callable, z):
    """psi(z) = G(1/z) / z - 1."""
    check_pole(z, 0.0, "psi from Stieltjes transform")
    return g(1 / z) / z - 1
