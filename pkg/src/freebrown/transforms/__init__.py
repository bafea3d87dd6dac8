"""Free-probability transforms of projections, two-atom laws and pqp."""

from freebrown.transforms.fpoly import FPoly, sqrt_f
from freebrown.transforms.limits import (
    LimitEstimate,
    atom_mass_at,
    extract_atom_mass,
    interval_mass,
    taylor_coefficients,
)
from freebrown.transforms.pqp import chi_pqp, g_nu_star, g_pqp, psi_complement, psi_pqp, s_pqp
from freebrown.transforms.projection import (
    chi_projection,
    g_from_psi,
    psi_from_g,
    psi_projection,
    psi_two_atom,
    s_from_chi,
    s_projection,
    stieltjes_two_atom,
)

__all__ = [
    "FPoly",
    "LimitEstimate",
    "atom_mass_at",
    "chi_pqp",
    "chi_projection",
    "extract_atom_mass",
    "g_from_psi",
    "g_nu_star",
    "g_pqp",
    "interval_mass",
    "psi_complement",
    "psi_from_g",
    "psi_pqp",
    "psi_projection",
    "psi_two_atom",
    "s_from_chi",
    "s_pqp",
    "s_projection",
    "sqrt_f",
    "stieltjes_two_atom",
    "taylor_coefficients",
]
