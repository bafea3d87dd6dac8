"""Corner atom weights of the Brown measure."""

import math

from freebrown.errors import NormalOperatorError
from freebrown.models.weights import AtomWeights

# Differences this small are treated as exact ties (a = b or a + b = 1).
TIE_TOLERANCE = 1e-14


def _positive_part(value: float) -> float:
    return value if value > TIE_TOLERANCE else 0.0


def check_traces(a: float, b: float) -> None:
    """Raise NormalOperatorError unless a and b lie strictly inside (0, 1)."""
    for name, value in (("a", a), ("b", b)):
        if not math.isfinite(value) or not 0.0 < value < 1.0:
            raise NormalOperatorError(f"{name} = {value} is outside (0, 1)")


def is_tie(value: float) -> bool:
    return abs(value) <= TIE_TOLERANCE


def weights(a: float, b: float) -> AtomWeights:
    """Masses at the corners alpha+i*beta, alpha+i*beta', alpha'+i*beta, alpha'+i*beta' and of the continuous part."""
    check_traces(a, b)
    w00 = _positive_part(a + b - 1)
    w01 = _positive_part(a - b)
    w10 = _positive_part(b - a)
    w11 = _positive_part(1 - a - b)
    w_cont = 1.0 - math.fsum((w00, w01, w10, w11))
    return AtomWeights(w00=w00, w01=w01, w10=w10, w11=w11, w_cont=w_cont)


def atom_census(atom_weights: AtomWeights) -> int:
    """Number of corners carrying mass: 0, 1 or 2."""
    return sum(1 for mass in atom_weights.corner_masses if mass > 0.0)
