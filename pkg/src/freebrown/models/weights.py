"""Corner atom weights and atoms of the Brown measure."""

import math
from dataclasses import dataclass

from freebrown.errors import InvalidLawError
from freebrown.models.codec import complex_from_dict, complex_to_dict

# Slack for the sum-to-one check; the weights are built from at most five roundings.
SUM_TOLERANCE = 4e-16


@dataclass(frozen=True)
class AtomWeights:
    """Masses of the four corner atoms (w00, w01, w10, w11) and of the continuous part."""

    w00: float
    w01: float
    w10: float
    w11: float
    w_cont: float

    def __post_init__(self):
        for name in ("w00", "w01", "w10", "w11"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InvalidLawError(f"{name} must lie in [0, 1], got {value}")
        if not 0.0 < self.w_cont <= 1.0:
            raise InvalidLawError(f"w_cont must lie in (0, 1], got {self.w_cont}")
        if self.w00 * self.w11 != 0.0 or self.w01 * self.w10 != 0.0:
            raise InvalidLawError("opposite corners cannot both carry mass")
        if not math.isclose(self.total, 1.0, rel_tol=0.0, abs_tol=SUM_TOLERANCE):
            raise InvalidLawError(f"weights must sum to 1, got {self.total!r}")

    @property
    def corner_masses(self) -> tuple[float, float, float, float]:
        return (self.w00, self.w01, self.w10, self.w11)

    @property
    def total(self) -> float:
        return math.fsum((*self.corner_masses, self.w_cont))

    def to_dict(self) -> dict:
        return {
            "w00": self.w00,
            "w01": self.w01,
            "w10": self.w10,
            "w11": self.w11,
            "w_cont": self.w_cont,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AtomWeights":
        return cls(**{key: float(data[key]) for key in ("w00", "w01", "w10", "w11", "w_cont")})


@dataclass(frozen=True)
class Atom:
    """A point mass of the Brown measure."""

    position: complex
    mass: float

    def to_dict(self) -> dict:
        return {"position": complex_to_dict(self.position), "mass": self.mass}

    @classmethod
    def from_dict(cls, data: dict) -> "Atom":
        return cls(position=complex_from_dict(data["position"]), mass=float(data["mass"]))
