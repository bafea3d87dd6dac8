"""Full analytic description of a Brown measure."""

from dataclasses import dataclass
from typing import TYPE_CHECKING

from freebrown.errors import ParamsMismatchError
from freebrown.models.geometry import SupportGeometry
from freebrown.models.laws import ModelParams
from freebrown.models.weights import Atom, AtomWeights

if TYPE_CHECKING:
    from freebrown.brown.nu import NuDensity


@dataclass(frozen=True)
class BrownDescriptor:
    """Four corner atoms plus the continuous part w_cont * mu'.

    mu' is the average of the pushforwards of nu under the two lambda branches.
    """

    params: ModelParams
    geometry: SupportGeometry
    weights: AtomWeights
    atoms: tuple[Atom, ...]
    nu: "NuDensity"

    @property
    def eps(self) -> float:
        return self.weights.w_cont

    def charged_atoms(self) -> list[Atom]:
        """Atoms with positive mass."""
        return [atom for atom in self.atoms if atom.mass > 0.0]

    def total_mass(self) -> float:
        return sum(atom.mass for atom in self.atoms) + self.weights.w_cont

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "geometry": self.geometry.to_dict(),
            "weights": self.weights.to_dict(),
            "atoms": [atom.to_dict() for atom in self.atoms],
            "nu": self.nu.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BrownDescriptor":
        """Rebuild a descriptor from JSON; the nu table is recomputed from the parameters."""
        from freebrown.brown.measure import brown_measure

        params = ModelParams.from_dict(data["params"])
        grid_points = data.get("nu", {}).get("grid_points")
        desc = brown_measure(params, grid_points=grid_points)

        stored = AtomWeights.from_dict(data["weights"])
        if stored != desc.weights:
            raise ParamsMismatchError(
                "stored weights disagree with the parameters",
                expected=desc.weights.to_dict(),
                found=stored.to_dict(),
            )
        return desc
