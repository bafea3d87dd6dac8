"""Eigenvalue clouds of simulated or sampled models."""

from dataclasses import dataclass, field

import numpy as np

from freebrown.errors import InvalidLawError
from freebrown.models.codec import complex_from_dict, complex_to_dict
from freebrown.models.laws import ModelParams


@dataclass(frozen=True, eq=False)
class EsdCloud:
    """n complex eigenvalues of one trial, tagged with the model that produced them."""

    n: int
    seed: int
    params: ModelParams
    eigenvalues: np.ndarray
    trial: int = 0
    source: str = "rmt"  # "rmt" for X_n = P_n + iQ_n, "exact" for the Brown sampler
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        values = np.asarray(self.eigenvalues, dtype=complex).reshape(-1)
        object.__setattr__(self, "eigenvalues", values)
        if self.n < 1:
            raise InvalidLawError(f"cloud size must be positive, got {self.n}")
        if len(values) != self.n:
            raise InvalidLawError(f"expected {self.n} eigenvalues, got {len(values)}")
        if not 0 <= self.seed < 2**64:
            raise InvalidLawError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    @property
    def stem(self) -> str:
        """File stem used for the CSV and its sidecar."""
        return f"{self.source}_trial{self.trial:03d}"

    def sidecar(self) -> dict:
        """Everything except the eigenvalues, for the JSON file next to the CSV."""
        return {
            "n": self.n,
            "seed": self.seed,
            "trial": self.trial,
            "source": self.source,
            "params": self.params.to_dict(),
            "metadata": self.metadata,
        }

    def to_dict(self) -> dict:
        data = self.sidecar()
        data["eigenvalues"] = [complex_to_dict(value) for value in self.eigenvalues]
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "EsdCloud":
        values = data.get("eigenvalues")
        if values is None:
            raise KeyError("eigenvalues")
        return cls.from_sidecar(data, np.array([complex_from_dict(v) for v in values], dtype=complex))

    @classmethod
    def from_sidecar(cls, data: dict, eigenvalues: np.ndarray) -> "EsdCloud":
        return cls(
            n=int(data["n"]),
            seed=int(data["seed"]),
            params=ModelParams.from_dict(data["params"]),
            eigenvalues=eigenvalues,
            trial=int(data.get("trial", 0)),
            source=data.get("source", "rmt"),
            metadata=dict(data.get("metadata", {})),
        )
