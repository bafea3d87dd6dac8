"""Haar-rotated two-atom Hermitian matrices and the spectrum of P + iQ."""

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from freebrown.errors import EigensolverError, InvalidLawError
from freebrown.models.cloud import EsdCloud
from freebrown.models.laws import ModelParams, TwoAtomLaw

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnsembleConfig:
    """Matrix size, model, base seed and number of trials of a simulation."""

    n: int
    params: ModelParams
    seed: int
    trials: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise InvalidLawError(f"matrix size must be at least 2, got {self.n}")
        if self.trials < 1:
            raise InvalidLawError(f"trials must be at least 1, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise InvalidLawError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    def to_dict(self) -> dict:
        return {"n": self.n, "params": self.params.to_dict(), "seed": self.seed, "trials": self.trials}

    @classmethod
    def from_dict(cls, data: dict) -> "EnsembleConfig":
        return cls(
            n=int(data["n"]),
            params=ModelParams.from_dict(data["params"]),
            seed=int(data["seed"]),
            trials=int(data.get("trials", 1)),
        )


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial, keyed by (seed, trial) rather than by execution order."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed n x n unitary: QR of a complex Ginibre matrix with R's diagonal made positive."""
    if n < 1:
        raise InvalidLawError(f"dimension must be positive, got {n}")
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = scipy.linalg.qr(z)
    diag = np.diagonal(r)
    phases = diag / np.abs(diag)
    return q * phases


def atom_count(n: int, weight: float) -> int:
    """Number of diagonal entries at the low atom: n * weight rounded half up."""
    return int(np.floor(n * weight + 0.5))


def diagonal(law: TwoAtomLaw, n: int) -> np.ndarray:
    count = atom_count(n, law.weight_low)
    return np.concatenate([np.full(count, law.pos_low), np.full(n - count, law.pos_high)])


def model_matrices(params: ModelParams, n: int, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """P = U D_p U^* and Q = V D_q V^*, symmetrized to be exactly Hermitian."""
    p = (u * diagonal(params.law_p, n)) @ u.conj().T
    q = (v * diagonal(params.law_q, n)) @ v.conj().T
    return (p + p.conj().T) / 2, (q + q.conj().T) / 2


def rotated_pair(cfg: EnsembleConfig, trial: int) -> tuple[np.ndarray, np.ndarray]:
    rng = trial_rng(cfg.seed, trial)
    u = haar_unitary(cfg.n, rng)
    v = haar_unitary(cfg.n, rng)
    return model_matrices(cfg.params, cfg.n, u, v)


def esd(cfg: EnsembleConfig, trial: int) -> EsdCloud:
    """Eigenvalues of P + iQ for one trial; deterministic in (cfg.seed, trial)."""
    p, q = rotated_pair(cfg, trial)
    try:
        eigenvalues = scipy.linalg.eigvals(p + 1j * q, check_finite=False)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        logger.warning(f"eigensolver failed on trial {trial}: {exc}")
        raise EigensolverError(str(exc), n=cfg.n, seed=cfg.seed, trial=trial) from exc

    count_p = atom_count(cfg.n, cfg.params.a)
    count_q = atom_count(cfg.n, cfg.params.b)
    metadata = {
        "rounding": "half_up",
        "atom_count_p": count_p,
        "atom_count_q": count_q,
        "realized_weight_p": count_p / cfg.n,
        "realized_weight_q": count_q / cfg.n,
    }
    return EsdCloud(
        n=cfg.n,
        seed=cfg.seed,
        params=cfg.params,
        eigenvalues=eigenvalues,
        trial=trial,
        source="rmt",
        metadata=metadata,
    )
