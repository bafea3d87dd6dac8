"""Random matrix model X_n = P_n + iQ_n with Haar-rotated two-atom P_n, Q_n."""

from freebrown.rmt.ensemble import (
    EnsembleConfig,
    atom_count,
    esd,
    haar_unitary,
    model_matrices,
    rotated_pair,
    trial_rng,
)
from freebrown.rmt.io import read_cloud, read_clouds, write_cloud
from freebrown.rmt.runner import TrialRunner, run_trials

__all__ = [
    "EnsembleConfig",
    "TrialRunner",
    "atom_count",
    "esd",
    "haar_unitary",
    "model_matrices",
    "read_cloud",
    "read_clouds",
    "rotated_pair",
    "run_trials",
    "trial_rng",
    "write_cloud",
]
