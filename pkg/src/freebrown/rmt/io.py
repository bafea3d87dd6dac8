"""CSV and JSON sidecar storage of eigenvalue clouds."""

import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from freebrown.atomic import atomic_write_frame, atomic_write_json
from freebrown.models.cloud import EsdCloud

logger = logging.getLogger(__name__)


def write_cloud(cloud: EsdCloud, directory: Path) -> Path:
    """Write `<stem>.csv` (header re,im) and `<stem>.json`; returns the CSV path."""
    directory = Path(directory)
    csv_path = directory / f"{cloud.stem}.csv"
    frame = pd.DataFrame({"re": cloud.eigenvalues.real, "im": cloud.eigenvalues.imag})
    atomic_write_frame(csv_path, frame)
    atomic_write_json(csv_path.with_suffix(".json"), cloud.sidecar())
    logger.debug(f"wrote {cloud.n} eigenvalues to {csv_path}")
    return csv_path


def read_cloud(csv_path: Path) -> EsdCloud:
    csv_path = Path(csv_path)
    frame = pd.read_csv(csv_path, float_precision="round_trip")
    with open(csv_path.with_suffix(".json"), encoding="utf-8") as f:
        sidecar = json.load(f)
    eigenvalues = frame["re"].to_numpy(dtype=float) + 1j * frame["im"].to_numpy(dtype=float)
    return EsdCloud.from_sidecar(sidecar, np.asarray(eigenvalues, dtype=complex))


def read_clouds(directory: Path) -> list[EsdCloud]:
    """Every cloud in a directory (CSV files with a sidecar), ordered by trial."""
    paths = [path for path in sorted(Path(directory).glob("*.csv")) if path.with_suffix(".json").exists()]
    clouds = [read_cloud(path) for path in paths]
    return sorted(clouds, key=lambda cloud: (cloud.source, cloud.trial))
