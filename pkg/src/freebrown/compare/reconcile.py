"""Build comparison reports from clouds or from a fresh simulation."""

import logging
from typing import Optional, Sequence

import numpy as np

from freebrown.brown.measure import component_masses
from freebrown.compare.checks import (
    AtomRow,
    detect_atoms,
    empirical_component_masses,
    ks_statistic,
    theta_pullback,
)
from freebrown.compare.report import ComparisonReport, ReportThresholds
from freebrown.config import get_settings
from freebrown.errors import DomainError, ParamsMismatchError
from freebrown.models.cloud import EsdCloud
from freebrown.models.descriptor import BrownDescriptor
from freebrown.rmt.ensemble import EnsembleConfig
from freebrown.rmt.runner import run_trials

__all__ = ["AtomRow", "check_params", "full_report", "reconcile"]

logger = logging.getLogger(__name__)


def check_params(cloud_or_cfg, desc: BrownDescriptor) -> None:
    """Raise ParamsMismatchError unless both describe the same laws."""
    if not cloud_or_cfg.params.isclose(desc.params):
        raise ParamsMismatchError(
            "parameters of the simulation differ from those of the descriptor",
            expected=desc.params.to_dict(),
            found=cloud_or_cfg.params.to_dict(),
        )


def reconcile(
    clouds: Sequence[EsdCloud],
    desc: BrownDescriptor,
    atom_radius: Optional[float] = None,
    thresholds: Optional[ReportThresholds] = None,
) -> ComparisonReport:
    """Pool already computed clouds and compare them with the descriptor."""
    if not clouds:
        raise DomainError("no clouds to compare")
    for cloud in clouds:
        check_params(cloud, desc)
    if atom_radius is None:
        atom_radius = get_settings().atom_radius

    values = np.concatenate([cloud.eigenvalues for cloud in clouds])
    atoms = detect_atoms(values, desc, atom_radius)
    pullback = theta_pullback(values, desc, atom_radius)

    free = pullback.component >= 0
    distances = pullback.distance[free] if np.any(free) else np.zeros(1)
    ks = tuple(
        ks_statistic(thetas, desc.nu) if thetas.size else 1.0
        for thetas in pullback.thetas
    )
    analytic = component_masses(desc)
    empirical = empirical_component_masses(values, desc, atom_radius)

    source = clouds[0].source
    if thresholds is None:
        thresholds = ReportThresholds.control() if source == "exact" else ReportThresholds()

    report = ComparisonReport(
        atom_table=atoms,
        support_p99=float(np.percentile(distances, 99)),
        support_max=float(distances.max()),
        ks_by_component=ks,
        mass_by_component=((analytic[0], empirical[0]), (analytic[1], empirical[1])),
        n=clouds[0].n,
        seed=clouds[0].seed,
        trials=len(clouds),
        outliers=pullback.outliers,
        source=source,
        thresholds=thresholds,
    )
    logger.info(f"compared {values.size} eigenvalues from {len(clouds)} cloud(s): {len(report.failures())} failure(s)")
    return report


def full_report(
    cfg: EnsembleConfig,
    desc: BrownDescriptor,
    atom_radius: Optional[float] = None,
    max_workers: Optional[int] = None,
) -> ComparisonReport:
    """Simulate every trial of cfg and compare the pooled spectrum with desc."""
    check_params(cfg, desc)
    clouds = run_trials(cfg, max_workers=max_workers)
    return reconcile(clouds, desc, atom_radius=atom_radius)
