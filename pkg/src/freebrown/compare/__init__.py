"""Quantitative comparison of eigenvalue clouds with the analytic Brown measure."""

from freebrown.compare.checks import (
    ATOM,
    OUTLIER,
    AtomRow,
    Pullback,
    detect_atoms,
    empirical_component_masses,
    ks_statistic,
    pullback_frame,
    support_distances,
    theta_pullback,
)
from freebrown.compare.reconcile import check_params, full_report, reconcile
from freebrown.compare.report import ComparisonReport, ReportThresholds

__all__ = [
    "ATOM",
    "OUTLIER",
    "AtomRow",
    "ComparisonReport",
    "Pullback",
    "ReportThresholds",
    "check_params",
    "detect_atoms",
    "empirical_component_masses",
    "full_report",
    "ks_statistic",
    "pullback_frame",
    "reconcile",
    "support_distances",
    "theta_pullback",
]
