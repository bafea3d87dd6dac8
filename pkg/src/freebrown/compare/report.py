"""Aggregated comparison of simulated spectra with the analytic Brown measure."""

from dataclasses import dataclass, field

from freebrown.compare.checks import AtomRow


@dataclass(frozen=True)
class ReportThresholds:
    """Acceptance limits. These are engineering choices, not convergence rates."""

    atom_mass_tol: float = 0.01
    support_p99: float = 0.03
    ks: float = 0.05
    component_mass_tol: float = 0.03
    # Finite-n eigenvalues may stray from the curve; the limit scales with the pooled count.
    max_outlier_fraction: float = 1e-3

    @classmethod
    def control(cls) -> "ReportThresholds":
        """Limits for exact Brown samples: points sit on the curve, so only sampling noise remains."""
        return cls(support_p99=1e-8, max_outlier_fraction=0.0)

    def max_outliers(self, count: int) -> int:
        """Largest outlier count tolerated among `count` pooled eigenvalues."""
        return int(self.max_outlier_fraction * count)

    def to_dict(self) -> dict:
        return {
            "atom_mass_tol": self.atom_mass_tol,
            "support_p99": self.support_p99,
            "ks": self.ks,
            "component_mass_tol": self.component_mass_tol,
            "max_outlier_fraction": self.max_outlier_fraction,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReportThresholds":
        return cls(**data)


@dataclass
class ComparisonReport:
    """Atom table, support distances, per-component KS statistics and masses, pooled over trials."""

    atom_table: list[AtomRow]
    support_p99: float
    support_max: float
    ks_by_component: tuple[float, float]
    mass_by_component: tuple[tuple[float, float], tuple[float, float]]  # (analytic, empirical) per component
    n: int
    seed: int
    trials: int
    outliers: int = 0
    source: str = "rmt"
    thresholds: ReportThresholds = field(default_factory=ReportThresholds)

    thresholds_note = (
        "thresholds are engineering choices calibrated on the exact sampler; "
        "no convergence rate for the eigenvalue distribution is assumed"
    )

    def failures(self, thresholds: "ReportThresholds | None" = None) -> list[str]:
        """Human-readable list of failed checks (empty when everything passes)."""
        t = thresholds or self.thresholds
        failed = []
        for row in self.atom_table:
            if abs(row.empirical_mass - row.analytic_mass) > t.atom_mass_tol:
                failed.append(
                    f"atom at {row.corner}: empirical {row.empirical_mass:.4f} vs analytic {row.analytic_mass:.4f}"
                )
        if self.support_p99 > t.support_p99:
            failed.append(f"support p99 distance {self.support_p99:.3g} > {t.support_p99:g}")
        for index, ks in enumerate(self.ks_by_component):
            if ks > t.ks:
                failed.append(f"component {index + 1} KS {ks:.4f} > {t.ks:g}")
        for index, (analytic, empirical) in enumerate(self.mass_by_component):
            if abs(analytic - empirical) > t.component_mass_tol:
                failed.append(f"component {index + 1} mass {empirical:.4f} vs analytic {analytic:.4f}")
        allowed = t.max_outliers(self.n * self.trials)
        if self.outliers > allowed:
            failed.append(f"{self.outliers} outlier eigenvalue(s) > {allowed}")
        return failed

    @property
    def passed(self) -> bool:
        return not self.failures()

    def to_dict(self) -> dict:
        return {
            "atom_table": [row.to_dict() for row in self.atom_table],
            "support_p99": self.support_p99,
            "support_max": self.support_max,
            "ks_by_component": list(self.ks_by_component),
            "mass_by_component": [list(pair) for pair in self.mass_by_component],
            "n": self.n,
            "seed": self.seed,
            "trials": self.trials,
            "outliers": self.outliers,
            "source": self.source,
            "thresholds": self.thresholds.to_dict(),
            "thresholds_note": self.thresholds_note,
            "failures": self.failures(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ComparisonReport":
        first, second = data["mass_by_component"]
        return cls(
            atom_table=[AtomRow.from_dict(row) for row in data["atom_table"]],
            support_p99=float(data["support_p99"]),
            support_max=float(data["support_max"]),
            ks_by_component=tuple(float(v) for v in data["ks_by_component"]),
            mass_by_component=(tuple(map(float, first)), tuple(map(float, second))),
            n=int(data["n"]),
            seed=int(data["seed"]),
            trials=int(data["trials"]),
            outliers=int(data.get("outliers", 0)),
            source=data.get("source", "rmt"),
            thresholds=ReportThresholds.from_dict(data.get("thresholds", {})),
        )
