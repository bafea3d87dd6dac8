"""Typer CLI entry point."""

import json
import logging
import sys
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Optional

import numpy as np
import typer
from pydantic import BaseModel, ValidationError, field_validator
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from freebrown.atomic import atomic_write_frame, atomic_write_json
from freebrown.brown import (
    boundary_density,
    brown_measure,
    component_masses,
    control_cloud,
    normal_spectral_measure,
)
from freebrown.compare import check_params, pullback_frame, reconcile
from freebrown.compare.report import ComparisonReport
from freebrown.config import get_settings
from freebrown.errors import DomainError, InvalidLawError, NormalOperatorError, ParamsMismatchError
from freebrown.models import BrownDescriptor, ModelParams, get_preset, make_params
from freebrown.plot import write_svg
from freebrown.rmt import EnsembleConfig, read_clouds, run_trials, write_cloud

app = typer.Typer(
    name="freebrown",
    help="Brown measure of p + iq for free two-atom p, q, and its random matrix check",
    no_args_is_help=True,
)
console = Console()
logger = logging.getLogger(__name__)

EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_MISMATCH = 4


def parse_number(value: str) -> float:
    """Decimal or simple fraction ("4/5") to float."""
    try:
        return float(Fraction(value.strip()))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a decimal or fraction: {value!r}") from None


class LawOptions(BaseModel):
    """The six law flags as typed on the command line."""

    p_low: Optional[float] = None
    p_high: Optional[float] = None
    p_weight: Optional[float] = None
    q_low: Optional[float] = None
    q_high: Optional[float] = None
    q_weight: Optional[float] = None

    @field_validator("*", mode="before")
    @classmethod
    def _parse(cls, value):
        if isinstance(value, str):
            return parse_number(value)
        return value

    @classmethod
    def from_flags(cls, **flags: Optional[str]) -> "LawOptions":
        try:
            return cls(**flags)
        except ValidationError as exc:
            error = exc.errors()[0]
            flag = "--" + str(error["loc"][0]).replace("_", "-")
            raise InvalidLawError(f"{flag}: {error['msg']}") from None

    def to_params(self, preset: Optional[str] = None) -> ModelParams:
        """Flags on top of an optional preset; every flag must end up set."""
        values = self.model_dump()
        if preset is not None:
            try:
                base = get_preset(preset)
            except KeyError as exc:
                raise InvalidLawError(f"--preset: {exc.args[0]}") from None
            for name, default in zip(values, base.to_flat()):
                if values[name] is None:
                    values[name] = default
        missing = [name for name, value in values.items() if value is None]
        if missing:
            flags = ", ".join("--" + name.replace("_", "-") for name in missing)
            raise InvalidLawError(f"missing law flag(s): {flags} (or use --preset)")
        return make_params(**values)


P_LOW = typer.Option(None, "--p-low", help="Lower atom of p (decimal or fraction)")
P_HIGH = typer.Option(None, "--p-high", help="Upper atom of p")
P_WEIGHT = typer.Option(None, "--p-weight", help="Mass of p at --p-low")
Q_LOW = typer.Option(None, "--q-low", help="Lower atom of q")
Q_HIGH = typer.Option(None, "--q-high", help="Upper atom of q")
Q_WEIGHT = typer.Option(None, "--q-weight", help="Mass of q at --q-low")
PRESET = typer.Option(None, "--preset", help="Figure preset (fig1, fig2a, fig2b, fig3a, fig3b); flags override it")
VERBOSE = typer.Option(False, "--verbose", "-v", help="Enable verbose logging")


def configure_logging(verbose: bool) -> None:
    log_level = logging.DEBUG if verbose else logging.WARNING

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.setLevel(log_level)

    rich_handler = RichHandler(
        console=console,
        rich_tracebacks=True,
        show_time=verbose,
        show_path=verbose,
        markup=False,
    )
    rich_handler.setLevel(log_level)
    root_logger.addHandler(rich_handler)

    if hasattr(sys.stderr, "reconfigure"):
        sys.stderr.reconfigure(line_buffering=True)


@contextmanager
def exit_codes() -> Iterator[None]:
    """Turn domain errors into exit codes: 2 validation, 3 I/O, 4 mismatch."""
    try:
        yield
    except ParamsMismatchError as exc:
        console.print(f"[red]Error: {exc}[/red]")
        if exc.expected is not None:
            console.print(f"[dim]  expected: {exc.expected}[/dim]")
            console.print(f"[dim]  found:    {exc.found}[/dim]")
        raise typer.Exit(EXIT_MISMATCH)
    except (InvalidLawError, DomainError) as exc:
        console.print(f"[red]Error: {exc}[/red]")
        raise typer.Exit(EXIT_VALIDATION)
    except OSError as exc:
        console.print(f"[red]I/O error: {exc}[/red]")
        raise typer.Exit(EXIT_IO)
    except (json.JSONDecodeError, KeyError) as exc:
        console.print(f"[red]Error: malformed input ({exc})[/red]")
        raise typer.Exit(EXIT_VALIDATION)


def law_params(preset: Optional[str], **flags: Optional[str]) -> ModelParams:
    return LawOptions.from_flags(**flags).to_params(preset)


def load_descriptor(path: Path) -> BrownDescriptor:
    with open(path, encoding="utf-8") as f:
        return BrownDescriptor.from_dict(json.load(f))


def load_eigenvalues(directory: Path, desc: BrownDescriptor):
    """All clouds of a directory, after checking they were produced for desc's parameters."""
    if not directory.is_dir():
        raise FileNotFoundError(f"no such directory: {directory}")
    clouds = read_clouds(directory)
    if not clouds:
        raise FileNotFoundError(f"no eigenvalue CSV files with sidecars in {directory}")
    for cloud in clouds:
        check_params(cloud, desc)
    return clouds


def print_descriptor(desc: BrownDescriptor) -> None:
    table = Table(title="Corner atoms")
    table.add_column("corner", style="cyan")
    table.add_column("position")
    table.add_column("mass", justify="right")
    names = ("alpha + i beta", "alpha + i beta'", "alpha' + i beta", "alpha' + i beta'")
    for name, atom in zip(names, desc.atoms):
        style = "" if atom.mass > 0 else "dim"
        table.add_row(name, f"{atom.position.real:g}{atom.position.imag:+g}i", f"{atom.mass:.6g}", style=style)
    console.print(table)

    lo, hi = desc.nu.support
    first, second = component_masses(desc)
    console.print(f"[bold]continuous weight:[/bold] {desc.weights.w_cont:.6g}")
    console.print(f"[bold]nu support:[/bold] theta in [{lo:.10f}, {hi:.10f}]")
    console.print(
        f"[dim]  density at 0: {boundary_density(desc.params.a, desc.params.b, 'zero'):.6g}, "
        f"at pi/2: {boundary_density(desc.params.a, desc.params.b, 'right_angle'):.6g}[/dim]"
    )
    console.print(f"[dim]  orientation: {desc.geometry.orientation.value}, component masses {first:.6g} / {second:.6g}[/dim]")


def print_report(report: ComparisonReport) -> None:
    table = Table(title=f"Comparison ({report.source}, n={report.n}, trials={report.trials})")
    table.add_column("check", style="cyan")
    table.add_column("analytic", justify="right")
    table.add_column("empirical", justify="right")
    for row in report.atom_table:
        table.add_row(f"atom {row.corner.real:g}{row.corner.imag:+g}i", f"{row.analytic_mass:.4f}", f"{row.empirical_mass:.4f}")
    for index, (analytic, empirical) in enumerate(report.mass_by_component):
        table.add_row(f"component {index + 1} mass", f"{analytic:.4f}", f"{empirical:.4f}")
    for index, ks in enumerate(report.ks_by_component):
        table.add_row(f"component {index + 1} KS", "", f"{ks:.4f}")
    table.add_row("support distance p99", "", f"{report.support_p99:.3g}")
    table.add_row("support distance max", "", f"{report.support_max:.3g}")
    table.add_row("outliers", "", str(report.outliers))
    console.print(table)

    failures = report.failures()
    if failures:
        for failure in failures:
            console.print(f"[yellow]⚠ {failure}[/yellow]")
    else:
        console.print("[green]✓ all checks pass[/green]")
    console.print(f"[dim]{report.thresholds_note}[/dim]")


@app.command()
def brown(
    p_low: Optional[str] = P_LOW,
    p_high: Optional[str] = P_HIGH,
    p_weight: Optional[str] = P_WEIGHT,
    q_low: Optional[str] = Q_LOW,
    q_high: Optional[str] = Q_HIGH,
    q_weight: Optional[str] = Q_WEIGHT,
    preset: Optional[str] = PRESET,
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Descriptor JSON (default: <output_dir>/brown.json)"),
    verbose: bool = VERBOSE,
):
    """Compute the Brown measure descriptor and print its atoms and nu support."""
    configure_logging(verbose)
    out = out or get_settings().output_dir / "brown.json"
    with exit_codes():
        params = law_params(
            preset, p_low=p_low, p_high=p_high, p_weight=p_weight, q_low=q_low, q_high=q_high, q_weight=q_weight
        )
        try:
            desc = brown_measure(params)
        except NormalOperatorError:
            atoms = normal_spectral_measure(params)
            console.print("[dim]spectral measure: " + ", ".join(f"{a.mass:g} at {a.position}" for a in atoms) + "[/dim]")
            raise
        print_descriptor(desc)
        atomic_write_json(out, desc.to_dict())
    console.print(f"\n[bold]Descriptor saved to:[/bold] [cyan]{out}[/cyan]")


@app.command()
def sample(
    n: int = typer.Option(100_000, "--n", "-n", help="Number of exact Brown samples"),
    seed: int = typer.Option(0, "--seed", "-s", help="Random seed"),
    p_low: Optional[str] = P_LOW,
    p_high: Optional[str] = P_HIGH,
    p_weight: Optional[str] = P_WEIGHT,
    q_low: Optional[str] = Q_LOW,
    q_high: Optional[str] = Q_HIGH,
    q_weight: Optional[str] = Q_WEIGHT,
    preset: Optional[str] = PRESET,
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory (default: <output_dir>/exact)"),
    verbose: bool = VERBOSE,
):
    """Draw exact samples from the Brown measure (the control arm of compare)."""
    configure_logging(verbose)
    out = out or get_settings().output_dir / "exact"
    with exit_codes():
        if n < 1:
            raise InvalidLawError(f"--n: must be positive, got {n}")
        if not 0 <= seed < 2**64:
            raise InvalidLawError(f"--seed: must be an unsigned 64-bit integer, got {seed}")
        params = law_params(
            preset, p_low=p_low, p_high=p_high, p_weight=p_weight, q_low=q_low, q_high=q_high, q_weight=q_weight
        )
        cloud = control_cloud(brown_measure(params), n=n, seed=seed)
        path = write_cloud(cloud, out)
    console.print(f"[green]✓ {n} samples saved to[/green] [cyan]{path}[/cyan]")


@app.command()
def esd(
    n: int = typer.Option(1000, "--n", "-n", help="Matrix size"),
    trials: int = typer.Option(1, "--trials", "-t", help="Number of independent trials"),
    seed: int = typer.Option(0, "--seed", "-s", help="Base seed; trial k uses the stream (seed, k)"),
    p_low: Optional[str] = P_LOW,
    p_high: Optional[str] = P_HIGH,
    p_weight: Optional[str] = P_WEIGHT,
    q_low: Optional[str] = Q_LOW,
    q_high: Optional[str] = Q_HIGH,
    q_weight: Optional[str] = Q_WEIGHT,
    preset: Optional[str] = PRESET,
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory (default: <output_dir>/esd)"),
    max_workers: Optional[int] = typer.Option(None, "--max-workers", "-w", help="Parallel trials"),
    verbose: bool = VERBOSE,
):
    """Simulate X_n = P_n + iQ_n and write the eigenvalues of every trial."""
    configure_logging(verbose)
    out = out or get_settings().output_dir / "esd"
    with exit_codes():
        params = law_params(
            preset, p_low=p_low, p_high=p_high, p_weight=p_weight, q_low=q_low, q_high=q_high, q_weight=q_weight
        )
        cfg = EnsembleConfig(n=n, params=params, seed=seed, trials=trials)
        console.print(f"[cyan]Simulating {trials} trial(s) at n={n}...[/cyan]")
        clouds = run_trials(cfg, max_workers=max_workers)
        paths = [write_cloud(cloud, out) for cloud in clouds]
    for path in paths:
        console.print(f"[dim]💾 {path}[/dim]")
    console.print(f"[green]✓ {len(paths)} trial(s) saved to[/green] [cyan]{out}[/cyan]")


@app.command()
def compare(
    esd_dir: Path = typer.Option(..., "--esd", help="Directory of eigenvalue CSV files with JSON sidecars"),
    desc_path: Path = typer.Option(..., "--desc", help="Descriptor JSON written by `brown`"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Report JSON (default: <output_dir>/report.json)"),
    frame: Optional[Path] = typer.Option(None, "--frame", help="Also write a per-eigenvalue CSV (re,im,component,theta,dist)"),
    atom_radius: Optional[float] = typer.Option(None, "--atom-radius", help="Radius of the corner balls"),
    verbose: bool = VERBOSE,
):
    """Compare simulated or sampled eigenvalues with the analytic Brown measure."""
    configure_logging(verbose)
    settings = get_settings()
    out = out or settings.output_dir / "report.json"
    radius = settings.atom_radius if atom_radius is None else atom_radius
    with exit_codes():
        desc = load_descriptor(desc_path)
        clouds = load_eigenvalues(esd_dir, desc)
        report = reconcile(clouds, desc, atom_radius=radius)
        print_report(report)
        atomic_write_json(out, report.to_dict())
        if frame is not None:
            values = np.concatenate([cloud.eigenvalues for cloud in clouds])
            atomic_write_frame(frame, pullback_frame(values, desc, radius))
    console.print(f"\n[bold]Report saved to:[/bold] [cyan]{out}[/cyan]")


@app.command()
def plot(
    desc_path: Path = typer.Option(..., "--desc", help="Descriptor JSON written by `brown`"),
    esd_dir: Optional[Path] = typer.Option(None, "--esd", help="Optional directory of eigenvalue clouds to overlay"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="SVG file (default: <output_dir>/brown.svg)"),
    verbose: bool = VERBOSE,
):
    """Draw the support curve, rectangle and atoms, optionally with an eigenvalue scatter."""
    configure_logging(verbose)
    out = out or get_settings().output_dir / "brown.svg"
    with exit_codes():
        desc = load_descriptor(desc_path)
        eigenvalues = None
        if esd_dir is not None:
            clouds = load_eigenvalues(esd_dir, desc)
            eigenvalues = np.concatenate([cloud.eigenvalues for cloud in clouds])
        write_svg(out, desc, eigenvalues)
    console.print(f"[bold]Plot saved to:[/bold] [cyan]{out}[/cyan]")


if __name__ == "__main__":
    app()
