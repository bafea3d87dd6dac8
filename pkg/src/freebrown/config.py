"""Configuration management using Pydantic settings."""

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="FREEBROWN_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Output settings (CLI flags always win)
    output_dir: Path = Path("output")

    # nu tabulation (odd, Simpson needs an even number of panels)
    nu_grid_points: int = 16385

    # Quadrature
    quad_epsabs: float = 1e-11
    quad_epsrel: float = 1e-10
    quad_limit: int = 200

    # Comparison
    atom_radius: float = 1e-6

    # Trials run on a thread pool
    max_workers: int = 4

    # Plotting
    plot_points_per_branch: int = 512


def get_settings() -> Settings:
    """Get application settings."""
    return Settings()
