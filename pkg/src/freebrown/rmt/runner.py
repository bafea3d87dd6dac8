"""Run simulation trials in parallel."""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from freebrown.config import get_settings
from freebrown.models.cloud import EsdCloud
from freebrown.rmt.ensemble import EnsembleConfig, esd

logger = logging.getLogger(__name__)


class TrialRunner:
    """Fan trials out to a thread pool (LAPACK releases the GIL) and collect them in trial order."""

    def __init__(self, max_workers: Optional[int] = None):
        self.settings = get_settings()
        self.max_workers = max_workers or self.settings.max_workers

    async def run(self, cfg: EnsembleConfig) -> list[EsdCloud]:
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            tasks = [
                loop.run_in_executor(executor, self._run_single, cfg, trial)
                for trial in range(cfg.trials)
            ]
            return list(await asyncio.gather(*tasks))

    def _run_single(self, cfg: EnsembleConfig, trial: int) -> EsdCloud:
        logger.info(f"trial {trial + 1}/{cfg.trials}: n={cfg.n}, seed={cfg.seed}")
        cloud = esd(cfg, trial)
        logger.debug(f"trial {trial + 1}/{cfg.trials} done")
        return cloud


def run_trials(cfg: EnsembleConfig, max_workers: Optional[int] = None) -> list[EsdCloud]:
    """Synchronous entry point: one cloud per trial, ordered by trial index."""
    return asyncio.run(TrialRunner(max_workers=max_workers).run(cfg))
