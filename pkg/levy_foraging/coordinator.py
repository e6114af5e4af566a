"""Verification update coordinator."""

from __future__ import annotations

import asyncio
import logging
from typing import Callable

from .const import SUITE_ALL
from .foraging_model.exceptions import ForagingError
from .verify import CheckResult, Verifier


_LOGGER = logging.getLogger(__name__)


class VerificationCoordinator:
    """Run the checks of a suite concurrently.

    Each check is offloaded to a worker thread. A library error raised by
    a check becomes a single failed result carrying the error message.

    Attributes
    ----------
    suite : str
        Suite name, or ``all``.
    results : list[CheckResult]
        Results of the last run, ordered by check id.

    """

    def __init__(self, suite: str = SUITE_ALL, verifier: Verifier | None = None):
        """Initialize VerificationCoordinator."""
        self.suite = suite
        self.verifier = verifier or Verifier()
        self.results: list[CheckResult] = []

    @property
    def passed(self) -> bool:
        """Return True if the last run had results and all of them passed."""
        return bool(self.results) and all(r.passed for r in self.results)

    @property
    def failed(self) -> list[str]:
        """Return the ids of the failed checks."""
        return [r.check_id for r in self.results if not r.passed]

    async def _async_run_check(
            self,
            check: Callable[[], list[CheckResult]],
    ) -> list[CheckResult]:
        name = check.__name__
        try:
            results = await asyncio.to_thread(check)
        except ForagingError as err:
            _LOGGER.debug(f"Check {name} raised {err!r}")
            return [
                CheckResult(f"{name}.error", "no error", str(err), None, False)
            ]
        _LOGGER.debug(
            f"Check {name}: {sum(r.passed for r in results)}/{len(results)} passed"
        )
        return results

    async def async_run(self) -> list[CheckResult]:
        """Run every check of the suite and return the ordered results."""
        checks = self.verifier.checks_for(self.suite)
        batches = await asyncio.gather(
            *(self._async_run_check(check) for check in checks)
        )
        self.results = sorted(
            (result for batch in batches for result in batch),
            key=lambda result: result.check_id,
        )
        return self.results

    def run(self) -> list[CheckResult]:
        """Run the suite from synchronous code."""
        return asyncio.run(self.async_run())
