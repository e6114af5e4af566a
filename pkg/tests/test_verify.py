"""Testing module."""

import logging
import math

import orjson
import pytest

from levy_foraging.const import (
    SUITE_ALIASES,
    SUITE_ALL,
    SUITE_E1_DERIVATIVE,
    SUITE_E2_DERIVATIVE,
    SUITE_G4_ROOT,
    SUITE_SPECFUN,
)
from levy_foraging.coordinator import VerificationCoordinator
from levy_foraging.foraging_model.exceptions import DomainError
from levy_foraging.verify import (
    BaseVerifier,
    CheckResult,
    Verifier,
    close,
    holds,
    verification_check,
)

_LOGGER = logging.getLogger(__name__)


class BrokenVerifier(BaseVerifier):
    """Verifier with one passing and one raising check."""

    @verification_check(suites=["demo"])
    def check_ok(self):
        return [close("demo.ok", 1.0, 1.0 + 1e-14, 1e-12)]

    @verification_check(suites=["demo"])
    def check_raises(self):
        raise DomainError("s out of range", "s", 2.0)

    def check_not_collected(self):
        return []


def test_checks_for():
    """Test the suite membership of the collected checks."""
    verifier = Verifier()

    names = [check.__name__ for check in verifier.checks_for(SUITE_E2_DERIVATIVE)]
    assert names == sorted(names)
    assert {"check_dE2", "check_h_forms", "check_h_range"} <= set(names)
    assert "check_dE1" not in names

    everything = verifier.checks_for(SUITE_ALL)
    assert len(everything) == len(set(c.__name__ for c in everything))
    assert len(everything) > len(verifier.checks_for(SUITE_SPECFUN))


def test_appendix_suite_names():
    """Test that appendixA1..A5 select the derivative and bracket suites."""
    verifier = Verifier()

    assert list(SUITE_ALIASES) == [f"appendixA{n}" for n in range(1, 6)]
    assert SUITE_ALIASES["appendixA5"] == SUITE_G4_ROOT
    for alias, suite in SUITE_ALIASES.items():
        assert verifier.checks_for(alias) == verifier.checks_for(suite)
        assert verifier.checks_for(alias)


def test_collection_skips_plain_methods():
    """Test that undecorated methods are not checks."""
    names = [check.__name__ for check in BrokenVerifier().checks_for("demo")]
    assert names == ["check_ok", "check_raises"]


def test_close_and_holds():
    """Test the relative, absolute and qualitative comparisons."""
    assert close("a", 2.0, 2.0 + 1e-13, 1e-12).passed
    assert not close("a", 2.0, 2.1, 1e-12).passed
    assert close("a", 0.0, 1e-16, 1e-15, relative=False).passed
    assert not close("a", 1.0, math.nan, 1.0).passed
    assert holds("b", "x > 0", 3, True).tol is None


def test_check_result_output():
    """Test the text and JSON renderings of a check result."""
    result = CheckResult("specfun.zeta[2]", 1.5, 1.5, 1e-13, True)

    assert result.to_text() == "specfun.zeta[2] expected=1.5 got=1.5 tol=1e-13 PASS"
    assert orjson.loads(result.to_json()) == {
        "id": "specfun.zeta[2]",
        "expected": 1.5,
        "got": 1.5,
        "tol": 1e-13,
        "status": "PASS",
    }
    failed = CheckResult("x", "pass", "detail", None, False)
    assert failed.to_text().endswith(" FAIL")


@pytest.mark.asyncio
async def test_coordinator_specfun():
    """Test a concurrent run of the specfun suite."""
    coordinator = VerificationCoordinator(SUITE_SPECFUN)
    results = await coordinator.async_run()

    assert results
    assert coordinator.passed
    assert coordinator.failed == []
    ids = [result.check_id for result in results]
    assert ids == sorted(ids)
    assert all(check_id.startswith("specfun.") for check_id in ids)


@pytest.mark.asyncio
async def test_coordinator_converts_errors():
    """Test that a raising check becomes a failed result."""
    coordinator = VerificationCoordinator("demo", BrokenVerifier())
    results = await coordinator.async_run()

    assert [r.check_id for r in results] == ["check_raises.error", "demo.ok"]
    assert not coordinator.passed
    assert coordinator.failed == ["check_raises.error"]
    assert "s out of range" in results[0].got


def test_coordinator_sync_run():
    """Test the synchronous wrapper."""
    coordinator = VerificationCoordinator("demo", BrokenVerifier())
    assert len(coordinator.run()) == 2
    assert not VerificationCoordinator("empty", BrokenVerifier()).passed


@pytest.mark.asyncio
async def test_coordinator_e1_derivative():
    """Test a concurrent run of the E1 derivative suite."""
    coordinator = VerificationCoordinator(SUITE_E1_DERIVATIVE)
    results = await coordinator.async_run()

    assert results
    assert coordinator.failed == []
    ids = [result.check_id for result in results]
    assert any(check_id.startswith("asymptotics.e1-minimum.") for check_id in ids)
