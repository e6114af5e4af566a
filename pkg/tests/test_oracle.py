"""Testing module."""

import logging

import pytest

from levy_foraging.foraging_model.exceptions import DomainError, TruncationError
from levy_foraging.foraging_model.functionals import mean_displacement
from levy_foraging.foraging_model.kernel import kappa_s, tail_coefficient
from levy_foraging.foraging_model.models import KappaMode
from levy_foraging.foraging_model.oracle import (
    moment_tail,
    oracle_lattice,
    oracle_moment,
    oracle_phi0,
    oracle_remote,
    oracle_remote_efficiency,
    remote_success_leading_order,
)

_LOGGER = logging.getLogger(__name__)


@pytest.mark.parametrize("s, kappa, T", [(0.75, 1.0, 1.0), (0.6, 2.0, 10.0)])
def test_phi0_oracle(s, kappa, T):
    """Test Φ0 by quadrature of u(0,t)."""
    report = oracle_phi0(s, kappa, T)
    assert report.rel_diff < 1e-6
    assert report.quadrature_error_estimate >= 0


def test_phi0_oracle_levy_walk():
    """Test Φ0 with κ = κ_s."""
    # Config --->
    s = 0.8

    assert oracle_phi0(s, kappa_s(s), 1.0).rel_diff < 1e-6


@pytest.mark.parametrize("s, kappa", [(0.75, 1.0), (0.9, 0.5)])
def test_moment_oracle(s, kappa):
    """Test ℓ by the first absolute moment of u."""
    assert oracle_moment(s, kappa, 1.0).rel_diff < 1e-4


def test_oracle_domains():
    """Test the s-ranges of the oracles."""
    with pytest.raises(DomainError):
        oracle_phi0(0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        oracle_moment(1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        oracle_remote(0.75, 1.0, -1.0, 1.0)


def test_remote_oracle_ladder():
    """Test the large-L approximation of Φ_{L,T}."""
    # Config --->
    s = 0.75

    gaps = [oracle_remote(s, 1.0, L, 1.0).rel_diff for L in (50.0, 100.0, 200.0)]
    assert all(b <= a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-2


def test_remote_leading_order():
    """Test the leading-order formula at s = 1/2."""
    # κ T² Γ(2) sin(π/2) / (2π L²) with κ = 1
    assert remote_success_leading_order(0.5, 1.0, 10.0, 2.0) == pytest.approx(
        4.0 / (2.0 * 3.141592653589793 * 100.0), rel=1e-14
    )


@pytest.mark.parametrize("mode", list(KappaMode))
def test_remote_efficiency(mode):
    """Test Φ_{L,T}/T against G1 and G2."""
    report = oracle_remote_efficiency(0.75, mode, 100.0, 1.0)
    assert report.rel_diff < 2e-2


def test_lattice_oracle():
    """Test the Poisson identity and its reduction to u(0,t)."""
    reductions = []
    for spacing in (10.0, 50.0, 250.0):
        report = oracle_lattice(0.75, spacing, 1.0, 10_000)
        assert report.poisson.rel_diff < 1e-6
        assert report.tail_bound >= 0
        reductions.append(report.reduction.rel_diff)
    assert all(b < a for a, b in zip(reductions, reductions[1:]))
    assert reductions[-1] < 1e-3


def test_lattice_truncation():
    """Test that a short sum is rejected."""
    with pytest.raises(TruncationError) as err:
        oracle_lattice(0.75, 10.0, 1.0, 3)
    assert err.value.tail_bound > 0
    with pytest.raises(DomainError):
        oracle_lattice(0.75, 10.0, 1.0, 0)
    with pytest.raises(DomainError):
        oracle_lattice(0.75, 10.0, 1.0, 2.5)


def test_phi0_oracle_near_half():
    """Test Φ0 next to s = 1/2, where the t-singularity is strongest."""
    assert oracle_phi0(0.51, 1.0, 1.0).rel_diff < 1e-3


def test_moment_oracle_heavy_tail():
    """Test ℓ at s = 0.6, where the tail law carries most of the moment."""
    assert oracle_moment(0.6, 1.0, 1.0).rel_diff < 1e-3


def test_moment_tail_share():
    """Test the tail-law share of the first moment at s = 3/4."""
    # Config --->
    s = 0.75

    moment = mean_displacement(s, 1.0, 1.0) * (1.0 + 2.0 * s) / (2.0 * s)
    assert moment_tail(s, 1.0, 50.0) == pytest.approx(
        4.0 * tail_coefficient(s, 1.0, 1.0) / 50.0 ** 0.5, rel=1e-14
    )
    shares = [moment_tail(s, 1.0, radius) / moment for radius in (50.0, 200.0)]
    assert 0.05 < shares[0] < 0.1
    assert shares[1] < 0.05
    with pytest.raises(DomainError):
        moment_tail(0.5, 1.0, 50.0)
