"""Testing module."""

import logging
import math

import numpy as np
import pytest
from scipy import stats

from levy_foraging.foraging_model.const import ORACLE_QUADRATURE
from levy_foraging.foraging_model.exceptions import DivergenceError, DomainError
from levy_foraging.foraging_model.kernel import (
    envelope_remainder,
    kappa_s,
    kappa_s_reflection_form,
    kernel_profile,
    tail_coefficient,
    u_eval,
    u_origin_closed,
)
from levy_foraging.foraging_model.models import (
    CutoffPolicy,
    KernelPoint,
    QuadratureSpec,
)
from levy_foraging.foraging_model.quadrature import adaptive_quad

_LOGGER = logging.getLogger(__name__)


def u(x, t, s, kappa=1.0, q=ORACLE_QUADRATURE):
    """Return the kernel value only."""
    return u_eval(KernelPoint(x, t, s, kappa), q).value


def test_kappa_half():
    """Test κ_{1/2} = 3/π."""
    assert kappa_s(0.5) == pytest.approx(3.0 / math.pi, rel=1e-12)


@pytest.mark.parametrize("s", [0.51, 0.6, 0.7, 0.8, 0.9, 0.99])
def test_kappa_two_forms(s):
    """Test the ζ(-2s) and reflection forms of κ_s."""
    assert kappa_s(s) == pytest.approx(kappa_s_reflection_form(s), rel=1e-10)


def test_kappa_diverges_at_one():
    """Test κ_s near and at s = 1."""
    assert kappa_s(0.99999) > 1e2
    with pytest.raises(DivergenceError):
        kappa_s(1.0)


def test_kappa_reflection_form_at_half():
    """Test that the reflection form rejects s = 1/2."""
    with pytest.raises(DomainError):
        kappa_s_reflection_form(0.5)


def test_origin_values():
    """Test u(0,1) for the Cauchy and Gaussian kernels."""
    assert u(0.0, 1.0, 0.5) == pytest.approx(1.0 / math.pi, abs=1e-8)
    assert u(0.0, 1.0, 1.0) == pytest.approx(0.5 / math.sqrt(math.pi), abs=1e-8)
    assert u_origin_closed(0.75, 1.0, 1.0) == pytest.approx(
        math.gamma(2.0 / 3.0) / (2.0 * math.pi * 0.75), rel=1e-14
    )
    assert u(0.0, 1.0, 0.75) == pytest.approx(
        u_origin_closed(0.75, 1.0, 1.0), abs=1e-8
    )


@pytest.mark.parametrize("x", [0.3, 1.0, 2.0, 7.5])
def test_cauchy_and_gaussian_profiles(x):
    """Test the closed-form kernels at s = 1/2 and s = 1."""
    assert u(x, 1.0, 0.5) == pytest.approx(
        1.0 / (math.pi * (1.0 + x ** 2)), abs=1e-9
    )
    assert u(x, 1.0, 1.0) == pytest.approx(
        math.exp(-x ** 2 / 4.0) / (2.0 * math.sqrt(math.pi)), abs=1e-9
    )


def test_symmetry():
    """Test u(-x,t) = u(x,t)."""
    for x in (0.4, 1.3, 6.0):
        assert u(-x, 2.0, 0.7) == u(x, 2.0, 0.7)


def test_scaling():
    """Test u(x,t) = t^(-1/(2s)) u(x t^(-1/(2s)), 1)."""
    # Config --->
    rng = np.random.default_rng(7)
    samples = 20

    for _ in range(samples):
        s = float(rng.uniform(0.55, 0.95))
        x = float(rng.uniform(-5.0, 5.0))
        t = float(rng.uniform(0.5, 2.0))
        stretch = t ** (-1.0 / (2.0 * s))
        assert u(x, t, s) == pytest.approx(
            stretch * u(x * stretch, 1.0, s), abs=1e-8
        )


@pytest.mark.parametrize("s", [0.6, 0.75, 0.9])
def test_tail_law(s):
    """Test the Richardson-extrapolated x^(1+2s) u(x,1)."""
    # Config --->
    near, far = 40.0, 80.0

    weight = 2.0 ** (2.0 * s)
    scaled_near = near ** (1.0 + 2.0 * s) * u(near, 1.0, s)
    scaled_far = far ** (1.0 + 2.0 * s) * u(far, 1.0, s)
    extrapolated = (weight * scaled_far - scaled_near) / (weight - 1.0)
    assert extrapolated == pytest.approx(
        tail_coefficient(s, 1.0, 1.0), rel=1e-3
    )


def test_tail_mode():
    """Test that the tail law takes over beyond the asymptotic cutoff."""
    # Config --->
    q = QuadratureSpec()
    point = KernelPoint(200.0, 1.0, 0.75, 1.0)

    value = u_eval(point, q)
    reference = u_eval(point, ORACLE_QUADRATURE)

    assert value.asymptotic
    assert not reference.asymptotic
    assert value.value == pytest.approx(reference.value, rel=2e-3)
    assert abs(value.value - reference.value) < 2.0 * value.abs_error_estimate


def test_tail_coefficient_vanishes_at_one():
    """Test that the Gaussian kernel has no power tail."""
    assert tail_coefficient(1.0, 1.0, 1.0) == 0.0
    assert tail_coefficient(0.5, 1.0, 1.0) == pytest.approx(1.0 / math.pi)


@pytest.mark.parametrize("s", [0.6, 0.8])
@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_levy_stable_cross_check(s, x):
    """Test against the symmetric stable law of index 2s."""
    # Config --->
    t = 1.5
    kappa = 0.8

    scale = kappa * t ** (1.0 / (2.0 * s))
    expected = stats.levy_stable.pdf(x, 2.0 * s, 0.0, loc=0.0, scale=scale)
    assert u(x, t, s, kappa) == pytest.approx(expected, rel=1e-4)


def test_fixed_cutoff_policy():
    """Test the FIXED frequency cutoff."""
    # Config --->
    q = QuadratureSpec(cutoff_policy=CutoffPolicy.FIXED, cutoff_value=10.0)

    assert u_eval(KernelPoint(0.0, 1.0, 1.0), q).value == pytest.approx(
        0.5 / math.sqrt(math.pi), abs=1e-9
    )
    with pytest.raises(DomainError):
        QuadratureSpec(cutoff_policy=CutoffPolicy.FIXED)


def test_envelope_remainder():
    """Test the envelope integral against its exponential case."""
    assert envelope_remainder(1.0, 3.0) == pytest.approx(math.exp(-3.0))
    assert envelope_remainder(1.5, 4.0) < envelope_remainder(1.5, 2.0)


def test_kernel_point_validation():
    """Test the kernel point constraints."""
    with pytest.raises(DomainError):
        KernelPoint(0.0, 0.0, 0.5)
    with pytest.raises(DomainError):
        KernelPoint(0.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        KernelPoint(0.0, 1.0, 0.5, kappa=-1.0)
    with pytest.raises(DomainError):
        KernelPoint(math.nan, 1.0, 0.5)


def test_kernel_profile():
    """Test the (x, u) rows over a grid."""
    rows = kernel_profile(0.75, 1.0, 1.0, np.linspace(0.0, 5.0, 11))
    assert len(rows) == 11
    assert rows[0][0] == 0.0
    assert all(b[1] < a[1] for a, b in zip(rows, rows[1:]))


@pytest.mark.parametrize("s", [0.6, 0.75, 0.9])
def test_mass(s):
    """Test ∫u(x,1)dx = 1, closed beyond X by the tail law."""
    # Config --->
    radius = 400.0

    two_s = 2.0 * s
    core = sum(
        adaptive_quad(lambda x: u(x, 1.0, s), a, b, 1e-10, 1e-8, 4096).value
        for a, b in ((0.0, 1.0), (1.0, 20.0), (20.0, radius))
    )
    tail = tail_coefficient(s, 1.0, 1.0) * radius ** (-two_s) / two_s
    assert 2.0 * (core + tail) == pytest.approx(1.0, abs=1e-6)


def test_decay_envelope():
    """Test that u(x,1)(1+|x|^(1+2s)) stays bounded under grid refinement."""
    # Config --->
    s = 0.75
    x_max = 100.0

    def bound(steps):
        xs = np.linspace(0.0, x_max, steps)
        return max(
            u(x, 1.0, s, q=QuadratureSpec()) * (1.0 + x ** (1.0 + 2.0 * s))
            for x in xs
        )

    coarse, fine = bound(201), bound(401)
    assert math.isfinite(fine)
    assert fine >= coarse >= tail_coefficient(s, 1.0, 1.0)
    assert fine == pytest.approx(coarse, rel=1e-2)
