"""Brute-force quadrature and summation oracles for the closed forms.

Every oracle value comes from the kernel quadrature alone. The only
analytic ingredient is the tail law beyond a truncation radius, which the
kernel tests validate independently.
"""

from __future__ import annotations

import logging
import math
from dataclasses import replace

from scipy import special

from .const import (
    LATTICE_TAIL_MODE_CUTOFF,
    LATTICE_TAIL_TOLERANCE,
    MOMENT_MAX_DOUBLINGS,
    MOMENT_SHELL_TOLERANCE,
    MOMENT_TAIL_START,
    ORACLE_OUTER_ABS_TOL,
    ORACLE_OUTER_REL_TOL,
    ORACLE_QUADRATURE,
)
from .exceptions import DomainError, TruncationError
from .functionals import get_scenario, mean_displacement, phi0
from .kernel import (
    envelope_remainder,
    kappa_s,
    tail_coefficient,
    u_eval,
    u_origin_closed,
)
from .models import (
    DomainTag,
    Family,
    FractionalExponent,
    FunctionalId,
    KappaMode,
    KernelPoint,
    LatticeReport,
    OracleReport,
    QuadratureSpec,
    ScenarioParams,
    positive,
)
from .quadrature import adaptive_quad
from .utils import sin_pi


_LOGGER = logging.getLogger(__name__)


def _outer_quad(func, a: float, b: float, q: QuadratureSpec):
    return adaptive_quad(
        func, a, b, ORACLE_OUTER_ABS_TOL, ORACLE_OUTER_REL_TOL,
        q.max_subdivisions,
    )


def oracle_phi0(
        s: FractionalExponent | float,
        kappa: float,
        T: float,
        q: QuadratureSpec = ORACLE_QUADRATURE,
) -> OracleReport:
    """Return Φ0 = ∫₀ᵀ u(0,t) dt by quadrature against its closed form.

    The t^(-1/(2s)) endpoint singularity is removed by t = τ^(2s/(2s-1)),
    which makes the integrand constant in τ for the exact kernel.

    Raises
    ------
    QuadratureError
        If the kernel or the outer quadrature does not converge.

    """
    s = FractionalExponent.coerce(s, DomainTag.HALF1)
    kappa = positive(kappa, "kappa")
    T = positive(T, "T")
    power = 2.0 * s.s / (2.0 * s.s - 1.0)

    def integrand(tau: float) -> float:
        t = tau ** power
        u = u_eval(KernelPoint(0.0, t, s, kappa), q).value
        return power * tau ** (power - 1.0) * u

    result = _outer_quad(integrand, 0.0, T ** (1.0 / power), q)
    closed = phi0(s.s, kappa, T).value
    _LOGGER.debug(f"oracle_phi0(s={s.s}, kappa={kappa}, T={T}): {result.value}")
    return OracleReport(result.value, closed, result.abs_error)


def _first_moment_shell(
        s: FractionalExponent,
        kappa: float,
        a: float,
        b: float,
        q: QuadratureSpec,
):
    """Return ∫_a^b y u(y,1) dy."""
    return _outer_quad(
        lambda y: y * u_eval(KernelPoint(y, 1.0, s, kappa), q).value, a, b, q
    )


def moment_tail(s: FractionalExponent | float, kappa: float, radius: float) -> float:
    """Return the tail-law part of M beyond Y, 2 c Y^(1-2s) / (2s-1)."""
    s = FractionalExponent.coerce(s, DomainTag.HALF1)
    two_s = 2.0 * s.s
    coefficient = tail_coefficient(s, 1.0, positive(kappa, "kappa"))
    return 2.0 * coefficient * positive(radius, "radius") ** (1.0 - two_s) / (
        two_s - 1.0
    )


def oracle_moment(
        s: FractionalExponent | float,
        kappa: float,
        T: float,
        q: QuadratureSpec = ORACLE_QUADRATURE,
) -> OracleReport:
    """Return ℓ from the first absolute moment of u(·,1), against its closed form.

    M = ∫|y| u(y,1) dy is integrated up to a radius Y and closed with the
    tail-law integral 2 c Y^(1-2s) / (2s-1). Y starts at max(50, 20κ) and
    doubles while the estimate still moves by more than 1e-6 relative.
    Then ℓ = M T^((1+2s)/(2s)) 2s/(1+2s).
    """
    s = FractionalExponent.coerce(s, DomainTag.HALF1)
    kappa = positive(kappa, "kappa")
    T = positive(T, "T")
    two_s = 2.0 * s.s

    radius = max(MOMENT_TAIL_START, 20.0 * kappa)
    shell = _first_moment_shell(s, kappa, 0.0, radius, q)
    core, error = 2.0 * shell.value, 2.0 * shell.abs_error
    estimate = core + moment_tail(s, kappa, radius)

    for doubling in range(1, MOMENT_MAX_DOUBLINGS + 1):
        shell = _first_moment_shell(s, kappa, radius, 2.0 * radius, q)
        radius *= 2.0
        core += 2.0 * shell.value
        error += 2.0 * shell.abs_error
        previous, estimate = estimate, core + moment_tail(s, kappa, radius)
        _LOGGER.debug(
            f"oracle_moment doubling #{doubling}: Y={radius} M={estimate}"
            f" tail share={moment_tail(s, kappa, radius) / estimate}"
        )
        if abs(estimate - previous) <= MOMENT_SHELL_TOLERANCE * abs(estimate):
            break

    factor = T ** ((1.0 + two_s) / two_s) * two_s / (1.0 + two_s)
    return OracleReport(
        estimate * factor,
        mean_displacement(s.s, kappa, T),
        error * factor,
    )


def remote_success(
        s: FractionalExponent | float,
        kappa: float,
        L: float,
        T: float,
        q: QuadratureSpec = ORACLE_QUADRATURE,
):
    """Return Φ_{L,T} = ∫₀ᵀ u(L,t) dt by quadrature without the tail law."""
    s = FractionalExponent.coerce(s, DomainTag.FULL01)
    kappa = positive(kappa, "kappa")
    L = positive(L, "L")
    T = positive(T, "T")
    q = q.without_tail_mode()

    def integrand(t: float) -> float:
        if t <= 0.0:
            return 0.0
        return u_eval(KernelPoint(L, t, s, kappa), q).value

    return _outer_quad(integrand, 0.0, T, q)


def remote_success_leading_order(s: float, kappa: float, L: float, T: float) -> float:
    """Return κ^(2s) T² Γ(1+2s) sin(πs) / (2π L^(1+2s))."""
    return (
        kappa ** (2.0 * s) * T ** 2 * float(special.gamma(1.0 + 2.0 * s))
        * sin_pi(s) / (2.0 * math.pi * L ** (1.0 + 2.0 * s))
    )


def oracle_remote(
        s: FractionalExponent | float,
        kappa: float,
        L: float,
        T: float,
        q: QuadratureSpec = ORACLE_QUADRATURE,
) -> OracleReport:
    """Compare Φ_{L,T} with its large-L approximation.

    The relative difference is an asymptotic error, not a round-off one,
    and shrinks as L grows.
    """
    s = FractionalExponent.coerce(s, DomainTag.FULL01)
    result = remote_success(s, kappa, L, T, q)
    closed = remote_success_leading_order(s.s, kappa, L, T)
    _LOGGER.debug(
        f"oracle_remote(s={s.s}, kappa={kappa}, L={L}, T={T}): "
        f"{result.value} vs {closed}"
    )
    return OracleReport(result.value, closed, result.abs_error)


def oracle_remote_efficiency(
        s: FractionalExponent | float,
        kappa_mode: KappaMode | str,
        L: float,
        T: float,
        q: QuadratureSpec = ORACLE_QUADRATURE,
) -> OracleReport:
    """Compare Φ_{L,T}/T with G1 (unit κ) or G2 (κ = κ_s)."""
    s = FractionalExponent.coerce(s, DomainTag.FULL01)
    kappa_mode = KappaMode(kappa_mode)
    if kappa_mode is KappaMode.LEVY_WALK:
        kappa, fid = kappa_s(s.s), FunctionalId(Family.G, 2)
    else:
        kappa, fid = 1.0, FunctionalId(Family.G, 1)
    result = remote_success(s, kappa, L, T, q)
    closed = get_scenario(ScenarioParams(T, L)).evaluate(fid, s.s).value
    return OracleReport(result.value / T, closed, result.abs_error / T)


def _lattice_physical_side(
        s: FractionalExponent,
        spacing: float,
        t: float,
        n_terms: int,
        q: QuadratureSpec,
) -> tuple[float, float, float]:
    """Return (u(0,t) + 2 Σ_{k<=n} u(λk,t) + tail, error, tail bound)."""
    q = replace(q, asymptotic_cutoff=LATTICE_TAIL_MODE_CUTOFF)
    origin = u_eval(KernelPoint(0.0, t, s, 1.0), q)
    terms, error = [], origin.abs_error_estimate
    for k in range(1, n_terms + 1):
        value = u_eval(KernelPoint(spacing * k, t, s, 1.0), q)
        terms.append(value.value)
        error += 2.0 * value.abs_error_estimate
    two_s = 2.0 * s.s
    tail = (
        2.0 * tail_coefficient(s, t, 1.0) * spacing ** (-1.0 - two_s)
        * float(special.zeta(1.0 + two_s, n_terms + 1.0))
    )
    total = origin.value + 2.0 * math.fsum(terms) + tail
    return total, error, abs(tail)


def _lattice_frequency_side(
        s: FractionalExponent,
        spacing: float,
        t: float,
        n_terms: int,
) -> tuple[float, float]:
    """Return ((1/λ)(1 + 2 Σ_{k<=n} exp(-(2πk/λ)^(2s) t)), tail bound)."""
    two_s = 2.0 * s.s
    terms = [
        math.exp(-((2.0 * math.pi * k / spacing) ** two_s) * t)
        for k in range(1, n_terms + 1)
    ]
    total = (1.0 + 2.0 * math.fsum(terms)) / spacing
    width = t ** (1.0 / two_s)
    theta_n = 2.0 * math.pi * n_terms * width / spacing
    tail = envelope_remainder(two_s, theta_n) / (math.pi * width)
    return total, tail


def oracle_lattice(
        s: FractionalExponent | float,
        spacing: float,
        t: float,
        n_terms: int,
        q: QuadratureSpec = ORACLE_QUADRATURE,
) -> LatticeReport:
    """Check the Poisson summation identity for targets on λZ.

    The physical side Σ_k u(λk,t) is summed from kernel values, the
    frequency side (1/λ) Σ_k exp(-(2πk/λ)^(2s) t) in closed form. For large
    λ the frequency side tends to u(0,t), the single-prey integrand.
    κ is fixed to 1.

    Parameters
    ----------
    s : FractionalExponent | float
        Exponent in (0, 1].
    spacing : float
        Lattice spacing λ.
    t : float
        Time.
    n_terms : int
        Terms kept on each side of both sums.
    q : QuadratureSpec, optional
        Kernel tolerances. The default is ORACLE_QUADRATURE.

    Raises
    ------
    TruncationError
        If a tail bound exceeds 1e-7 of its sum.

    Returns
    -------
    LatticeReport
        ``poisson`` compares the two sides, ``reduction`` compares the
        frequency side with u(0,t).

    """
    s = FractionalExponent.coerce(s, DomainTag.UNIT_CLOSED)
    spacing = positive(spacing, "lambda")
    t = positive(t, "t")
    if int(n_terms) != n_terms or n_terms < 1:
        raise DomainError(
            f"n_terms must be a positive integer, got {n_terms}",
            "n_terms",
            n_terms,
        )
    n_terms = int(n_terms)

    physical, error, physical_tail = _lattice_physical_side(
        s, spacing, t, n_terms, q
    )
    frequency, frequency_tail = _lattice_frequency_side(s, spacing, t, n_terms)
    for name, bound, total in (
        ("physical", physical_tail, physical),
        ("frequency", frequency_tail, frequency),
    ):
        if bound > LATTICE_TAIL_TOLERANCE * abs(total):
            raise TruncationError(
                f"{name} lattice tail bound {bound} exceeds tolerance "
                f"for n_terms={n_terms}",
                tail_bound=bound,
            )

    _LOGGER.debug(
        f"oracle_lattice(s={s.s}, lambda={spacing}, t={t}): "
        f"physical={physical} frequency={frequency}"
    )
    return LatticeReport(
        poisson=OracleReport(physical, frequency, error),
        reduction=OracleReport(frequency, u_origin_closed(s, t, 1.0)),
        tail_bound=physical_tail + frequency_tail,
    )
