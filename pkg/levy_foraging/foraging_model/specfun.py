"""Real-axis special functions consumed by every functional formula.

Gamma, digamma and zeta are taken from ``scipy.special``; ζ′ for
non-negative arguments from ``mpmath``. Negative zeta arguments go through
the functional equation, and ζ′ there differentiates it analytically.
"""

from __future__ import annotations

import logging
import math
import threading

import mpmath
import numpy as np
from scipy import special

from .const import (
    DIGAMMA_REL_ERROR,
    GAMMA_REL_ERROR,
    POLE_TOLERANCE,
    ZETA_PRIME_REL_ERROR,
    ZETA_REL_ERROR,
)
from .exceptions import DomainError, PoleError
from .models import DomainTag, FractionalExponent, SpecFunResult, real_arg
from .utils import cos_pi, is_near_nonpositive_integer, sin_pi


_LOGGER = logging.getLogger(__name__)

# mpmath evaluates inside a shared context.
_MPMATH_LOCK = threading.Lock()

# Term bound at which the Z series switches to its integral tail.
_Z_TERM_TOLERANCE = 1e-8

LOG_TWO_PI = math.log(2.0 * math.pi)


def _result(value: float, rel_error: float, floor: float = 0.0):
    return SpecFunResult(value, abs(value) * rel_error + floor)


def gamma(z) -> SpecFunResult:
    """Return Γ(z) for real z away from the non-positive integers.

    Raises
    ------
    PoleError
        If z is within 1e-14 of 0, -1, -2, ...

    """
    z = real_arg(z)
    if is_near_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at z={z}", "z", z)
    return _result(float(special.gamma(z)), GAMMA_REL_ERROR)


def digamma(x) -> SpecFunResult:
    """Return ψ(x) for real x away from the non-positive integers."""
    x = real_arg(x, "x")
    if is_near_nonpositive_integer(x):
        raise PoleError(f"digamma has a pole at x={x}", "x", x)
    return _result(float(special.digamma(x)), DIGAMMA_REL_ERROR, 1e-15)


def _check_zeta_pole(z: float) -> None:
    if abs(z - 1.0) < POLE_TOLERANCE:
        raise PoleError(f"zeta has a pole at z={z}", "z", z)


def _zeta_reflection_factor(z: float) -> tuple[float, float]:
    """Return (2^z π^(z-1) Γ(1-z), sin(πz/2)) for the functional equation."""
    prefactor = 2.0 ** z * math.pi ** (z - 1.0) * float(special.gamma(1.0 - z))
    return prefactor, sin_pi(z / 2.0)


def zeta(z) -> SpecFunResult:
    """Return the Riemann zeta function at any real z != 1.

    Parameters
    ----------
    z : float
        Real argument.

    Returns
    -------
    SpecFunResult
        ζ(z). Arguments below zero are mapped through the functional
        equation ζ(z) = 2^z π^(z-1) sin(πz/2) Γ(1-z) ζ(1-z).

    Raises
    ------
    PoleError
        If z is within 1e-14 of 1.

    """
    z = real_arg(z)
    _check_zeta_pole(z)
    if z >= 0.0:
        return _result(float(special.zeta(z)), ZETA_REL_ERROR)

    prefactor, sine = _zeta_reflection_factor(z)
    value = prefactor * sine * float(special.zeta(1.0 - z))
    return _result(value, 4.0 * ZETA_REL_ERROR, 1e-300)


def _mpmath_zeta_prime(z: float) -> float:
    with _MPMATH_LOCK:
        return float(mpmath.zeta(z, 1, 1))


def zeta_prime(z) -> SpecFunResult:
    """Return ζ′(z) for real z != 1.

    For z >= 0 the derivative comes from mpmath. For z < 0 the functional
    equation is differentiated through Γ, sin and ζ(1-z), so the result
    keeps its accuracy next to the trivial zeros.

    Raises
    ------
    PoleError
        If z is within 1e-14 of 1.

    """
    z = real_arg(z)
    _check_zeta_pole(z)
    if z >= 0.0:
        return _result(_mpmath_zeta_prime(z), ZETA_PRIME_REL_ERROR, 1e-300)

    prefactor, sine = _zeta_reflection_factor(z)
    psi = float(special.digamma(1.0 - z))
    mirrored = float(special.zeta(1.0 - z))
    mirrored_prime = _mpmath_zeta_prime(1.0 - z)
    factor = prefactor * sine
    factor_prime = prefactor * (
        sine * (LOG_TWO_PI - psi) + 0.5 * math.pi * cos_pi(z / 2.0)
    )
    value = factor_prime * mirrored - factor * mirrored_prime
    scale = abs(factor_prime * mirrored) + abs(factor * mirrored_prime)
    _LOGGER.debug(f"zeta_prime({z}) via functional equation: {value}")
    return SpecFunResult(value, scale * ZETA_PRIME_REL_ERROR * 4.0)


def harmonic_Z(x) -> SpecFunResult:
    """Return Z(x) = Σ_{k>=1} (1/(k+x) - 1/k) for x > -1.

    The series is summed until the term bound x/(k(k+x)) drops below
    1e-8, then the remainder is replaced by its midpoint integral
    log(1 + x/(N+1/2)).

    Raises
    ------
    DomainError
        If x <= -1.

    """
    x = real_arg(x, "x")
    if x <= -1.0:
        raise DomainError(f"harmonic_Z needs x > -1, got {x}", "x", x)
    if x == 0.0:
        return SpecFunResult(0.0, 0.0)

    n_terms = max(16, math.ceil(math.sqrt(2.0 * abs(x) / _Z_TERM_TOLERANCE)))
    k = np.arange(1, n_terms + 1, dtype=float)
    partial = math.fsum(x / (k * (k + x)))
    tail = math.log1p(x / (n_terms + 0.5))
    value = -(partial + tail)
    error = abs(x) / (4.0 * n_terms ** 3) + 1e-15 * (1.0 + abs(partial))
    _LOGGER.debug(f"harmonic_Z({x}) summed {n_terms} terms")
    return SpecFunResult(value, error)


def h_of_s(s: FractionalExponent | float) -> SpecFunResult:
    """Return h(s) = -2ζ(-2s), positive on (1/2, 1) and zero at s = 1."""
    s = FractionalExponent.coerce(s, DomainTag.UNIT_CLOSED).s
    result = zeta(-2.0 * s)
    return SpecFunResult(-2.0 * result.value, 2.0 * result.abs_error_estimate)


def h_product_form(s: FractionalExponent | float) -> SpecFunResult:
    """Return 2^(1-2s) π^(-2s-1) sin(πs) Γ(1+2s) ζ(1+2s)."""
    s = FractionalExponent.coerce(s, DomainTag.UNIT_CLOSED).s
    value = (
        2.0 ** (1.0 - 2.0 * s)
        * math.pi ** (-2.0 * s - 1.0)
        * sin_pi(s)
        * float(special.gamma(1.0 + 2.0 * s))
        * float(special.zeta(1.0 + 2.0 * s))
    )
    return _result(value, 4.0 * ZETA_REL_ERROR, 1e-300)


def h_prime(s: FractionalExponent | float) -> SpecFunResult:
    """Return dh/ds = 4ζ′(-2s)."""
    s = FractionalExponent.coerce(s, DomainTag.UNIT_CLOSED).s
    result = zeta_prime(-2.0 * s)
    return SpecFunResult(4.0 * result.value, 4.0 * result.abs_error_estimate)
