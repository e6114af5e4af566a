"""Closed-form s-derivatives of the efficiency functionals."""

from __future__ import annotations

import logging
import math

from . import specfun
from .const import EULER_GAMMA
from .exceptions import DomainError
from .models import DomainTag, FractionalExponent, positive
from .utils import cos_pi, sin_pi


_LOGGER = logging.getLogger(__name__)


def _half1(s) -> float:
    return FractionalExponent.coerce(s, DomainTag.HALF1).s


def _unit_closed(s) -> float:
    return FractionalExponent.coerce(s, DomainTag.UNIT_CLOSED).s


def _e1_prefactor(s: float, T: float) -> float:
    """Return Γ(1/(2s)) / (2π T^(1/(2s)) (2s-1)² s²)."""
    return specfun.gamma(1.0 / (2.0 * s)).value / (
        2.0 * math.pi * T ** (1.0 / (2.0 * s)) * (2.0 * s - 1.0) ** 2 * s ** 2
    )


def dE1_ds(s, T: float) -> float:
    """Return dE1/ds.

    ((2s-1) ln T - 4s² - (2s-1) ψ(1/(2s))) Γ(1/(2s)) / (2π T^(1/(2s)) (2s-1)² s²)
    """
    s = _half1(s)
    T = positive(T, "T")
    bracket = (
        (2.0 * s - 1.0) * math.log(T)
        - 4.0 * s ** 2
        - (2.0 * s - 1.0) * specfun.digamma(1.0 / (2.0 * s)).value
    )
    return bracket * _e1_prefactor(s, T)


def dE1_ds_z_form(s, T: float) -> float:
    """Return dE1/ds with ψ(1/(2s)) replaced by -γ - 2s - Z(1/(2s))."""
    s = _half1(s)
    T = positive(T, "T")
    bracket = (
        (2.0 * s - 1.0) * (math.log(T) + EULER_GAMMA)
        - 2.0 * s
        + (2.0 * s - 1.0) * specfun.harmonic_Z(1.0 / (2.0 * s)).value
    )
    return bracket * _e1_prefactor(s, T)


def dE2_ds(s, T: float) -> float:
    """Return dE2/ds from E2 = 2π h^(1/(2s)) E1."""
    s = _half1(s)
    T = positive(T, "T")
    e1 = specfun.gamma(1.0 / (2.0 * s)).value / (
        math.pi * T ** (1.0 / (2.0 * s)) * (2.0 * s - 1.0)
    )
    h = specfun.h_of_s(s).value
    factor = 2.0 * math.pi * h ** (1.0 / (2.0 * s))
    log_factor_prime = (
        specfun.h_prime(s).value / (2.0 * s * h)
        - math.log(h) / (2.0 * s ** 2)
    )
    return factor * (dE1_ds(s, T) + e1 * log_factor_prime)


def dE4_at_half(T: float) -> float:
    """Return the sign-carrying limit of dE4/ds as s -> 1/2.

    ln T + ln 6 + 12ζ′(-1) + (6/π²)ζ′(2)
    """
    T = positive(T, "T")
    return (
        math.log(T)
        + math.log(6.0)
        + 12.0 * specfun.zeta_prime(-1.0).value
        + 6.0 / math.pi ** 2 * specfun.zeta_prime(2.0).value
    )


def m_of_s(s) -> float:
    """Return m(s) = ζ′(2s) / ζ(2s) for s in (1/2, 1]."""
    s = _unit_closed(s)
    if s <= 0.5:
        raise DomainError(f"m(s) needs s > 1/2, got {s}", "s", s)
    return specfun.zeta_prime(2.0 * s).value / specfun.zeta(2.0 * s).value


def dG1_ds(s, L: float, T: float) -> float:
    """Return dG1/ds."""
    s = _unit_closed(s)
    L = positive(L, "L")
    T = positive(T, "T")
    prefactor = T * specfun.gamma(1.0 + 2.0 * s).value / (
        math.pi * L ** (1.0 + 2.0 * s)
    )
    psi = specfun.digamma(1.0 + 2.0 * s).value
    return prefactor * (
        sin_pi(s) * (psi - math.log(L)) + 0.5 * math.pi * cos_pi(s)
    )


def dG2_ds(s, L: float, T: float) -> float:
    """Return dG2/ds."""
    s = _unit_closed(s)
    L = positive(L, "L")
    T = positive(T, "T")
    zeta_value = specfun.zeta(1.0 + 2.0 * s).value
    log_derivative = specfun.zeta_prime(1.0 + 2.0 * s).value / zeta_value
    return -T / (2.0 * L ** (1.0 + 2.0 * s) * zeta_value) * (
        math.log(L) + log_derivative
    )


def P_G3(s, L: float, T: float) -> float:
    """Return the sign-carrying bracket of dG3/ds.

    ζ(1+2s)(-ln L sin(πs) + (π/2)cos(πs) + sin(πs)ψ(1+2s))
    + sin(πs)ζ′(1+2s) - ζ(1+2s) sin(πs) ζ′(2s)/ζ(2s)

    T does not enter the bracket; it is accepted so every derivative shares
    the (s, L, T) signature.
    """
    s = _half1(s)
    L = positive(L, "L")
    positive(T, "T")
    sine, cosine = sin_pi(s), cos_pi(s)
    zeta_shift = specfun.zeta(1.0 + 2.0 * s).value
    psi = specfun.digamma(1.0 + 2.0 * s).value
    return (
        zeta_shift * (-math.log(L) * sine + 0.5 * math.pi * cosine + sine * psi)
        + sine * specfun.zeta_prime(1.0 + 2.0 * s).value
        - zeta_shift * sine * m_of_s(s)
    )


def dG3_ds(s, L: float, T: float) -> float:
    """Return dG3/ds = T Γ(1+2s) P_G3 / (π L^(1+2s) ζ(2s))."""
    s = _half1(s)
    L = positive(L, "L")
    T = positive(T, "T")
    return (
        T * specfun.gamma(1.0 + 2.0 * s).value * P_G3(s, L, T)
        / (math.pi * L ** (1.0 + 2.0 * s) * specfun.zeta(2.0 * s).value)
    )


def dG4_ds(s, L: float, T: float) -> float:
    """Return dG4/ds = -T (ln L + m(s)) / (2 L^(1+2s) ζ(2s))."""
    s = _half1(s)
    L = positive(L, "L")
    T = positive(T, "T")
    return -T / (2.0 * L ** (1.0 + 2.0 * s) * specfun.zeta(2.0 * s).value) * (
        math.log(L) + m_of_s(s)
    )
