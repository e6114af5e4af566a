"""Fractional heat kernel and the Lévy-walk diffusion coefficient."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable

from scipy import special

from . import specfun
from .const import DEFAULT_QUADRATURE
from .exceptions import DivergenceError, DomainError
from .models import (
    CutoffPolicy,
    DomainTag,
    FractionalExponent,
    KernelPoint,
    KernelValue,
    QuadratureSpec,
    positive,
)
from .quadrature import adaptive_quad
from .utils import cos_pi, sin_pi


_LOGGER = logging.getLogger(__name__)


def _exponent(s, domain_tag: DomainTag = DomainTag.UNIT_CLOSED) -> float:
    return FractionalExponent.coerce(s, domain_tag).s


def kappa_s(s: FractionalExponent | float) -> float:
    """Return κ_s = (1/2π)(-1/(2ζ(-2s)))^(1/(2s)).

    Raises
    ------
    DivergenceError
        At s = 1, where ζ(-2) = 0 sends κ_s to infinity.

    """
    s = _exponent(s)
    h = specfun.h_of_s(s).value
    if h <= 0.0:
        raise DivergenceError(f"kappa_s diverges at s={s}")
    return (1.0 / h) ** (1.0 / (2.0 * s)) / (2.0 * math.pi)


def kappa_s_reflection_form(s: FractionalExponent | float) -> float:
    """Return κ_s = (-cos(πs)Γ(-2s)/ζ(1+2s))^(1/(2s)).

    Undefined at s = 1/2, where cos(πs)Γ(-2s) is indeterminate.
    """
    s = _exponent(s, DomainTag.FULL01)
    if s == 0.5:
        raise DomainError("the reflection form of kappa_s needs s != 1/2", "s", s)
    base = (
        -cos_pi(s)
        * specfun.gamma(-2.0 * s).value
        / specfun.zeta(1.0 + 2.0 * s).value
    )
    return base ** (1.0 / (2.0 * s))


def kernel_width(s: float, t: float, kappa: float) -> float:
    """Return the kernel length scale κ t^(1/(2s))."""
    return kappa * t ** (1.0 / (2.0 * s))


def u_origin_closed(s: FractionalExponent | float, t: float, kappa: float) -> float:
    """Return u(0,t) = Γ(1/(2s)) / (2πκ s t^(1/(2s)))."""
    s = _exponent(s)
    t = positive(t, "t")
    kappa = positive(kappa, "kappa")
    return float(special.gamma(1.0 / (2.0 * s))) / (
        2.0 * math.pi * kappa * s * t ** (1.0 / (2.0 * s))
    )


def tail_coefficient(s: FractionalExponent | float, t: float, kappa: float) -> float:
    """Return lim |x|^(1+2s) u(x,t) = κ^(2s) t Γ(1+2s) sin(πs) / π."""
    s = _exponent(s)
    t = positive(t, "t")
    kappa = positive(kappa, "kappa")
    return (
        kappa ** (2.0 * s) * t * float(special.gamma(1.0 + 2.0 * s))
        * sin_pi(s) / math.pi
    )


def _tail_value(s: float, t: float, kappa: float, x: float) -> KernelValue:
    value = tail_coefficient(s, t, kappa) / x ** (1.0 + 2.0 * s)
    # Relative size of the next term of the large-|x| expansion.
    y = x / kernel_width(s, t, kappa)
    ratio = (
        float(special.gamma(1.0 + 4.0 * s))
        * abs(cos_pi(s))
        / float(special.gamma(1.0 + 2.0 * s))
    )
    return KernelValue(value, abs(value) * ratio * y ** (-2.0 * s), True)


def _frequency_cutoff(s: float, width: float, q: QuadratureSpec) -> float:
    """Return the truncation point θ★ of the dimensionless integral."""
    if q.cutoff_policy is CutoffPolicy.FIXED:
        return 2.0 * math.pi * width * q.cutoff_value
    tol = 1e-2 * min(q.abs_tol, q.rel_tol)
    return math.log(1.0 / tol) ** (1.0 / (2.0 * s))


def envelope_remainder(two_s: float, theta_star: float) -> float:
    """Return ∫_θ★^∞ exp(-θ^(2s)) dθ."""
    shape = 1.0 / two_s
    return float(
        special.gamma(shape) * special.gammaincc(shape, theta_star ** two_s)
    ) / two_s


def u_eval(p: KernelPoint, q: QuadratureSpec = DEFAULT_QUADRATURE) -> KernelValue:
    """Evaluate u(x,t) = 2∫₀^∞ exp(-(2πκξ)^(2s) t) cos(2πxξ) dξ.

    With θ = 2πκ t^(1/(2s)) ξ and y = x / (κ t^(1/(2s))) the integral
    becomes u = I(y) / (πκ t^(1/(2s))) with
    I(y) = ∫₀^θ★ exp(-θ^(2s)) cos(yθ) dθ plus an envelope remainder.
    For |y| > 1 the integral is integrated by parts first,
    I(y) = (2s/y) ∫ θ^(2s-1) exp(-θ^(2s)) sin(yθ) dθ, which removes one
    order of cancellation.

    Parameters
    ----------
    p : KernelPoint
        Evaluation point.
    q : QuadratureSpec, optional
        Tolerances. The default is DEFAULT_QUADRATURE.

    Raises
    ------
    QuadratureError
        If the integration does not converge within q.max_subdivisions.

    Returns
    -------
    KernelValue
        Value, committed error bound and the tail-mode flag.

    """
    s, t, kappa = p.s.s, p.t, p.kappa
    x = abs(p.x)
    two_s = 2.0 * s
    width = kernel_width(s, t, kappa)
    scale = 1.0 / (math.pi * width)
    y = x / width

    if q.asymptotic_cutoff is not None and y > q.asymptotic_cutoff:
        return _tail_value(s, t, kappa, x)

    theta_star = _frequency_cutoff(s, width, q)
    epsabs = q.abs_tol / scale

    if y == 0.0:
        result = adaptive_quad(
            lambda th: math.exp(-th ** two_s),
            0.0, theta_star, epsabs, q.rel_tol, q.max_subdivisions,
        )
        integral = result.value
        remainder = envelope_remainder(two_s, theta_star)
    elif y <= 1.0:
        result = adaptive_quad(
            lambda th: math.exp(-th ** two_s),
            0.0, theta_star, epsabs, q.rel_tol, q.max_subdivisions,
            weight="cos", wvar=y,
        )
        integral = result.value
        remainder = envelope_remainder(two_s, theta_star)
    else:
        result = adaptive_quad(
            lambda th: th ** (two_s - 1.0) * math.exp(-th ** two_s),
            0.0, theta_star, epsabs * y / two_s, q.rel_tol, q.max_subdivisions,
            weight="sin", wvar=y,
        )
        integral = two_s / y * result.value
        result = result._replace(abs_error=two_s / y * result.abs_error)
        remainder = math.exp(-theta_star ** two_s) / y

    _LOGGER.debug(
        f"u({p.x}, {t}; s={s}, kappa={kappa}): theta*={theta_star}, "
        f"y={y}, subdivisions={result.subdivisions}"
    )
    return KernelValue(
        scale * integral,
        scale * (result.abs_error + remainder),
        False,
    )


def kernel_profile(
        s: FractionalExponent | float,
        t: float,
        kappa: float,
        xs: Iterable[float],
        q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> list[tuple[float, float]]:
    """Return (x, u(x,t)) rows over an x-grid."""
    s = FractionalExponent.coerce(s, DomainTag.UNIT_CLOSED)
    return [
        (float(x), u_eval(KernelPoint(float(x), t, s, kappa), q).value)
        for x in xs
    ]
