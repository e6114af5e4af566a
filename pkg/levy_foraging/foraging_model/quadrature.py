"""Adaptive quadrature with a bounded attempt loop."""

from __future__ import annotations

import logging
from typing import Callable, NamedTuple

from scipy import integrate

from .const import INITIAL_SUBDIVISIONS
from .exceptions import QuadratureError


_LOGGER = logging.getLogger(__name__)

# A flagged run is still accepted inside this multiple of the request.
_ACCEPTANCE_FACTOR = 10.0


class QuadResult(NamedTuple):
    """Integral value, QUADPACK error estimate and subintervals used."""

    value: float
    abs_error: float
    subdivisions: int


def subdivision_ladder(max_subdivisions: int) -> list[int]:
    """Return the subdivision limits tried by successive attempts."""
    limit = min(INITIAL_SUBDIVISIONS, max_subdivisions)
    limits = [limit]
    while limit < max_subdivisions:
        limit = min(2 * limit, max_subdivisions)
        limits.append(limit)
    return limits


def adaptive_quad(
        func: Callable[[float], float],
        a: float,
        b: float,
        epsabs: float,
        epsrel: float,
        max_subdivisions: int,
        weight: str | None = None,
        wvar: float | None = None,
) -> QuadResult:
    """Integrate func over [a, b] with scipy's QUADPACK wrappers.

    Parameters
    ----------
    func : Callable
        Integrand.
    a, b : float
        Integration limits.
    epsabs, epsrel : float
        Absolute and relative tolerances.
    max_subdivisions : int
        Largest subdivision limit the attempt loop may reach.
    weight : str, optional
        ``"cos"`` or ``"sin"`` for oscillatory weights. The default is None.
    wvar : float, optional
        Angular frequency of the weight. The default is None.

    Raises
    ------
    QuadratureError
        If the last attempt still reports a non-converged integral.

    Returns
    -------
    QuadResult
        Value, error estimate and number of subintervals.

    """
    kwargs = {"epsabs": epsabs, "epsrel": epsrel, "full_output": 1}
    if weight is not None:
        kwargs.update(weight=weight, wvar=wvar)

    limits = subdivision_ladder(max_subdivisions)
    for attempt, limit in enumerate(limits, start=1):
        _base_msg = f"Quadrature attempt #{attempt} on [{a}, {b}] limit={limit}"
        if weight is not None:
            kwargs["maxp1"] = 50 * attempt
        value, abs_error, info, *message = integrate.quad(
            func, a, b, limit=limit, **kwargs
        )
        requested = max(epsabs, epsrel * abs(value))
        if not message or abs_error <= _ACCEPTANCE_FACTOR * requested:
            _LOGGER.debug(f"{_base_msg}: {value} +/- {abs_error}")
            return QuadResult(value, abs_error, int(info.get("last", 0)))

        if attempt >= len(limits):
            _LOGGER.debug(f"{_base_msg}: failed: {message[0]}")
            raise QuadratureError(
                f"quadrature did not converge on [{a}, {b}]: {message[0]}",
                abs_error=abs_error,
                subdivisions=limit,
            )
        _LOGGER.debug(f"{_base_msg}: retrying: {message[0]}")

    raise QuadratureError("no quadrature attempt was made")
