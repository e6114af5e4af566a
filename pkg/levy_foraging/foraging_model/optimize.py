"""Extrema, suprema and bifurcation constants of the functionals in s."""

from __future__ import annotations

import logging
import math
from typing import Callable

import numpy as np
from scipy import optimize

from . import derivatives, specfun
from .const import DEFAULT_SOLVER, EULER_GAMMA
from .exceptions import DomainError, SolverError
from .functionals import BaseScenario, get_scenario
from .models import (
    BifurcationMethod,
    BifurcationParameter,
    BifurcationResult,
    BoundarySide,
    CriticalPoint,
    ExtremumKind,
    Family,
    FunctionalId,
    ScenarioParams,
    SolverSpec,
    SupremumRecord,
    positive,
)


_LOGGER = logging.getLogger(__name__)

# Bisection tolerances of the bifurcation finders.
_T_STAR_XTOL = 1e-12
_L_STAR_XTOL = 1e-9
_S_L_XTOL = 1e-13

_T_STAR_SEARCH = (1.0, 10.0)
_L_STAR_SEARCH = (1.5, 2.1)

# Coarse scan for the G4 interior-maximum onset. Only the last grid point
# decides, so a short grid and a thin margin are enough.
_ONSET_SOLVER = SolverSpec(s_tol=1e-8, grid_points=201, boundary_margin=1e-8)

_G4 = FunctionalId(Family.G, 4)


def scan_interval(fid: FunctionalId, spec: SolverSpec) -> tuple[float, float]:
    """Return the admissible s-range of fid shrunk by the boundary margin."""
    lower, upper = fid.domain_tag.bounds
    return lower + spec.boundary_margin, upper - spec.boundary_margin


def _log_value_function(
        scenario: BaseScenario,
        fid: FunctionalId,
) -> Callable[[float], float]:
    evaluate = scenario.evaluator(fid)

    def log_value(s: float) -> float:
        value = evaluate(s).value
        if not math.isfinite(value) or value <= 0.0:
            raise SolverError(
                f"{fid} is not finite and positive at s={s}: {value}", s
            )
        return math.log(value)

    return log_value


def derivative_function(
        scenario: BaseScenario,
        fid: FunctionalId,
        spec: SolverSpec = DEFAULT_SOLVER,
) -> Callable[[float], float]:
    """Return a function carrying the sign of d fid / ds.

    The closed form registered on the scenario is used when there is one,
    otherwise the centered difference of the log-value with step
    max(1e-7, s_tol).
    """
    if (closed_form := scenario.derivative(fid)) is not None:
        return closed_form

    log_value = _log_value_function(scenario, fid)
    step = spec.derivative_step

    def centered(s: float) -> float:
        return (log_value(s + step) - log_value(s - step)) / (2.0 * step)

    return centered


def _scan(
        scenario: BaseScenario,
        fid: FunctionalId,
        spec: SolverSpec,
) -> list[CriticalPoint]:
    lower, upper = scan_interval(fid, spec)
    grid = np.linspace(lower, upper, spec.grid_points)
    log_value = _log_value_function(scenario, fid)
    derivative = derivative_function(scenario, fid, spec)

    slopes = np.empty_like(grid)
    for i, s in enumerate(grid):
        log_value(float(s))
        slopes[i] = derivative(float(s))
        if not math.isfinite(slopes[i]):
            raise SolverError(
                f"derivative of {fid} is not finite at s={s}", float(s)
            )

    points = []
    for i in range(spec.grid_points - 1):
        a, b = float(grid[i]), float(grid[i + 1])
        left, right = slopes[i], slopes[i + 1]
        if left == 0.0 or left * right >= 0.0:
            continue
        s_star = optimize.bisect(derivative, a, b, xtol=spec.s_tol)
        bracket = (max(a, s_star - spec.s_tol), min(b, s_star + spec.s_tol))
        kind = ExtremumKind.MAXIMUM if left > 0.0 else ExtremumKind.MINIMUM
        points.append(
            CriticalPoint(
                s_star=s_star,
                value=scenario.evaluate(fid, s_star).value,
                kind=kind,
                bracket=bracket,
                residual=0.5 * (bracket[1] - bracket[0]),
            )
        )
        _LOGGER.debug(f"{fid}: {kind.value} at s={s_star} in [{a}, {b}]")

    return points


def find_critical_points(
        fid: FunctionalId | str,
        p: ScenarioParams,
        spec: SolverSpec = DEFAULT_SOLVER,
) -> list[CriticalPoint]:
    """Locate the interior extrema of a functional in s.

    Scans a uniform grid over the admissible domain shrunk by
    ``spec.boundary_margin``, refines each sign change of the derivative by
    bisection to ``spec.s_tol`` and classifies it by the sign transition.

    Parameters
    ----------
    fid : FunctionalId | str
        Functional to scan.
    p : ScenarioParams
        Horizon and target distance.
    spec : SolverSpec, optional
        Grid and tolerance settings. The default is DEFAULT_SOLVER.

    Raises
    ------
    SolverError
        If the functional or its derivative is not finite at a grid point.

    Returns
    -------
    list[CriticalPoint]
        Critical points ordered by s. Empty for a monotone functional.

    """
    if isinstance(fid, str):
        fid = FunctionalId.parse(fid)
    return _scan(get_scenario(p), fid, spec)


def locate_supremum(
        fid: FunctionalId | str,
        p: ScenarioParams,
        spec: SolverSpec = DEFAULT_SOLVER,
) -> SupremumRecord:
    """Return where fid attains its supremum on the scanned domain.

    The interior maxima compete with the values at both ends of the
    shrunk domain. A boundary winner carries its side.
    """
    if isinstance(fid, str):
        fid = FunctionalId.parse(fid)
    scenario = get_scenario(p)
    lower, upper = scan_interval(fid, spec)
    candidates = [
        SupremumRecord(lower, scenario.evaluate(fid, lower).value, BoundarySide.LEFT),
        SupremumRecord(upper, scenario.evaluate(fid, upper).value, BoundarySide.RIGHT),
    ]
    for point in _scan(scenario, fid, spec):
        if point.kind is ExtremumKind.MAXIMUM:
            candidates.append(
                SupremumRecord(point.s_star, point.value, None, point)
            )
    best = max(candidates, key=lambda record: record.value)
    _LOGGER.debug(f"{fid} supremum at s={best.s} side={best.side}")
    return best


def tstar_closed_form() -> float:
    """Return T★ = exp(-ln 6 - 12ζ′(-1) - (6/π²)ζ′(2))."""
    return math.exp(
        -math.log(6.0)
        - 12.0 * specfun.zeta_prime(-1.0).value
        - 6.0 / math.pi ** 2 * specfun.zeta_prime(2.0).value
    )


def lstar_closed_form() -> float:
    """Return L★ = exp(-ζ′(2)/ζ(2))."""
    return math.exp(-specfun.zeta_prime(2.0).value / specfun.zeta(2.0).value)


def find_Tstar() -> BifurcationResult:
    """Return T★ by closed form, cross-checked by bisecting dE4_at_half."""
    closed = tstar_closed_form()
    crossing = optimize.bisect(
        derivatives.dE4_at_half, *_T_STAR_SEARCH, xtol=_T_STAR_XTOL
    )
    _LOGGER.debug(f"T*: closed form {closed}, sign change {crossing}")
    return BifurcationResult(
        BifurcationParameter.T_STAR,
        closed,
        BifurcationMethod.CLOSED_FORM,
        cross_check_value=crossing,
    )


def has_interior_maximum(
        fid: FunctionalId,
        p: ScenarioParams,
        spec: SolverSpec = DEFAULT_SOLVER,
) -> bool:
    """Return True if the scan finds an interior maximum."""
    return any(
        point.kind is ExtremumKind.MAXIMUM
        for point in find_critical_points(fid, p, spec)
    )


def find_Lstar(spec: SolverSpec = _ONSET_SOLVER) -> BifurcationResult:
    """Return L★ by closed form, cross-checked by the G4 maximum onset.

    The onset is bisected on L in [1.5, 2.1]: below it G4 increases on the
    whole of (1/2, 1), above it the scan finds an interior maximum.
    """
    closed = lstar_closed_form()
    lower, upper = _L_STAR_SEARCH
    if has_interior_maximum(_G4, ScenarioParams(1.0, lower), spec) or not (
        has_interior_maximum(_G4, ScenarioParams(1.0, upper), spec)
    ):
        raise SolverError(f"no G4 maximum onset inside L in {_L_STAR_SEARCH}")

    attempt = 0
    while upper - lower > _L_STAR_XTOL:
        attempt += 1
        middle = 0.5 * (lower + upper)
        if has_interior_maximum(_G4, ScenarioParams(1.0, middle), spec):
            upper = middle
        else:
            lower = middle
        _LOGGER.debug(f"L* bisection #{attempt}: [{lower}, {upper}]")

    onset = 0.5 * (lower + upper)
    return BifurcationResult(
        BifurcationParameter.L_STAR,
        closed,
        BifurcationMethod.CLOSED_FORM,
        cross_check_value=onset,
    )


def solve_sL_G4(L: float, spec: SolverSpec = DEFAULT_SOLVER) -> CriticalPoint:
    """Return the maximizer s_L of G4, the root of ln L + m(s) = 0.

    Parameters
    ----------
    L : float
        Target distance, L > L★.
    spec : SolverSpec, optional
        Supplies the boundary margin. The default is DEFAULT_SOLVER.

    Raises
    ------
    DomainError
        If L <= L★.

    """
    L = positive(L, "L")
    if L <= lstar_closed_form():
        raise DomainError(f"solve_sL_G4 needs L > L*, got {L}", "L", L)

    log_distance = math.log(L)

    def root_function(s: float) -> float:
        return derivatives.m_of_s(s) + log_distance

    lower, upper = scan_interval(_G4, spec)
    if root_function(upper) <= 0.0:
        raise SolverError(
            f"ln L + m(s) does not change sign for L={L} inside the margin",
            upper,
        )
    s_star = optimize.bisect(root_function, lower, upper, xtol=_S_L_XTOL)
    bracket = (max(lower, s_star - _S_L_XTOL), min(upper, s_star + _S_L_XTOL))
    return CriticalPoint(
        s_star=s_star,
        value=get_scenario(ScenarioParams(1.0, L)).G4(s_star).value,
        kind=ExtremumKind.MAXIMUM,
        bracket=bracket,
        residual=abs(root_function(s_star)),
    )


def sbar_T(T: float) -> float:
    """Return s̄_T = (ln T + γ - 2) / (2(ln T + γ - 3)).

    Raises
    ------
    DomainError
        If ln T + γ <= 3.

    """
    T = positive(T, "T")
    shifted = math.log(T) + EULER_GAMMA
    if shifted <= 3.0:
        raise DomainError(f"sbar_T needs ln T + gamma > 3, got T={T}", "T", T)
    return 0.5 * (shifted - 2.0) / (shifted - 3.0)


def bracket_G1(L: float) -> tuple[float, float]:
    """Return (1/(8 ln L), 2/(3(ln L - ψ(3)))), the G1 critical-point range."""
    L = positive(L, "L")
    log_distance = math.log(L)
    shifted = log_distance - specfun.digamma(3.0).value
    if log_distance <= 0.0 or shifted <= 0.0:
        raise DomainError(f"bracket_G1 needs a larger L, got {L}", "L", L)
    lower = 1.0 / (8.0 * log_distance)
    upper = 2.0 / (3.0 * shifted)
    if not 0.0 < lower < upper < 1.0:
        raise DomainError(
            f"bracket_G1 is not a proper sub-interval of (0,1) for L={L}",
            "L",
            L,
        )
    return lower, upper


def bracket_G3(L: float) -> tuple[float, float]:
    """Return 1/2 + (1 ± 1/√ln L) / (2 ln L)."""
    L = positive(L, "L")
    log_distance = math.log(L)
    if log_distance <= 1.0:
        raise DomainError(f"bracket_G3 needs ln L > 1, got L={L}", "L", L)
    epsilon = 1.0 / math.sqrt(log_distance)
    return (
        0.5 + (1.0 - epsilon) / (2.0 * log_distance),
        0.5 + (1.0 + epsilon) / (2.0 * log_distance),
    )
