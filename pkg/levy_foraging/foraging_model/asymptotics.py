"""Parameter ladders checking the large-T and large-L optimum claims."""

from __future__ import annotations

import logging
import math
from enum import Enum
from typing import Callable

from .const import DEFAULT_SOLVER, G5_ARGMAX_REFERENCE, G6_ARGMAX_REFERENCE
from .exceptions import ForagingError
from .models import (
    BoundarySide,
    ExtremumKind,
    Family,
    FunctionalId,
    ScenarioParams,
    SolverSpec,
    SuiteReport,
)
from .optimize import (
    bracket_G1,
    bracket_G3,
    find_critical_points,
    locate_supremum,
    sbar_T,
    scan_interval,
    solve_sL_G4,
)


_LOGGER = logging.getLogger(__name__)

# Config --->
E1_LADDER = (1e3, 1e4, 1e5)
E2_LADDER = (1e4, 1e8, 1e16)
DISTANCE_LADDER = (1e2, 1e4, 1e6)
BRACKET_DISTANCES = (1e3, 1e6)
G4_LADDER = (1.5, 1e2, 1e4, 1e6)
E3_SWITCH_HORIZONS = (1.5, 1.7)
E4_SWITCH_HORIZONS = (2.0, 3.0)
ARGMAX_TOLERANCE = 1e-3
S_L_AGREEMENT = 1e-6


class Claim(Enum):
    """Asymptotic claims checked by asymptotic_suite."""

    E1_MINIMUM = "e1-minimum"
    E2_EXTREMA = "e2-extrema"
    G1_ARGMAX = "g1-argmax"
    G2_ARGMAX = "g2-argmax"
    G3_ARGMAX = "g3-argmax"
    G4_ARGMAX = "g4-argmax"
    E3_SWITCH = "e3-switch"
    E4_SWITCH = "e4-switch"
    CONSTRAINED_ARGMAX = "constrained-argmax"
    H_SUPREMUM = "h-supremum"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str) and value in CLAIM_ALIASES:
            return cls(CLAIM_ALIASES[value])
        return None


CLAIM_ALIASES = {
    "UNST": Claim.E1_MINIMUM.value,
    "UNST2": Claim.E2_EXTREMA.value,
    "SLL1": Claim.G1_ARGMAX.value,
    "SLL1K": Claim.G2_ARGMAX.value,
    "SLL": Claim.G3_ARGMAX.value,
    "ASOG4": Claim.G4_ARGMAX.value,
    "E3switch": Claim.E3_SWITCH.value,
    "E4switch": Claim.E4_SWITCH.value,
    "CONSTRAINED": Claim.CONSTRAINED_ARGMAX.value,
    "HSUP": Claim.H_SUPREMUM.value,
}


def _strictly_decreasing(values) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


def _strictly_increasing(values) -> bool:
    return all(b > a for a, b in zip(values, values[1:]))


def _maxima(fid: FunctionalId, p: ScenarioParams, spec: SolverSpec):
    return [
        point for point in find_critical_points(fid, p, spec)
        if point.kind is ExtremumKind.MAXIMUM
    ]


def _argmax(fid: FunctionalId, p: ScenarioParams, spec: SolverSpec) -> float:
    """Return the location of the largest interior maximum."""
    maxima = _maxima(fid, p, spec)
    if not maxima:
        raise ForagingError(f"{fid} has no interior maximum for {p}")
    return max(maxima, key=lambda point: point.value).s_star


def _e1_minimum(report: SuiteReport, spec: SolverSpec) -> None:
    fid = FunctionalId(Family.E, 1)
    located, values = [], []
    for T in E1_LADDER:
        points = find_critical_points(fid, ScenarioParams(T), spec)
        upper = sbar_T(T)
        passed = (
            len(points) == 1
            and points[0].kind is ExtremumKind.MINIMUM
            and 0.5 < points[0].s_star < upper
        )
        report.add(
            f"T={T:g}",
            passed,
            f"minima={[p.s_star for p in points]} sbar_T={upper}",
            [p.s_star for p in points],
        )
        if passed:
            located.append(points[0].s_star)
            values.append(points[0].value)

    report.add(
        "trend",
        len(located) == len(E1_LADDER)
        and _strictly_decreasing(located)
        and _strictly_decreasing(values),
        f"s_T={located} E1(s_T)={values}",
        located,
    )


def _e2_extrema(report: SuiteReport, spec: SolverSpec) -> None:
    fid = FunctionalId(Family.E, 2)
    minima, maxima = [], []
    for T in E2_LADDER:
        points = find_critical_points(fid, ScenarioParams(T), spec)
        lows = [p.s_star for p in points if p.kind is ExtremumKind.MINIMUM]
        highs = [p.s_star for p in points if p.kind is ExtremumKind.MAXIMUM]
        passed = bool(lows) and bool(highs) and lows[0] < highs[-1]
        report.add(
            f"T={T:g}",
            passed,
            f"minima={lows} maxima={highs}",
            [p.s_star for p in points],
        )
        if passed:
            minima.append(lows[0])
            maxima.append(highs[-1])

    report.add(
        "trend",
        len(minima) == len(E2_LADDER)
        and _strictly_decreasing(minima)
        and _strictly_increasing(maxima),
        f"local minima={minima} local maxima={maxima}",
        minima + maxima,
    )


def _bracketed_argmax(
        report: SuiteReport,
        spec: SolverSpec,
        fid: FunctionalId,
        bracket: Callable[[float], tuple[float, float]] | None,
) -> None:
    located = []
    lower, upper = scan_interval(fid, spec)
    for L in DISTANCE_LADDER:
        s_star = _argmax(fid, ScenarioParams(1.0, L), spec)
        located.append(s_star)
        report.add(
            f"L={L:g}",
            math.isfinite(s_star) and lower < s_star < upper,
            f"argmax={s_star} domain=({lower}, {upper})",
            [s_star],
        )

    report.add(
        "trend", _strictly_decreasing(located), f"argmax={located}", located
    )

    if bracket is None:
        return
    for L in BRACKET_DISTANCES:
        lower, upper = bracket(L)
        points = find_critical_points(fid, ScenarioParams(1.0, L), spec)
        inside = bool(points) and all(
            lower < p.s_star < upper for p in points
        )
        report.add(
            f"bracket-L={L:g}",
            inside,
            f"critical={[p.s_star for p in points]} bracket=({lower}, {upper})",
            [p.s_star for p in points],
        )


def _g4_argmax(report: SuiteReport, spec: SolverSpec) -> None:
    fid = FunctionalId(Family.G, 4)
    located = []
    for L in G4_LADDER:
        p = ScenarioParams(1.0, L)
        if L < 1.7:
            record = locate_supremum(fid, p, spec)
            report.add(
                f"L={L:g}",
                record.side is BoundarySide.RIGHT and not _maxima(fid, p, spec),
                f"supremum at s={record.s} side={record.side}",
                [record.s],
            )
            continue
        s_star = _argmax(fid, p, spec)
        root = solve_sL_G4(L, spec).s_star
        located.append(s_star)
        report.add(
            f"L={L:g}",
            abs(s_star - root) < S_L_AGREEMENT,
            f"argmax={s_star} s_L={root}",
            [s_star, root],
        )

    report.add(
        "trend", _strictly_decreasing(located), f"s_L={located}", located
    )


def _boundary_switch(
        report: SuiteReport,
        spec: SolverSpec,
        index: int,
        horizons: tuple[float, float],
        side_above: BoundarySide | None,
) -> None:
    """Check the supremum side on both sides of a regime switch.

    Below the switch the supremum sits at s = 1/2. Above it the supremum
    sits on side_above, None standing for an interior maximum.
    """
    fid = FunctionalId(Family.E, index)
    below, above = horizons
    record = locate_supremum(fid, ScenarioParams(below), spec)
    report.add(
        f"T={below:g}",
        record.side is BoundarySide.LEFT,
        f"supremum at s={record.s} side={record.side}",
        [record.s],
    )
    record = locate_supremum(fid, ScenarioParams(above), spec)
    report.add(
        f"T={above:g}",
        record.side is side_above,
        f"supremum at s={record.s} side={record.side}",
        [record.s],
    )


def _constrained_argmax(report: SuiteReport, spec: SolverSpec) -> None:
    for index, reference in (
        (5, G5_ARGMAX_REFERENCE),
        (6, G6_ARGMAX_REFERENCE),
    ):
        s_star = _argmax(
            FunctionalId(Family.G_CONSTRAINED, index), ScenarioParams(1.0), spec
        )
        report.add(
            f"g{index}",
            abs(s_star - reference) < ARGMAX_TOLERANCE,
            f"argmax={s_star} expected={reference}",
            [s_star],
        )


def _h_supremum(report: SuiteReport, spec: SolverSpec) -> None:
    for index in range(1, 7):
        record = locate_supremum(
            FunctionalId(Family.H, index), ScenarioParams(1.0, 1.0), spec
        )
        report.add(
            f"H{index}",
            record.side is BoundarySide.LEFT,
            f"supremum at s={record.s} side={record.side}",
            [record.s],
        )


_LADDERS = {
    Claim.E1_MINIMUM: _e1_minimum,
    Claim.E2_EXTREMA: _e2_extrema,
    Claim.G1_ARGMAX: lambda r, spec: _bracketed_argmax(
        r, spec, FunctionalId(Family.G, 1), bracket_G1
    ),
    Claim.G2_ARGMAX: lambda r, spec: _bracketed_argmax(
        r, spec, FunctionalId(Family.G, 2), None
    ),
    Claim.G3_ARGMAX: lambda r, spec: _bracketed_argmax(
        r, spec, FunctionalId(Family.G, 3), bracket_G3
    ),
    Claim.G4_ARGMAX: _g4_argmax,
    Claim.E3_SWITCH: lambda r, spec: _boundary_switch(
        r, spec, 3, E3_SWITCH_HORIZONS, BoundarySide.RIGHT
    ),
    Claim.E4_SWITCH: lambda r, spec: _boundary_switch(
        r, spec, 4, E4_SWITCH_HORIZONS, None
    ),
    Claim.CONSTRAINED_ARGMAX: _constrained_argmax,
    Claim.H_SUPREMUM: _h_supremum,
}


def asymptotic_suite(
        claim: Claim | str,
        spec: SolverSpec = DEFAULT_SOLVER,
) -> SuiteReport:
    """Run the parameter ladder of a claim.

    Each rung is reported with the extrema it located. A library failure
    inside the ladder is recorded as a failed rung. Besides the Claim
    values, the names of CLAIM_ALIASES are accepted.
    """
    claim = Claim(claim)
    report = SuiteReport(claim.value)
    try:
        _LADDERS[claim](report, spec)
    except ForagingError as err:
        _LOGGER.debug(f"Claim {claim.value} aborted: {err}")
        report.add("error", False, str(err))
    return report
