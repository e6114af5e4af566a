"""Testing module."""

import logging
import math

import pytest

from levy_foraging.foraging_model import asymptotics
from levy_foraging.foraging_model.asymptotics import (
    CLAIM_ALIASES,
    Claim,
    asymptotic_suite,
)
from levy_foraging.foraging_model.const import (
    DEFAULT_SOLVER,
    L_STAR_REFERENCE,
    T_STAR_REFERENCE,
)
from levy_foraging.foraging_model.exceptions import DomainError, SolverError
from levy_foraging.foraging_model.models import (
    BifurcationMethod,
    BifurcationParameter,
    BoundarySide,
    CriticalPoint,
    ExtremumKind,
    FunctionalId,
    ScenarioParams,
    SolverSpec,
    SupremumRecord,
)
from levy_foraging.foraging_model.functionals import get_scenario
from levy_foraging.foraging_model.optimize import (
    bracket_G1,
    bracket_G3,
    derivative_function,
    find_critical_points,
    find_Lstar,
    find_Tstar,
    has_interior_maximum,
    locate_supremum,
    lstar_closed_form,
    sbar_T,
    scan_interval,
    solve_sL_G4,
    tstar_closed_form,
)

_LOGGER = logging.getLogger(__name__)


def test_e1_minimum():
    """Test the unique E1 minimum below sbar_T for a large horizon."""
    # Config --->
    T = 1e5

    points = find_critical_points("E1", ScenarioParams(T))

    assert len(points) == 1
    point = points[0]
    assert point.kind is ExtremumKind.MINIMUM
    assert 0.5 < point.s_star < sbar_T(T)
    lower, upper = point.bracket
    assert lower <= point.s_star <= upper
    assert point.residual <= 1e-8


def test_g4_maximum_matches_root():
    """Test the G4 grid maximum against the root of ln L + m(s)."""
    # Config --->
    L = 10.0

    points = find_critical_points("G4", ScenarioParams(1.0, L))
    root = solve_sL_G4(L)

    assert [p.kind for p in points] == [ExtremumKind.MAXIMUM]
    assert points[0].s_star == pytest.approx(root.s_star, abs=1e-6)
    assert root.residual < 1e-8


def test_constrained_argmax():
    """Test the g5 and g6 maximizers."""
    for name, reference in (("g5c", 0.80261), ("g6c", 0.861187)):
        maxima = [
            p for p in find_critical_points(name, ScenarioParams(1.0))
            if p.kind is ExtremumKind.MAXIMUM
        ]
        assert len(maxima) == 1
        assert maxima[0].s_star == pytest.approx(reference, abs=1e-3)


def test_supremum_of_h_family():
    """Test that H1 reaches its supremum at s = 1/2."""
    record = locate_supremum("H1", ScenarioParams(1.0, 1.0))
    assert record.side is BoundarySide.LEFT
    assert record.at_boundary


def test_g4_supremum_below_l_star():
    """Test that G4 increases on (1/2, 1) for L < L★."""
    p = ScenarioParams(1.0, 1.7)
    record = locate_supremum("G4", p)
    assert record.side is BoundarySide.RIGHT
    assert not has_interior_maximum(FunctionalId.parse("G4"), p)
    assert has_interior_maximum(FunctionalId.parse("G4"), ScenarioParams(1.0, 2.0))


def test_scan_interval():
    """Test the domain shrunk by the boundary margin."""
    # Config --->
    spec = SolverSpec(boundary_margin=1e-4)

    assert scan_interval(FunctionalId.parse("E1"), spec) == pytest.approx(
        (0.5001, 0.9999), abs=1e-15
    )
    assert scan_interval(FunctionalId.parse("G1"), spec) == pytest.approx(
        (1e-4, 0.9999), abs=1e-15
    )


def test_solver_spec_validation():
    """Test the solver settings constraints."""
    with pytest.raises(DomainError):
        SolverSpec(grid_points=50)
    with pytest.raises(DomainError):
        SolverSpec(s_tol=0.0)
    with pytest.raises(DomainError):
        SolverSpec(boundary_margin=0.2)
    assert SolverSpec(s_tol=1e-10).derivative_step == 1e-7


def test_critical_point_bracket():
    """Test that a critical point lies inside its bracket."""
    with pytest.raises(DomainError):
        CriticalPoint(0.7, 1.0, ExtremumKind.MAXIMUM, (0.5, 0.6), 0.05)


def test_find_tstar():
    """Test T★ by closed form and sign change."""
    result = find_Tstar()

    assert result.parameter is BifurcationParameter.T_STAR
    assert result.method is BifurcationMethod.CLOSED_FORM
    assert result.critical_value == pytest.approx(T_STAR_REFERENCE, abs=1e-6)
    assert result.relative_disagreement < 1e-9
    assert tstar_closed_form() == result.critical_value


def test_find_lstar():
    """Test L★ by closed form and G4 maximum onset."""
    result = find_Lstar()

    assert result.parameter is BifurcationParameter.L_STAR
    assert result.critical_value == pytest.approx(L_STAR_REFERENCE, abs=1e-5)
    assert result.relative_disagreement < 1e-4
    assert lstar_closed_form() == result.critical_value


def test_solve_sL_G4_ladder():
    """Test s_L for growing L."""
    located = [solve_sL_G4(L).s_star for L in (10.0, 1e2, 1e4, 1e8)]
    assert all(b < a for a, b in zip(located, located[1:]))
    assert located[-1] < 0.53
    with pytest.raises(DomainError):
        solve_sL_G4(1.5)


def test_sbar_T():
    """Test sbar_T at T = e^10 and its domain."""
    assert sbar_T(math.exp(10.0)) == pytest.approx(0.565987, abs=1e-6)
    with pytest.raises(DomainError):
        sbar_T(1.0)


def test_brackets():
    """Test the G1 and G3 critical-point brackets."""
    lower, upper = bracket_G1(1e6)
    assert lower == pytest.approx(1.0 / (8.0 * math.log(1e6)), rel=1e-14)
    assert 0.0 < lower < upper < 1.0
    assert bracket_G3(math.exp(4.0)) == pytest.approx((0.5625, 0.6875), rel=1e-12)
    with pytest.raises(DomainError):
        bracket_G3(2.0)


def test_unknown_functional():
    """Test that an unknown name is a domain error."""
    with pytest.raises(DomainError):
        find_critical_points("G9", ScenarioParams(1.0))


def test_e3_switch_claim():
    """Test the E3 supremum switching away from s = 1/2."""
    report = asymptotic_suite(Claim.E3_SWITCH)
    assert report.claim == "e3-switch"
    assert [rung.label for rung in report.rungs] == ["T=1.5", "T=1.7"]
    assert report.passed


def test_claim_error_becomes_failed_rung(monkeypatch):
    """Test that a library error inside a ladder is reported as a rung."""

    def failing(report, spec):
        raise SolverError("not finite", 0.7)

    monkeypatch.setitem(asymptotics._LADDERS, Claim.E1_MINIMUM, failing)
    report = asymptotic_suite("e1-minimum")

    assert not report.passed
    assert report.rungs[-1].label == "error"
    assert "not finite" in report.rungs[-1].detail


def test_unknown_claim():
    """Test that an unknown claim name is rejected."""
    with pytest.raises(ValueError):
        asymptotic_suite("no-such-claim")


@pytest.mark.parametrize(
    "name, T, L", [("E1", 1e5, 1.0), ("G4", 1.0, 10.0), ("g5c", 1.0, 1.0)]
)
def test_critical_point_derivative(name, T, L):
    """Test that the derivative vanishes at a located point to s_tol."""
    # Config --->
    spec = DEFAULT_SOLVER
    offset = 1e-3

    p = ScenarioParams(T, L)
    fid = FunctionalId.parse(name)
    derivative = derivative_function(get_scenario(p), fid, spec)
    points = find_critical_points(fid, p, spec)

    assert points
    for point in points:
        curvature = abs(
            derivative(point.s_star + offset) - derivative(point.s_star - offset)
        ) / (2.0 * offset)
        assert abs(derivative(point.s_star)) <= 10.0 * spec.s_tol * curvature


def test_grid_refinement():
    """Test that doubling the grid leaves the critical points in place."""
    # Config --->
    coarse_spec = SolverSpec()
    fine_spec = SolverSpec(grid_points=2 * coarse_spec.grid_points)

    for name, p in (("E1", ScenarioParams(1e5)), ("G4", ScenarioParams(1.0, 10.0))):
        coarse = find_critical_points(name, p, coarse_spec)
        fine = find_critical_points(name, p, fine_spec)
        assert [c.kind for c in coarse] == [f.kind for f in fine]
        for c, f in zip(coarse, fine):
            assert abs(c.s_star - f.s_star) < 10.0 * coarse_spec.s_tol


def test_claim_aliases():
    """Test that the short claim names resolve to the ladders."""
    for alias, value in CLAIM_ALIASES.items():
        assert Claim(alias) is Claim(value)
    assert Claim("UNST") is Claim.E1_MINIMUM
    assert Claim("E3switch") is Claim.E3_SWITCH


@pytest.mark.parametrize(
    "claim",
    ["UNST", "UNST2", "SLL1", "SLL1K", "SLL", "ASOG4", "E4switch",
     "CONSTRAINED", "HSUP"],
)
def test_claim_ladders(claim):
    """Test that every rung of a claim ladder passes."""
    report = asymptotic_suite(claim)
    assert report.claim == CLAIM_ALIASES[claim]
    assert report.rungs
    failed = [(rung.label, rung.detail) for rung in report.rungs if not rung.passed]
    assert failed == []


@pytest.mark.parametrize("located", [math.nan, 1.0])
def test_argmax_rung_outside_domain(monkeypatch, located):
    """Test that a non-finite or out-of-domain argmax fails its rung."""
    monkeypatch.setattr(asymptotics, "_argmax", lambda fid, p, spec: located)
    report = asymptotic_suite(Claim.G2_ARGMAX)

    assert [rung.label for rung in report.rungs] == [
        "L=100", "L=10000", "L=1e+06", "trend",
    ]
    assert not any(rung.passed for rung in report.rungs)


def test_switch_requires_expected_side(monkeypatch):
    """Test that the supremum above the switch must sit on the expected side."""

    def interior_above_switch(fid, p, spec):
        if p.T in (1.5, 2.0):
            return SupremumRecord(0.5, 1.0, BoundarySide.LEFT)
        return SupremumRecord(0.9, 1.0, None)

    monkeypatch.setattr(asymptotics, "locate_supremum", interior_above_switch)

    e3 = asymptotic_suite(Claim.E3_SWITCH)
    e4 = asymptotic_suite(Claim.E4_SWITCH)
    assert [rung.passed for rung in e3.rungs] == [True, False]
    assert [rung.passed for rung in e4.rungs] == [True, True]
