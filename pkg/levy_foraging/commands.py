"""Verb implementations of the command-line tool.

Each ``run_*`` function takes the validated options of its verb, prints
its report to standard output and returns the exit code.
"""

from __future__ import annotations

import logging

import numpy as np

from .const import (
    CONF_FORMAT,
    CONF_FUNCTIONAL,
    CONF_GRID_POINTS,
    CONF_KAPPA_MODE,
    CONF_L,
    CONF_ORACLE,
    CONF_OUT,
    CONF_PARAMETER,
    CONF_S,
    CONF_S_MAX,
    CONF_S_MIN,
    CONF_S_TOL,
    CONF_STEPS,
    CONF_SUITE,
    CONF_T,
    CONF_TIME,
    CONF_X_MAX,
    CONF_X_MIN,
    EXIT_OK,
    FORMAT_JSON,
    SUITE_ORACLES,
)
from .coordinator import VerificationCoordinator
from .exceptions import UsageError, VerificationFailed
from .foraging_model.const import DEFAULT_SOLVER
from .foraging_model.functionals import get_scenario
from .foraging_model.kernel import kappa_s, kernel_profile
from .foraging_model.models import KappaMode, ScenarioParams, SolverSpec
from .foraging_model.optimize import (
    find_critical_points,
    find_Lstar,
    find_Tstar,
    locate_supremum,
    scan_interval,
)
from .tables import KERNEL_TABLE, SWEEP_TABLE, SweepTable, format_number
from .verify import CheckResult, Verifier


_LOGGER = logging.getLogger(__name__)


def _scenario_params(options: dict) -> ScenarioParams:
    return ScenarioParams(options[CONF_T], options[CONF_L])


def _raise_on_failures(results: list[CheckResult]) -> int:
    if failed := [r.check_id for r in results if not r.passed]:
        raise VerificationFailed(failed)
    return EXIT_OK


def run_eval(options: dict) -> int:
    """Print one functional value, ``inf`` for the infinity marker."""
    fid = options[CONF_FUNCTIONAL]
    scenario = get_scenario(_scenario_params(options))
    result = scenario.evaluate(fid, options[CONF_S])
    if not result.meaningful:
        _LOGGER.debug(f"{fid} at s={options[CONF_S]} has no physical meaning")
    print(format_number(result.value))
    return EXIT_OK


def run_sweep(options: dict) -> int:
    """Write a functional over an s-grid to CSV, standard output without --out.

    The requested range is clamped to the functional's domain shrunk by
    the solver boundary margin, so no row holds the infinity marker.
    """
    fid = options[CONF_FUNCTIONAL]
    p = _scenario_params(options)
    lower, upper = scan_interval(fid, DEFAULT_SOLVER)
    s_min = max(options.get(CONF_S_MIN, lower), lower)
    s_max = min(options.get(CONF_S_MAX, upper), upper)
    if s_min >= s_max:
        raise UsageError(
            f"sweep: range [{s_min}, {s_max}] is empty inside the domain "
            f"{fid.domain_tag.value} of {fid}"
        )

    scenario = get_scenario(p)
    evaluate = scenario.evaluator(fid)
    rows = [
        (float(s), evaluate(float(s)).value)
        for s in np.linspace(s_min, s_max, options[CONF_STEPS])
    ]
    table = SweepTable(
        SWEEP_TABLE,
        rows,
        {
            "functional": str(fid),
            "T": p.T,
            "L": p.L,
            "kappa_mode": options[CONF_KAPPA_MODE].value,
        },
    )
    if CONF_OUT not in options:
        print(table.render(), end="")
        return EXIT_OK
    path = table.write(options[CONF_OUT])
    _LOGGER.debug(f"Sweep of {fid} over [{s_min}, {s_max}] written to {path}")
    return EXIT_OK


def run_optimize(options: dict) -> int:
    """Print the critical points of a functional and its supremum."""
    fid = options[CONF_FUNCTIONAL]
    p = _scenario_params(options)
    spec = SolverSpec(
        s_tol=options[CONF_S_TOL], grid_points=options[CONF_GRID_POINTS]
    )
    for point in find_critical_points(fid, p, spec):
        print(
            f"{point.kind.value} s_star={format_number(point.s_star)} "
            f"value={format_number(point.value)} "
            f"residual={format_number(point.residual)}"
        )
    record = locate_supremum(fid, p, spec)
    side = record.side.value if record.side else "interior"
    print(
        f"sup s={format_number(record.s)} value={format_number(record.value)} "
        f"at={side}"
    )
    return EXIT_OK


def run_bifurcation(options: dict) -> int:
    """Print T★ and/or L★ with their sign-change cross-checks."""
    parameter = options[CONF_PARAMETER]
    finders = []
    if parameter in ("tstar", "all"):
        finders.append(find_Tstar)
    if parameter in ("lstar", "all"):
        finders.append(find_Lstar)
    for finder in finders:
        result = finder()
        print(
            f"{result.parameter.value} "
            f"closed={format_number(result.critical_value)} "
            f"sign_change={format_number(result.cross_check_value)} "
            f"rel_diff={format_number(result.relative_disagreement)}"
        )
    return EXIT_OK


def run_kernel(options: dict) -> int:
    """Write u(x,t) over an x-grid to CSV."""
    s = options[CONF_S]
    mode = options[CONF_KAPPA_MODE]
    kappa = kappa_s(s) if mode is KappaMode.LEVY_WALK else 1.0
    xs = np.linspace(options[CONF_X_MIN], options[CONF_X_MAX], options[CONF_STEPS])
    table = SweepTable(
        KERNEL_TABLE,
        kernel_profile(s, options[CONF_TIME], kappa, xs),
        {
            "s": s,
            "t": options[CONF_TIME],
            "kappa_mode": mode.value,
            "kappa": kappa,
        },
    )
    table.write(options[CONF_OUT])
    return EXIT_OK


def run_oracle_check(options: dict) -> int:
    """Print the oracle grid comparisons.

    Raises
    ------
    VerificationFailed
        If an oracle misses its tolerance.

    """
    oracle = options[CONF_ORACLE]
    verifier = Verifier()
    if oracle == "all":
        checks = verifier.checks_for(SUITE_ORACLES)
    else:
        checks = [getattr(verifier, f"check_oracle_{oracle}")]
    results = sorted(
        (result for check in checks for result in check()),
        key=lambda result: result.check_id,
    )
    for result in results:
        print(result.to_text())
    return _raise_on_failures(results)


def run_verify(options: dict) -> int:
    """Run a verification suite and print one line per check.

    Raises
    ------
    VerificationFailed
        If any check fails.

    """
    coordinator = VerificationCoordinator(options[CONF_SUITE])
    results = coordinator.run()
    for result in results:
        if options[CONF_FORMAT] == FORMAT_JSON:
            print(result.to_json().decode())
        else:
            print(result.to_text())
    return _raise_on_failures(results)
