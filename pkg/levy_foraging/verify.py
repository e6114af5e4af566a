"""Verification checks run by the verify verb."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import orjson

from .const import (
    SUITE_ALIASES,
    SUITE_ALL,
    SUITE_ASYMPTOTICS,
    SUITE_BIFURCATIONS,
    SUITE_E1_DERIVATIVE,
    SUITE_E2_DERIVATIVE,
    SUITE_FUNCTIONALS,
    SUITE_G1_G2_BRACKETS,
    SUITE_G3_BRACKET,
    SUITE_G4_ROOT,
    SUITE_KERNEL,
    SUITE_ORACLES,
    SUITE_SPECFUN,
)
from .foraging_model import derivatives, specfun
from .foraging_model.asymptotics import Claim, asymptotic_suite
from .foraging_model.const import (
    EULER_GAMMA,
    L_STAR_REFERENCE,
    ORACLE_QUADRATURE,
    T_STAR_REFERENCE,
)
from .foraging_model.functionals import (
    eval_functional,
    get_scenario,
    mean_displacement,
    phi0,
)
from .foraging_model.kernel import (
    kappa_s,
    kappa_s_reflection_form,
    tail_coefficient,
    u_eval,
    u_origin_closed,
)
from .foraging_model.models import (
    Family,
    FunctionalId,
    KappaMode,
    KernelPoint,
    ScenarioParams,
    relative_difference,
)
from .foraging_model.optimize import (
    bracket_G1,
    bracket_G3,
    find_Lstar,
    find_Tstar,
    has_interior_maximum,
    lstar_closed_form,
    sbar_T,
    solve_sL_G4,
)
from .foraging_model.oracle import (
    oracle_lattice,
    oracle_moment,
    oracle_phi0,
    oracle_remote,
    oracle_remote_efficiency,
)


_LOGGER = logging.getLogger(__name__)

# Config --->
FD_STEP = 1e-6
FD_TOLERANCE = 1e-5
HALF_OFFSET = 1e-8
SCALING_SEED = 20240607
SCALING_SAMPLES = 20
ORACLE_EXPONENTS = (0.6, 0.75, 0.9)
ORACLE_KAPPAS = (0.5, 1.0, 2.0)
ORACLE_HORIZONS = (1.0, 10.0, 100.0)
REMOTE_DISTANCES = (50.0, 100.0, 200.0)
LATTICE_SPACINGS = (10.0, 50.0, 250.0)
LATTICE_TERMS = 10_000


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single verification check."""

    check_id: str
    expected: float | str
    got: float | str
    tol: float | None
    passed: bool

    def as_dict(self) -> dict:
        return {
            "id": self.check_id,
            "expected": self.expected,
            "got": self.got,
            "tol": self.tol,
            "status": "PASS" if self.passed else "FAIL",
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.check_id} expected={self.expected} got={self.got} "
            f"tol={self.tol} {status}"
        )

    def to_json(self) -> bytes:
        return orjson.dumps(self.as_dict(), option=orjson.OPT_SERIALIZE_NUMPY)


def close(
        check_id: str,
        expected: float,
        got: float,
        tol: float,
        relative: bool = True,
) -> CheckResult:
    """Compare got with expected, relative or absolute."""
    if relative:
        error = relative_difference(got, expected)
    else:
        error = abs(got - expected)
    passed = math.isfinite(got) and error <= tol
    return CheckResult(check_id, expected, got, tol, passed)


def holds(check_id: str, expected: str, got, passed: bool) -> CheckResult:
    """Record a qualitative check."""
    return CheckResult(check_id, expected, got, None, bool(passed))


def central_difference(func: Callable[[float], float], s: float) -> float:
    return (func(s + FD_STEP) - func(s - FD_STEP)) / (2.0 * FD_STEP)


def derivative_close(
        check_id: str,
        func: Callable[[float], float],
        s: float,
        closed: float,
) -> CheckResult:
    """Compare a closed-form derivative with a central difference.

    The tolerance scales with the function value, so points next to a
    critical point are not judged on a vanishing derivative.
    """
    numeric = central_difference(func, s)
    scale = max(abs(numeric), abs(func(s)))
    return close(check_id, numeric, closed, FD_TOLERANCE * scale, relative=False)


def claim_results(claim: Claim) -> list[CheckResult]:
    """Return one check per rung of an asymptotic claim."""
    report = asymptotic_suite(claim)
    return [
        holds(
            f"asymptotics.{report.claim}.{rung.label}",
            "pass",
            rung.detail,
            rung.passed,
        )
        for rung in report.rungs
    ]


def verification_check(_func: Callable | None = None, **kwargs):
    """Verification check decorator.

    Flag the decorated method with the suites it belongs to. The method
    takes no argument and returns a list of CheckResult.
    """
    suites = tuple(kwargs.pop("suites"))

    def decorator(func):
        func.verification_check = suites
        return func

    return decorator if _func is None else decorator(_func)


class BaseVerifier:
    """Base class collecting the verification checks of its subclasses."""

    def __new__(cls, *args, **kwargs):
        """Create a new instance.

        Catch methods having the 'verification_check' attribute and add
        them to the instance's '_verification_checks'.

        """
        instance = super().__new__(cls)
        verification_checks = {}

        for obj in [instance.__class__] + instance.__class__.mro():
            for attr_name, attr_val in obj.__dict__.items():
                if suites := getattr(attr_val, "verification_check", None):
                    verification_checks.setdefault(attr_name, suites)

        instance._verification_checks = verification_checks
        return instance

    def checks_for(self, suite: str) -> list[Callable[[], list[CheckResult]]]:
        """Return the bound checks of a suite, sorted by name.

        The appendixA1..A5 names resolve to the suites they stand for.
        """
        suite = SUITE_ALIASES.get(suite, suite)
        names = sorted(
            name for name, suites in self._verification_checks.items()
            if suite == SUITE_ALL or suite in suites
        )
        _LOGGER.debug(f"Suite {suite}: {names}")
        return [getattr(self, name) for name in names]


class SpecfunChecks(BaseVerifier):
    """Identities of Gamma, digamma, zeta and h."""

    @verification_check(suites=[SUITE_SPECFUN])
    def check_gamma_reflection(self):
        return [
            close(
                f"specfun.gamma_reflection[z={z}]",
                math.pi / math.sin(math.pi * z),
                specfun.gamma(z).value * specfun.gamma(1.0 - z).value,
                1e-12,
            )
            for z in (0.1, 0.3, 0.7, 0.9)
        ]

    @verification_check(suites=[SUITE_SPECFUN])
    def check_gamma_recurrence(self):
        return [
            close(
                f"specfun.gamma_recurrence[z={z}]",
                z * specfun.gamma(z).value,
                specfun.gamma(z + 1.0).value,
                1e-12,
            )
            for z in (0.5, 1.7, 3.2, -0.5)
        ]

    @verification_check(suites=[SUITE_SPECFUN, SUITE_E1_DERIVATIVE])
    def check_digamma_harmonic_identity(self):
        return [
            close(
                f"specfun.digamma_harmonic[x={x:.6g}]",
                -EULER_GAMMA - 1.0 / x - specfun.harmonic_Z(x).value,
                specfun.digamma(x).value,
                1e-10,
            )
            for x in (0.5, 2.0 / 3.0, 1.0, 2.5)
        ]

    @verification_check(suites=[SUITE_SPECFUN])
    def check_zeta_values(self):
        return [
            close("specfun.zeta[2]", math.pi ** 2 / 6.0,
                  specfun.zeta(2.0).value, 1e-13),
            close("specfun.zeta[-1]", -1.0 / 12.0,
                  specfun.zeta(-1.0).value, 1e-13),
            close("specfun.zeta[-2]", 0.0,
                  specfun.zeta(-2.0).value, 1e-15, relative=False),
            close("specfun.zeta_prime[-1]", -0.16542114370045092,
                  specfun.zeta_prime(-1.0).value, 1e-12),
            close("specfun.zeta_prime[2]", -0.93754825431584375,
                  specfun.zeta_prime(2.0).value, 1e-12),
        ]

    @verification_check(suites=[SUITE_SPECFUN, SUITE_E2_DERIVATIVE])
    def check_h_forms(self):
        results = []
        for s in np.linspace(0.55, 0.95, 9):
            s = float(s)
            results.append(
                close(
                    f"specfun.h_forms[s={s:.2f}]",
                    specfun.h_product_form(s).value,
                    specfun.h_of_s(s).value,
                    1e-11,
                )
            )
        return results

    @verification_check(suites=[SUITE_SPECFUN, SUITE_E2_DERIVATIVE])
    def check_h_range(self):
        grid = np.linspace(0.5, 1.0, 102)[1:-1]
        values = [specfun.h_of_s(float(s)).value for s in grid]
        return [
            holds(
                "specfun.h_range",
                "0 < h <= 1/3",
                f"[{min(values)}, {max(values)}]",
                all(0.0 < h <= 1.0 / 3.0 for h in values),
            ),
            holds(
                "specfun.h_decreasing",
                "strictly decreasing",
                f"{len(values)} points",
                all(b < a for a, b in zip(values, values[1:])),
            ),
        ]

    @verification_check(suites=[SUITE_SPECFUN])
    def check_harmonic_range(self):
        grid = np.linspace(0.5, 1.0, 51)
        values = [specfun.harmonic_Z(float(x)).value for x in grid]
        upper = 2.0 * math.log(2.0) - 2.0
        return [
            close("specfun.harmonic_Z[1]", -1.0,
                  specfun.harmonic_Z(1.0).value, 1e-10),
            holds(
                "specfun.harmonic_Z_range",
                f"-1 <= Z <= {upper}",
                f"[{min(values)}, {max(values)}]",
                all(-1.0 - 1e-10 <= z <= upper + 1e-10 for z in values),
            ),
        ]


class KernelChecks(BaseVerifier):
    """Kernel constant and kernel evaluator."""

    @verification_check(suites=[SUITE_KERNEL])
    def check_kappa_forms(self):
        results = []
        for step in range(51, 100):
            s = step / 100.0
            results.append(
                close(
                    f"kernel.kappa_forms[s={s:.2f}]",
                    kappa_s_reflection_form(s),
                    kappa_s(s),
                    1e-10,
                )
            )
        results.append(
            close("kernel.kappa_half", 3.0 / math.pi, kappa_s(0.5), 1e-12)
        )
        return results

    @verification_check(suites=[SUITE_KERNEL])
    def check_kernel_origin(self):
        return [
            close(
                "kernel.origin[s=0.5]",
                1.0 / math.pi,
                u_eval(KernelPoint(0.0, 1.0, 0.5, 1.0)).value,
                1e-8,
                relative=False,
            ),
            close(
                "kernel.origin[s=1]",
                0.5 / math.sqrt(math.pi),
                u_eval(KernelPoint(0.0, 1.0, 1.0, 1.0)).value,
                1e-8,
                relative=False,
            ),
            close(
                "kernel.origin[s=0.75]",
                u_origin_closed(0.75, 1.0, 1.0),
                u_eval(KernelPoint(0.0, 1.0, 0.75, 1.0)).value,
                1e-8,
                relative=False,
            ),
        ]

    @verification_check(suites=[SUITE_KERNEL])
    def check_kernel_scaling(self):
        rng = np.random.default_rng(SCALING_SEED)
        results = []
        for sample in range(SCALING_SAMPLES):
            s = float(rng.uniform(0.55, 0.95))
            x = float(rng.uniform(-5.0, 5.0))
            t = float(rng.uniform(0.5, 2.0))
            stretch = t ** (-1.0 / (2.0 * s))
            direct = u_eval(KernelPoint(x, t, s, 1.0)).value
            scaled = stretch * u_eval(
                KernelPoint(x * stretch, 1.0, s, 1.0)
            ).value
            results.append(
                close(
                    f"kernel.scaling[{sample:02d}]",
                    scaled,
                    direct,
                    1e-8 * max(1.0, abs(scaled)),
                    relative=False,
                )
            )
        return results

    @verification_check(suites=[SUITE_KERNEL])
    def check_tail_law(self):
        results = []
        near, far = 40.0, 80.0
        for s in ORACLE_EXPONENTS:
            two_s = 2.0 * s

            def scaled(x: float) -> float:
                u = u_eval(KernelPoint(x, 1.0, s, 1.0), ORACLE_QUADRATURE)
                return x ** (1.0 + two_s) * u.value

            weight = 2.0 ** two_s
            extrapolated = (weight * scaled(far) - scaled(near)) / (weight - 1.0)
            results.append(
                close(
                    f"kernel.tail_law[s={s}]",
                    tail_coefficient(s, 1.0, 1.0),
                    extrapolated,
                    1e-3,
                )
            )
        return results


class FunctionalChecks(BaseVerifier):
    """Closed-form functionals."""

    @verification_check(suites=[SUITE_FUNCTIONALS])
    def check_anchors(self):
        unit = ScenarioParams(1.0)
        return [
            close(
                "functionals.phi0[s=0.75]",
                2.0 * specfun.gamma(2.0 / 3.0).value / math.pi,
                phi0(0.75, 1.0, 1.0).value,
                1e-12,
            ),
            close(
                "functionals.mean_displacement[s=0.75]",
                6.0 / (5.0 * math.pi) * specfun.gamma(1.0 / 3.0).value,
                mean_displacement(0.75, 1.0, 1.0),
                1e-12,
            ),
            close(
                "functionals.G2[s=0.5]",
                3.0 / (2.0 * math.pi ** 2),
                eval_functional("G2", 0.5, unit).value,
                1e-12,
            ),
        ]

    @verification_check(suites=[SUITE_FUNCTIONALS])
    def check_superposition(self):
        results = []
        for s, T, L in ((0.6, 1.0, 1.0), (0.75, 10.0, 3.0), (0.9, 100.0, 50.0)):
            scenario = get_scenario(ScenarioParams(T, L))
            for index in range(1, 7):
                total = scenario.evaluate(FunctionalId(Family.H, index), s).value
                parts = (
                    scenario.evaluate(FunctionalId(Family.E, index), s).value
                    + scenario.evaluate(FunctionalId(Family.G, index), s).value
                )
                results.append(
                    close(
                        f"functionals.H{index}[s={s},T={T:g},L={L:g}]",
                        parts,
                        total,
                        1e-14 * abs(total),
                        relative=False,
                    )
                )
        return results

    @verification_check(suites=[SUITE_FUNCTIONALS])
    def check_levy_pairing(self):
        results = []
        for s in ORACLE_EXPONENTS:
            scenario = get_scenario(ScenarioParams(10.0, 5.0))
            kappa = kappa_s(s)
            e1 = scenario.E1(s).value
            g1 = scenario.G1(s).value
            results.extend([
                close(f"functionals.E2_over_E1[s={s}]", 1.0 / kappa,
                      scenario.E2(s).value / e1, 1e-10),
                close(f"functionals.G2_over_G1[s={s}]", kappa ** (2.0 * s),
                      scenario.G2(s).value / g1, 1e-10),
                close(
                    f"functionals.E2_factorization[s={s}]",
                    2.0 * math.pi * specfun.h_of_s(s).value
                    ** (1.0 / (2.0 * s)) * e1,
                    scenario.E2(s).value,
                    1e-11,
                ),
            ])
        return results

    @verification_check(suites=[SUITE_FUNCTIONALS])
    def check_distance_scaling(self):
        results = []
        s = 0.7
        near = get_scenario(ScenarioParams(1.0, 3.0))
        far = get_scenario(ScenarioParams(1.0, 6.0))
        for index in range(1, 7):
            fid = FunctionalId(Family.G, index)
            results.append(
                close(
                    f"functionals.G{index}_distance_scaling",
                    near.evaluate(fid, s).value,
                    far.evaluate(fid, s).value * 2.0 ** (1.0 + 2.0 * s),
                    1e-12,
                )
            )
        return results

    @verification_check(suites=[SUITE_FUNCTIONALS])
    def check_half_limits(self):
        s = 0.5 + HALF_OFFSET
        T = 3.0
        scenario = get_scenario(ScenarioParams(T))
        return [
            close("functionals.E3_half_limit", math.pi / (6.0 * T),
                  scenario.E3(s).value, 1e-6),
            close("functionals.E4_half_limit", math.pi ** 2 / (18.0 * T),
                  scenario.E4(s).value, 1e-6),
            close("functionals.E5_half_limit", 1.0,
                  get_scenario(ScenarioParams(1.0)).E5(s).value, 1e-6),
            holds(
                "functionals.E1_at_half",
                "inf",
                scenario.E1(0.5).value,
                scenario.E1(0.5).is_infinite,
            ),
        ]


class DerivativeChecks(BaseVerifier):
    """Closed-form s-derivatives and their brackets."""

    @verification_check(suites=[SUITE_E1_DERIVATIVE])
    def check_dE1(self):
        results = []
        for s, T in ((0.6, 10.0), (0.75, 100.0), (0.9, 5.0)):
            scenario = get_scenario(ScenarioParams(T))
            results.append(
                derivative_close(
                    f"e1.derivative[s={s},T={T:g}]",
                    lambda x: scenario.E1(x).value,
                    s,
                    derivatives.dE1_ds(s, T),
                )
            )
            results.append(
                close(
                    f"e1.derivative_harmonic_form[s={s},T={T:g}]",
                    derivatives.dE1_ds(s, T),
                    derivatives.dE1_ds_z_form(s, T),
                    1e-9,
                )
            )
        slope = derivatives.dE1_ds(0.5001, 1e5)
        results.append(
            holds("e1.derivative_sign_near_half", "< 0", slope, slope < 0.0)
        )
        upper = sbar_T(math.exp(10.0))
        results.append(close("e1.sbar_T[T=e^10]", 0.56599, upper, 1e-4))
        return results

    @verification_check(suites=[SUITE_E1_DERIVATIVE, SUITE_ASYMPTOTICS])
    def check_e1_minimum(self):
        return claim_results(Claim.E1_MINIMUM)

    @verification_check(suites=[SUITE_E2_DERIVATIVE])
    def check_dE2(self):
        results = []
        for s, T in ((0.6, 10.0), (0.8, 1e4)):
            scenario = get_scenario(ScenarioParams(T))
            results.append(
                derivative_close(
                    f"e2.derivative[s={s},T={T:g}]",
                    lambda x: scenario.E2(x).value,
                    s,
                    derivatives.dE2_ds(s, T),
                )
            )
        for s in (0.6, 0.8):
            results.append(
                derivative_close(
                    f"e2.h_prime[s={s}]",
                    lambda x: specfun.h_of_s(x).value,
                    s,
                    specfun.h_prime(s).value,
                )
            )
        return results

    @verification_check(suites=[SUITE_E2_DERIVATIVE, SUITE_ASYMPTOTICS])
    def check_e2_extrema(self):
        return claim_results(Claim.E2_EXTREMA)

    @verification_check(suites=[SUITE_G1_G2_BRACKETS])
    def check_dG1_dG2(self):
        results = []
        for s, L in ((0.3, 10.0), (0.7, 100.0)):
            scenario = get_scenario(ScenarioParams(1.0, L))
            results.extend([
                derivative_close(
                    f"g1.derivative[s={s},L={L:g}]",
                    lambda x: scenario.G1(x).value,
                    s,
                    derivatives.dG1_ds(s, L, 1.0),
                ),
                derivative_close(
                    f"g2.derivative[s={s},L={L:g}]",
                    lambda x: scenario.G2(x).value,
                    s,
                    derivatives.dG2_ds(s, L, 1.0),
                ),
            ])
        lower, _ = bracket_G1(1e6)
        results.append(
            close("g1.bracket_lower[L=1e6]", 1.0 / (8.0 * math.log(1e6)),
                  lower, 1e-14)
        )
        return results

    @verification_check(suites=[SUITE_G1_G2_BRACKETS, SUITE_ASYMPTOTICS])
    def check_g1_argmax(self):
        return claim_results(Claim.G1_ARGMAX)

    @verification_check(suites=[SUITE_G1_G2_BRACKETS, SUITE_ASYMPTOTICS])
    def check_g2_argmax(self):
        return claim_results(Claim.G2_ARGMAX)

    @verification_check(suites=[SUITE_G3_BRACKET])
    def check_dG3(self):
        results = []
        for s, L in ((0.51, 1e6), (0.7, 1e3), (0.8, 1e6), (0.9, 1e3)):
            scenario = get_scenario(ScenarioParams(1.0, L))
            numeric = central_difference(lambda x: scenario.G3(x).value, s)
            sign = derivatives.P_G3(s, L, 1.0)
            results.append(
                derivative_close(
                    f"g3.derivative[s={s},L={L:g}]",
                    lambda x: scenario.G3(x).value,
                    s,
                    derivatives.dG3_ds(s, L, 1.0),
                )
            )
            results.append(
                holds(
                    f"g3.sign[s={s},L={L:g}]",
                    "sign(P) == sign(dG3)",
                    sign,
                    (sign > 0.0) == (numeric > 0.0),
                )
            )
        low = derivatives.P_G3(0.51, 1e6, 1.0)
        high = derivatives.P_G3(0.9, 1e6, 1.0)
        results.append(holds("g3.sign_near_half", "> 0", low, low > 0.0))
        results.append(holds("g3.sign_near_one", "< 0", high, high < 0.0))
        lower, upper = bracket_G3(math.exp(4.0))
        results.append(close("g3.bracket_lower[L=e^4]", 0.5625, lower, 1e-12))
        results.append(close("g3.bracket_upper[L=e^4]", 0.6875, upper, 1e-12))
        return results

    @verification_check(suites=[SUITE_G3_BRACKET, SUITE_ASYMPTOTICS])
    def check_g3_argmax(self):
        return claim_results(Claim.G3_ARGMAX)

    @verification_check(suites=[SUITE_G4_ROOT])
    def check_g4_root(self):
        results = []
        located = []
        for L in (10.0, 1e2, 1e4, 1e8):
            point = solve_sL_G4(L)
            located.append(point.s_star)
            results.append(
                holds(
                    f"g4.root_residual[L={L:g}]",
                    "< 1e-8",
                    point.residual,
                    point.residual < 1e-8,
                )
            )
        results.append(
            holds(
                "g4.root_trend",
                "decreasing, s_L(1e8) < 0.53",
                located,
                all(b < a for a, b in zip(located, located[1:]))
                and located[-1] < 0.53,
            )
        )
        results.append(
            close(
                "g4.m_at_one",
                -math.log(lstar_closed_form()),
                derivatives.m_of_s(1.0),
                1e-12,
            )
        )
        s = 0.505
        laurent = derivatives.m_of_s(s) + 1.0 / (2.0 * s - 1.0) - EULER_GAMMA
        results.append(
            close("g4.laurent", 0.0, laurent, 0.1, relative=False)
        )
        scenario = get_scenario(ScenarioParams(1.0, 4.0))
        results.append(
            derivative_close(
                "g4.derivative[s=0.7,L=4]",
                lambda x: scenario.G4(x).value,
                0.7,
                derivatives.dG4_ds(0.7, 4.0, 1.0),
            )
        )
        return results

    @verification_check(suites=[SUITE_G4_ROOT, SUITE_ASYMPTOTICS])
    def check_g4_argmax(self):
        return claim_results(Claim.G4_ARGMAX)


class BifurcationChecks(BaseVerifier):
    """T★ and L★."""

    @verification_check(suites=[SUITE_BIFURCATIONS])
    def check_tstar(self):
        result = find_Tstar()
        return [
            close("bifurcation.tstar", T_STAR_REFERENCE,
                  result.critical_value, 1e-6, relative=False),
            close("bifurcation.tstar_sign_change", result.critical_value,
                  result.cross_check_value, 1e-6),
            holds(
                "bifurcation.tstar_sign",
                "dE4(1/2) < 0 below T*, > 0 above",
                T_STAR_REFERENCE,
                derivatives.dE4_at_half(0.99 * T_STAR_REFERENCE) < 0.0
                < derivatives.dE4_at_half(1.01 * T_STAR_REFERENCE),
            ),
        ]

    @verification_check(suites=[SUITE_BIFURCATIONS])
    def check_lstar(self):
        result = find_Lstar()
        g4 = FunctionalId(Family.G, 4)
        return [
            close("bifurcation.lstar", L_STAR_REFERENCE,
                  result.critical_value, 1e-5, relative=False),
            close("bifurcation.lstar_onset", result.critical_value,
                  result.cross_check_value, 1e-4),
            holds(
                "bifurcation.g4_monotone_below",
                "no interior maximum at L=1.7",
                1.7,
                not has_interior_maximum(g4, ScenarioParams(1.0, 1.7)),
            ),
            holds(
                "bifurcation.g4_maximum_above",
                "interior maximum at L=2",
                2.0,
                has_interior_maximum(g4, ScenarioParams(1.0, 2.0)),
            ),
        ]


class OracleChecks(BaseVerifier):
    """Closed forms against brute-force quadrature."""

    @verification_check(suites=[SUITE_ORACLES])
    def check_oracle_phi0(self):
        results = []
        for s in ORACLE_EXPONENTS:
            for kappa in ORACLE_KAPPAS:
                for T in ORACLE_HORIZONS:
                    report = oracle_phi0(s, kappa, T)
                    results.append(
                        close(
                            f"oracle.phi0[s={s},kappa={kappa},T={T:g}]",
                            report.closed_value,
                            report.oracle_value,
                            1e-6,
                        )
                    )
        return results

    @verification_check(suites=[SUITE_ORACLES])
    def check_oracle_moment(self):
        results = []
        for s in ORACLE_EXPONENTS:
            for kappa in ORACLE_KAPPAS:
                report = oracle_moment(s, kappa, 1.0)
                results.append(
                    close(
                        f"oracle.moment[s={s},kappa={kappa}]",
                        report.closed_value,
                        report.oracle_value,
                        1e-4,
                    )
                )
        return results

    @verification_check(suites=[SUITE_ORACLES])
    def check_oracle_remote(self):
        results = []
        for s in ORACLE_EXPONENTS:
            gaps = [oracle_remote(s, 1.0, L, 1.0).rel_diff for L in REMOTE_DISTANCES]
            results.append(
                holds(
                    f"oracle.remote_ladder[s={s}]",
                    "non-increasing",
                    gaps,
                    all(b <= a for a, b in zip(gaps, gaps[1:])),
                )
            )
        for mode in KappaMode:
            report = oracle_remote_efficiency(0.75, mode, 100.0, 1.0)
            results.append(
                close(
                    f"oracle.remote_efficiency[{mode.value}]",
                    report.closed_value,
                    report.oracle_value,
                    2e-2,
                )
            )
        return results

    @verification_check(suites=[SUITE_ORACLES])
    def check_oracle_lattice(self):
        results = []
        reductions = []
        for spacing in LATTICE_SPACINGS:
            report = oracle_lattice(0.75, spacing, 1.0, LATTICE_TERMS)
            reductions.append(report.reduction.rel_diff)
            results.append(
                close(
                    f"oracle.lattice_poisson[lambda={spacing:g}]",
                    report.poisson.closed_value,
                    report.poisson.oracle_value,
                    1e-6,
                )
            )
        results.append(
            holds(
                "oracle.lattice_reduction",
                "decreasing, < 1e-3 at the widest spacing",
                reductions,
                all(b < a for a, b in zip(reductions, reductions[1:]))
                and reductions[-1] < 1e-3,
            )
        )
        return results


class AsymptoticChecks(BaseVerifier):
    """Boundary switches, constrained optima and H suprema."""

    @verification_check(suites=[SUITE_ASYMPTOTICS])
    def check_e3_switch(self):
        return claim_results(Claim.E3_SWITCH)

    @verification_check(suites=[SUITE_ASYMPTOTICS])
    def check_e4_switch(self):
        return claim_results(Claim.E4_SWITCH)

    @verification_check(suites=[SUITE_ASYMPTOTICS, SUITE_BIFURCATIONS])
    def check_constrained_argmax(self):
        return claim_results(Claim.CONSTRAINED_ARGMAX)

    @verification_check(suites=[SUITE_ASYMPTOTICS])
    def check_h_supremum(self):
        return claim_results(Claim.H_SUPREMUM)


class Verifier(
    SpecfunChecks,
    KernelChecks,
    FunctionalChecks,
    DerivativeChecks,
    BifurcationChecks,
    OracleChecks,
    AsymptoticChecks,
):
    """Every verification check."""
