"""Closed-form foraging efficiency functionals.

Every formula is assembled in log-space from ``scipy.special.gammaln`` and
log-powers and exponentiated once, so values stay finite for s near 1/2
and horizons up to 1e16.
"""

from __future__ import annotations

import logging
import math
from typing import Callable

from scipy import special

from . import derivatives, specfun
from .const import AVAILABLE_FUNCTIONALS
from .descriptors import FunctionalDescriptor
from .exceptions import DomainError
from .models import (
    DomainTag,
    Family,
    FractionalExponent,
    FunctionalId,
    FunctionalValue,
    ScenarioParams,
    positive,
)
from .utils import sin_pi


_LOGGER = logging.getLogger(__name__)

_LOG_PI = math.log(math.pi)
_LOG_TWO_PI = math.log(2.0 * math.pi)


def functional_property(
        _func: Callable | None = None,
        **kwargs: dict,
) -> FunctionalDescriptor:
    """Decorate the given method as efficiency functional.

    Works like a method taking s. Additionally registers the method to
    the '<class>_functionals' dict of the methods parent class.

    Parameters
    ----------
    _func : Callable, optional
        Method to decorate. The default is None.
    **kwargs : dict
        ``family`` and ``index`` select the FunctionalId. ``domain`` sets
        the finite domain, ``infinite_up_to_half`` returns the infinity
        marker for s in (0, 1/2].

    Returns
    -------
    FunctionalDescriptor
        Descriptor evaluating the method after validating s.

    """
    family = kwargs.pop("family")
    index = kwargs.pop("index")
    functional_id = FunctionalId(family, index)
    domain_tag = kwargs.pop("domain", functional_id.domain_tag)
    infinite_up_to_half = kwargs.pop("infinite_up_to_half", False)

    def decorator(func):
        return FunctionalDescriptor(
            fget=func,
            doc=None,
            functional_id=functional_id,
            domain_tag=domain_tag,
            infinite_up_to_half=infinite_up_to_half,
        )

    return decorator if _func is None else decorator(_func)


def functional_derivative(_func: Callable | None = None, **kwargs):
    """Flag the decorated method as closed-form s-derivative.

    The method is collected into BaseScenario._functional_derivatives under
    the FunctionalId it differentiates.
    """
    name = kwargs.pop("of")

    def decorator(func):
        func.functional_derivative = FunctionalId.parse(name)
        return func

    return decorator if _func is None else decorator(_func)


# Log-space building blocks --->

def _log_e_core(s: float, T: float) -> float:
    """Return ln(Γ(1/(2s)) / (T^(1/(2s)) (2s-1)))."""
    return (
        float(special.gammaln(1.0 / (2.0 * s)))
        - math.log(T) / (2.0 * s)
        - math.log(2.0 * s - 1.0)
    )


def _log_e5_core(s: float, T: float) -> float:
    """Return ln((1+2s)Γ(1/(2s)) / (s(2s-1) T^(1/s) Γ((2s-1)/(2s))))."""
    return (
        math.log(1.0 + 2.0 * s)
        + float(special.gammaln(1.0 / (2.0 * s)))
        - math.log(s)
        - math.log(2.0 * s - 1.0)
        - math.log(T) / s
        - float(special.gammaln((2.0 * s - 1.0) / (2.0 * s)))
    )


def _log_h(s: float) -> float:
    return math.log(specfun.h_of_s(s).value)


def _log_zeta_ratio(s: float) -> float:
    """Return ln(ζ(1+2s) / ζ(2s))."""
    return (
        math.log(specfun.zeta(1.0 + 2.0 * s).value)
        - math.log(specfun.zeta(2.0 * s).value)
    )


def _log_g5_constant(s: float) -> float:
    """Return ln(Γ(2+2s) sin(πs) / (8 Γ((2s-1)/(2s))))."""
    return (
        float(special.gammaln(2.0 + 2.0 * s))
        + math.log(sin_pi(s))
        - math.log(8.0)
        - float(special.gammaln((2.0 * s - 1.0) / (2.0 * s)))
    )


def _log_g6_factor(s: float) -> float:
    """Return ln(((2π)^(-2s) / h(s))^((2s-1)/(2s)))."""
    return (2.0 * s - 1.0) / (2.0 * s) * (-2.0 * s * _LOG_TWO_PI - _log_h(s))


class BaseScenario:
    """Base class representing a foraging scenario.

    Provides the efficiency functionals registered by its subclasses.

    Attributes
    ----------
    params : ScenarioParams
        Horizon T and target distance L.

    """

    VERBOSE_NAME = "Foraging scenario"

    def __new__(cls, *args, **kwargs):
        """Create a new instance.

        Collect the '<class>_functionals' registries filled by the
        descriptors and the methods flagged by 'functional_derivative'.

        """
        instance = super().__new__(cls)
        functionals = {}
        functional_derivatives = {}

        for obj in [instance.__class__] + instance.__class__.mro():
            owner_uid = f"{obj.__name__.lower()}"
            for attr_name, attr_val in obj.__dict__.items():
                if attr_name == f"{owner_uid}_functionals":
                    for key, val in attr_val.items():
                        functionals.setdefault(key, val)

                if fid := getattr(attr_val, "functional_derivative", None):
                    functional_derivatives.setdefault(fid, attr_name)

        instance._functionals = functionals
        instance._functional_derivatives = functional_derivatives
        return instance

    def __init__(self, params: ScenarioParams) -> None:
        """Initialize instance of BaseScenario."""
        self.params = params

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}: T={self.params.T}, L={self.params.L}>"

    @property
    def T(self) -> float:
        return self.params.T

    @property
    def L(self) -> float:
        return self.params.L

    @property
    def functionals(self):
        """Return the ids of the registered functionals."""
        return self._functionals.keys()

    def evaluator(self, fid: FunctionalId) -> Callable[[float], FunctionalValue]:
        """Return the bound evaluator of a registered functional."""
        if (name := self._functionals.get(fid)) is None:
            raise DomainError(
                f"{self.VERBOSE_NAME} does not provide {fid}", "functional", fid
            )
        return getattr(self, name)

    def evaluate(self, fid: FunctionalId, s) -> FunctionalValue:
        """Evaluate a registered functional at s."""
        return self.evaluator(fid)(float(s))

    def derivative(self, fid: FunctionalId) -> Callable[[float], float] | None:
        """Return the closed-form s-derivative of fid, if there is one."""
        if name := self._functional_derivatives.get(fid):
            return getattr(self, name)
        return None

    def all_values(self, s) -> dict[str, FunctionalValue]:
        """Return every functional admissible at s."""
        result = {}
        for fid, name in self._functionals.items():
            try:
                result[str(fid)] = getattr(self, name)(s)
            except DomainError:
                _LOGGER.debug(f"Skip functional {fid} at s={s}")
        return result


class OriginPreyScenario(BaseScenario):
    """Single prey at the origin: the E-family."""

    @functional_property(family=Family.E, index=1, infinite_up_to_half=True)
    def E1(self, s: float) -> float:
        """Return E1 = Γ(1/(2s)) / (π T^(1/(2s)) (2s-1))."""
        return math.exp(_log_e_core(s, self.T) - _LOG_PI)

    @functional_property(family=Family.E, index=2, infinite_up_to_half=True)
    def E2(self, s: float) -> float:
        """Return E2 = 2 h^(1/(2s)) Γ(1/(2s)) / (T^(1/(2s)) (2s-1))."""
        return math.exp(
            math.log(2.0) + _log_h(s) / (2.0 * s) + _log_e_core(s, self.T)
        )

    @functional_property(family=Family.E, index=3, infinite_up_to_half=True)
    def E3(self, s: float) -> float:
        """Return E3 = ζ(1+2s) E1 / ζ(2s)."""
        return math.exp(
            _log_e_core(s, self.T) - _LOG_PI + _log_zeta_ratio(s)
        )

    @functional_property(family=Family.E, index=4, infinite_up_to_half=True)
    def E4(self, s: float) -> float:
        """Return E4 = 2π h^(1/(2s)) E3, the E3 form with κ = κ_s."""
        return math.exp(
            math.log(2.0)
            + _log_h(s) / (2.0 * s)
            + _log_e_core(s, self.T)
            + _log_zeta_ratio(s)
        )

    @functional_property(family=Family.E, index=5, infinite_up_to_half=True)
    def E5(self, s: float) -> float:
        """Return E5 = Φ0 / ℓ with κ = 1."""
        return math.exp(math.log(0.25) + _log_e5_core(s, self.T))

    @functional_property(family=Family.E, index=6, infinite_up_to_half=True)
    def E6(self, s: float) -> float:
        """Return E6 = Φ0 / ℓ with κ = κ_s."""
        return math.exp(
            2.0 * _LOG_PI + _log_h(s) / s + _log_e5_core(s, self.T)
        )

    @functional_derivative(of="E1")
    def dE1(self, s: float) -> float:
        """Return the closed-form dE1/ds."""
        return derivatives.dE1_ds(s, self.T)

    @functional_derivative(of="E2")
    def dE2(self, s: float) -> float:
        return derivatives.dE2_ds(s, self.T)


class RemotePreyScenario(BaseScenario):
    """Single prey at distance L: the G-family and its constrained form."""

    def _log_distance(self, s: float) -> float:
        """Return ln(L^(1+2s))."""
        return (1.0 + 2.0 * s) * math.log(self.L)

    @functional_property(family=Family.G, index=1)
    def G1(self, s: float) -> float:
        """Return G1 = T Γ(1+2s) sin(πs) / (2π L^(1+2s))."""
        sine = sin_pi(s)
        if sine == 0.0:
            return 0.0
        return math.exp(
            math.log(self.T)
            + float(special.gammaln(1.0 + 2.0 * s))
            + math.log(sine)
            - _LOG_TWO_PI
            - self._log_distance(s)
        )

    @functional_property(family=Family.G, index=2)
    def G2(self, s: float) -> float:
        """Return G2 = T / (4 L^(1+2s) ζ(1+2s))."""
        return math.exp(
            math.log(self.T)
            - math.log(4.0)
            - self._log_distance(s)
            - math.log(specfun.zeta(1.0 + 2.0 * s).value)
        )

    @functional_property(family=Family.G, index=3)
    def G3(self, s: float) -> float:
        """Return G3 = T ζ(1+2s) Γ(1+2s) sin(πs) / (2π L^(1+2s) ζ(2s))."""
        return math.exp(
            math.log(self.T)
            + _log_zeta_ratio(s)
            + float(special.gammaln(1.0 + 2.0 * s))
            + math.log(sin_pi(s))
            - _LOG_TWO_PI
            - self._log_distance(s)
        )

    @functional_property(family=Family.G, index=4)
    def G4(self, s: float) -> float:
        """Return G4 = T / (4 L^(1+2s) ζ(2s))."""
        return math.exp(
            math.log(self.T)
            - math.log(4.0)
            - self._log_distance(s)
            - math.log(specfun.zeta(2.0 * s).value)
        )

    @functional_property(family=Family.G, index=5)
    def G5(self, s: float) -> float:
        """Return G5 = T^((2s-1)/(2s)) g5(s) / L^(1+2s)."""
        return math.exp(
            (2.0 * s - 1.0) / (2.0 * s) * math.log(self.T)
            + _log_g5_constant(s)
            - self._log_distance(s)
        )

    @functional_property(family=Family.G, index=6)
    def G6(self, s: float) -> float:
        """Return G6 = ((2π)^(-2s)/h)^((2s-1)/(2s)) G5."""
        return math.exp(
            (2.0 * s - 1.0) / (2.0 * s) * math.log(self.T)
            + _log_g5_constant(s)
            + _log_g6_factor(s)
            - self._log_distance(s)
        )

    @functional_property(family=Family.G_CONSTRAINED, index=5)
    def g5c(self, s: float) -> float:
        """Return g5, G5 on the curve L^(1+2s) = T^((2s-1)/(2s))."""
        return constrained_g(5, s)

    @functional_property(family=Family.G_CONSTRAINED, index=6)
    def g6c(self, s: float) -> float:
        """Return g6, G6 on the curve L^(1+2s) = T^((2s-1)/(2s))."""
        return constrained_g(6, s)

    @functional_derivative(of="G1")
    def dG1(self, s: float) -> float:
        return derivatives.dG1_ds(s, self.L, self.T)

    @functional_derivative(of="G2")
    def dG2(self, s: float) -> float:
        return derivatives.dG2_ds(s, self.L, self.T)

    @functional_derivative(of="G3")
    def dG3(self, s: float) -> float:
        return derivatives.dG3_ds(s, self.L, self.T)

    @functional_derivative(of="G4")
    def dG4(self, s: float) -> float:
        return derivatives.dG4_ds(s, self.L, self.T)


class ForagingScenario(OriginPreyScenario, RemotePreyScenario):
    """Origin and remote prey together: H_j = E_j + G_j."""

    VERBOSE_NAME = "Foraging scenario with two preys"

    def _superpose(self, index: int, s: float) -> FunctionalValue:
        origin = getattr(self, f"E{index}")(s)
        remote = getattr(self, f"G{index}")(s)
        return FunctionalValue(
            origin.value + remote.value,
            meaningful=origin.meaningful and remote.meaningful,
        )

    @functional_property(family=Family.H, index=1)
    def H1(self, s: float) -> FunctionalValue:
        return self._superpose(1, s)

    @functional_property(family=Family.H, index=2)
    def H2(self, s: float) -> FunctionalValue:
        return self._superpose(2, s)

    @functional_property(family=Family.H, index=3)
    def H3(self, s: float) -> FunctionalValue:
        return self._superpose(3, s)

    @functional_property(family=Family.H, index=4)
    def H4(self, s: float) -> FunctionalValue:
        return self._superpose(4, s)

    @functional_property(family=Family.H, index=5)
    def H5(self, s: float) -> FunctionalValue:
        return self._superpose(5, s)

    @functional_property(family=Family.H, index=6)
    def H6(self, s: float) -> FunctionalValue:
        return self._superpose(6, s)


def get_scenario(p: ScenarioParams) -> ForagingScenario:
    """Return the scenario object providing every functional."""
    return ForagingScenario(p)


def eval_functional(
        fid: FunctionalId | str,
        s: FractionalExponent | float,
        p: ScenarioParams,
) -> FunctionalValue:
    """Evaluate one of E1-E6, G1-G6, H1-H6, g5c or g6c at s.

    Raises
    ------
    DomainError
        If s lies outside the admissible range of the functional.

    """
    if isinstance(fid, str):
        fid = FunctionalId.parse(fid)
    return get_scenario(p).evaluate(fid, float(s))


def phi0(s: FractionalExponent | float, kappa: float, T: float) -> FunctionalValue:
    """Return Φ0 = T^((2s-1)/(2s)) Γ(1/(2s)) / (πκ(2s-1)).

    The infinity marker is returned for s in (0, 1/2].
    """
    s = FractionalExponent.coerce(s, DomainTag.FULL01).s
    kappa = positive(kappa, "kappa")
    T = positive(T, "T")
    if s <= 0.5:
        return FunctionalValue.positive_infinity()
    return FunctionalValue(
        math.exp(
            (2.0 * s - 1.0) / (2.0 * s) * math.log(T)
            + float(special.gammaln(1.0 / (2.0 * s)))
            - _LOG_PI
            - math.log(kappa)
            - math.log(2.0 * s - 1.0)
        )
    )


def mean_displacement(
        s: FractionalExponent | float,
        kappa: float,
        T: float,
) -> float:
    """Return ℓ = 4κs T^((1+2s)/(2s)) Γ((2s-1)/(2s)) / (π(1+2s))."""
    s = FractionalExponent.coerce(s, DomainTag.HALF1).s
    kappa = positive(kappa, "kappa")
    T = positive(T, "T")
    return math.exp(
        math.log(4.0 * kappa * s)
        + (1.0 + 2.0 * s) / (2.0 * s) * math.log(T)
        + float(special.gammaln((2.0 * s - 1.0) / (2.0 * s)))
        - _LOG_PI
        - math.log(1.0 + 2.0 * s)
    )


def ell_bar(s: FractionalExponent | float, T: float) -> float:
    """Return ℓ̄ = T ζ(2s) / ζ(1+2s)."""
    s = FractionalExponent.coerce(s, DomainTag.HALF1).s
    T = positive(T, "T")
    return T * specfun.zeta(2.0 * s).value / specfun.zeta(1.0 + 2.0 * s).value


def constrained_g(index: int, s: FractionalExponent | float) -> float:
    """Return g5 or g6, the G5/G6 forms on L^(1+2s) = T^((2s-1)/(2s)).

    Parameters
    ----------
    index : int
        5 or 6.
    s : FractionalExponent | float
        Exponent in (1/2, 1).

    Raises
    ------
    DomainError
        For an index other than 5 or 6, or s outside (1/2, 1).

    """
    if index not in (5, 6):
        raise DomainError(
            f"constrained_g needs index 5 or 6, got {index}", "index", index
        )
    s = FractionalExponent.coerce(s, DomainTag.HALF1).s
    log_value = _log_g5_constant(s)
    if index == 6:
        log_value += _log_g6_factor(s)
    return math.exp(log_value)


def parse_functionals(names) -> list[FunctionalId]:
    """Parse a list of functional names, keeping their order."""
    ids = []
    for name in names:
        if str(name).strip() not in AVAILABLE_FUNCTIONALS:
            raise DomainError(f"unknown functional: {name!r}", "functional", name)
        ids.append(FunctionalId.parse(name))
    return ids
