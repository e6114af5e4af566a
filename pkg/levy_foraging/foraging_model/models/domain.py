"""Parameter models: the Lévy exponent, scenarios and kernel points."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ..exceptions import DomainError


class DomainTag(Enum):
    """Admissible range of the fractional exponent s."""

    FULL01 = "(0,1)"
    HALF1 = "(1/2,1)"
    UNIT_CLOSED = "(0,1]"

    @property
    def bounds(self) -> tuple[float, float]:
        """Return the (lower, upper) limits of the range."""
        if self is DomainTag.HALF1:
            return 0.5, 1.0
        return 0.0, 1.0

    def contains(self, s: float) -> bool:
        """Return True if s lies inside the range."""
        lower, upper = self.bounds
        if self is DomainTag.UNIT_CLOSED:
            return lower < s <= upper
        return lower < s < upper


class KappaMode(Enum):
    """Diffusion coefficient mode."""

    UNIT = "unit"
    LEVY_WALK = "levy"


def _require_finite(name: str, value: float) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError) as err:
        raise DomainError(
            f"{name} must be a real number, got {value!r}", name, value
        ) from err
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value}", name, value)
    return value


def real_arg(value, name: str = "z") -> float:
    """Validate a generic real argument of a special function."""
    return _require_finite(name, value)


def _require_positive(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if value <= 0:
        raise DomainError(f"{name} must be > 0, got {value}", name, value)
    return value


@dataclass(frozen=True)
class FractionalExponent:
    """The fractional exponent s tagged with its validity domain.

    Attributes
    ----------
    s : float
        Order of the fractional Laplacian.
    domain_tag : DomainTag
        Range the value was validated against.

    """

    s: float
    domain_tag: DomainTag = DomainTag.FULL01

    def __post_init__(self):
        s = _require_finite("s", self.s)
        object.__setattr__(self, "s", s)
        if not self.domain_tag.contains(s):
            raise DomainError(
                f"s={s} outside {self.domain_tag.value}", "s", s
            )

    def __float__(self) -> float:
        return self.s

    @classmethod
    def coerce(
            cls,
            value: FractionalExponent | float,
            domain_tag: DomainTag = DomainTag.FULL01,
    ) -> FractionalExponent:
        """Return value as an exponent validated against domain_tag."""
        if isinstance(value, FractionalExponent):
            if value.domain_tag is domain_tag:
                return value
            value = value.s
        return cls(value, domain_tag)


@dataclass(frozen=True)
class ScenarioParams:
    """Foraging scenario: horizon T and target distance L.

    The κ mode is not a scenario field. Each functional carries its own,
    see FunctionalId.kappa_mode.
    """

    T: float
    L: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "T", _require_positive("T", self.T))
        object.__setattr__(self, "L", _require_positive("L", self.L))


@dataclass(frozen=True)
class KernelPoint:
    """Space-time point at which the fractional heat kernel is evaluated."""

    x: float
    t: float
    s: FractionalExponent | float
    kappa: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "x", _require_finite("x", self.x))
        object.__setattr__(self, "t", _require_positive("t", self.t))
        object.__setattr__(
            self, "kappa", _require_positive("kappa", self.kappa)
        )
        object.__setattr__(
            self,
            "s",
            FractionalExponent.coerce(self.s, DomainTag.UNIT_CLOSED),
        )


def positive(value, name: str) -> float:
    """Validate a strictly positive real parameter."""
    return _require_positive(name, value)
