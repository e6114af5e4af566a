"""Result models returned by the library."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum

from ..exceptions import DomainError
from .domain import DomainTag, KappaMode


@dataclass(frozen=True)
class SpecFunResult:
    """Special function value with the error bound the evaluator commits to."""

    value: float
    abs_error_estimate: float = 0.0

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class KernelValue:
    """Value of the fractional heat kernel.

    ``asymptotic`` flags values produced by the tail law instead of
    quadrature.
    """

    value: float
    abs_error_estimate: float
    asymptotic: bool = False

    def __float__(self) -> float:
        return self.value


class Family(Enum):
    """Functional families."""

    E = "E"
    G = "G"
    H = "H"
    G_CONSTRAINED = "g"


_ID_PATTERN = re.compile(r"^([EGHg])([1-6])(c?)$")


@dataclass(frozen=True)
class FunctionalId:
    """Selects one of E1-E6, G1-G6, H1-H6 or the constrained g5/g6."""

    family: Family
    index: int

    def __post_init__(self):
        if self.family is Family.G_CONSTRAINED:
            allowed = (5, 6)
        else:
            allowed = range(1, 7)
        if self.index not in allowed:
            raise DomainError(
                f"index {self.index} not available for family "
                f"{self.family.value}",
                "index",
                self.index,
            )

    def __str__(self) -> str:
        if self.family is Family.G_CONSTRAINED:
            return f"g{self.index}c"
        return f"{self.family.value}{self.index}"

    @classmethod
    def parse(cls, name: str) -> FunctionalId:
        """Parse a name such as ``E1``, ``H4`` or ``g5c``."""
        match = _ID_PATTERN.match(str(name).strip())
        if match is None:
            raise DomainError(f"unknown functional: {name!r}", "functional", name)
        letter, index, constrained = match.groups()
        if letter == "g":
            if not constrained:
                raise DomainError(
                    f"unknown functional: {name!r}", "functional", name
                )
            return cls(Family.G_CONSTRAINED, int(index))
        if constrained:
            raise DomainError(f"unknown functional: {name!r}", "functional", name)
        return cls(Family(letter), int(index))

    @property
    def uses_levy_kappa(self) -> bool:
        """Return True for the even indices, which carry κ = κ_s."""
        return self.index % 2 == 0

    @property
    def kappa_mode(self) -> KappaMode:
        """Return the κ mode carried by the functional."""
        return KappaMode.LEVY_WALK if self.uses_levy_kappa else KappaMode.UNIT

    @property
    def domain_tag(self) -> DomainTag:
        """Return the range on which the functional is finite."""
        if self.family is Family.G and self.index in (1, 2):
            return DomainTag.UNIT_CLOSED
        return DomainTag.HALF1


@dataclass(frozen=True)
class FunctionalValue:
    """Value of a functional; ``math.inf`` is the positive infinity marker."""

    value: float
    meaningful: bool = True

    @property
    def is_infinite(self) -> bool:
        """Return True for the positive infinity marker."""
        return math.isinf(self.value)

    @classmethod
    def positive_infinity(cls, meaningful: bool = True) -> FunctionalValue:
        """Return the positive infinity marker."""
        return cls(math.inf, meaningful)

    def __float__(self) -> float:
        return self.value


class ExtremumKind(Enum):
    """Kind of a critical point."""

    MINIMUM = "min"
    MAXIMUM = "max"


class BoundarySide(Enum):
    """Boundary of the scanned s-domain."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class CriticalPoint:
    """Located extremum of a functional in s."""

    s_star: float
    value: float
    kind: ExtremumKind
    bracket: tuple[float, float]
    residual: float

    def __post_init__(self):
        lower, upper = self.bracket
        if not lower <= self.s_star <= upper:
            raise DomainError(
                f"bracket {self.bracket} does not contain {self.s_star}",
                "bracket",
                self.bracket,
            )


@dataclass(frozen=True)
class SupremumRecord:
    """Where a functional attains its supremum on the scanned domain.

    ``side`` is None for an interior maximum, otherwise the boundary whose
    limit is approached.
    """

    s: float
    value: float
    side: BoundarySide | None = None
    interior: CriticalPoint | None = None

    @property
    def at_boundary(self) -> bool:
        """Return True if the supremum sits on a boundary."""
        return self.side is not None


class BifurcationParameter(Enum):
    """Bifurcation constants."""

    T_STAR = "T*"
    L_STAR = "L*"


class BifurcationMethod(Enum):
    """How a bifurcation constant was obtained."""

    CLOSED_FORM = "closed-form"
    SIGN_CHANGE = "sign-change"


@dataclass(frozen=True)
class BifurcationResult:
    """Bifurcation constant with its optional cross-check value."""

    parameter: BifurcationParameter
    critical_value: float
    method: BifurcationMethod
    cross_check_value: float | None = None

    @property
    def relative_disagreement(self) -> float | None:
        """Return the relative gap to the cross-check value."""
        if self.cross_check_value is None:
            return None
        return relative_difference(self.cross_check_value, self.critical_value)


def relative_difference(value: float, reference: float) -> float:
    """Return |value - reference| / max(|reference|, 1e-300)."""
    return abs(value - reference) / max(abs(reference), 1e-300)


@dataclass(frozen=True)
class OracleReport:
    """Comparison of an oracle value with its closed form."""

    oracle_value: float
    closed_value: float
    quadrature_error_estimate: float = 0.0
    rel_diff: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "rel_diff",
            relative_difference(self.oracle_value, self.closed_value),
        )


@dataclass(frozen=True)
class LatticeReport:
    """Two comparisons made by the lattice oracle."""

    poisson: OracleReport
    reduction: OracleReport
    tail_bound: float = 0.0


@dataclass(frozen=True)
class RungResult:
    """One rung of a parameter ladder."""

    label: str
    passed: bool
    detail: str = ""
    located: tuple[float, ...] = ()


@dataclass
class SuiteReport:
    """Per-rung outcome of an asymptotic claim."""

    claim: str
    rungs: list[RungResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Return True if every rung passed."""
        return bool(self.rungs) and all(rung.passed for rung in self.rungs)

    def add(self, label: str, passed: bool, detail: str = "", located=()):
        """Append a rung."""
        self.rungs.append(RungResult(label, bool(passed), detail, tuple(located)))
