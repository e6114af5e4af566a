"""Data models."""

from .domain import (  # noqa
    DomainTag,
    FractionalExponent,
    KappaMode,
    KernelPoint,
    ScenarioParams,
    positive,
    real_arg,
)
from .specs import CutoffPolicy, QuadratureSpec, SolverSpec  # noqa
from .results import (  # noqa
    BifurcationMethod,
    BifurcationParameter,
    BifurcationResult,
    BoundarySide,
    CriticalPoint,
    ExtremumKind,
    Family,
    FunctionalId,
    FunctionalValue,
    KernelValue,
    LatticeReport,
    OracleReport,
    RungResult,
    SpecFunResult,
    SuiteReport,
    SupremumRecord,
    relative_difference,
)
