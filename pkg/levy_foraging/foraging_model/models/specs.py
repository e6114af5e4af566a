"""Tolerance and solver settings."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from ..exceptions import DomainError


class CutoffPolicy(Enum):
    """How the frequency integral is truncated."""

    AUTO_FROM_DECAY = "auto"
    FIXED = "fixed"


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances governing every kernel and oracle integration.

    Attributes
    ----------
    abs_tol : float
        Absolute tolerance on the integrated quantity.
    rel_tol : float
        Relative tolerance on the integrated quantity.
    max_subdivisions : int
        Upper limit for the adaptive subdivision count.
    cutoff_policy : CutoffPolicy
        AUTO_FROM_DECAY derives the frequency cutoff from the tolerances,
        FIXED uses ``cutoff_value``.
    cutoff_value : float | None
        Frequency cutoff ξ★ used with the FIXED policy.
    asymptotic_cutoff : float | None
        Distance, in units of κ·t^(1/(2s)), beyond which the kernel returns
        the tail law. None forces quadrature everywhere.

    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    max_subdivisions: int = 2048
    cutoff_policy: CutoffPolicy = CutoffPolicy.AUTO_FROM_DECAY
    cutoff_value: float | None = None
    asymptotic_cutoff: float | None = 50.0

    def __post_init__(self):
        if self.abs_tol < 1e-14 or self.rel_tol < 1e-14:
            raise DomainError(
                "abs_tol and rel_tol must be >= 1e-14",
                "tolerance",
                (self.abs_tol, self.rel_tol),
            )
        if self.max_subdivisions < 16:
            raise DomainError(
                "max_subdivisions must be >= 16",
                "max_subdivisions",
                self.max_subdivisions,
            )
        if self.cutoff_policy is CutoffPolicy.FIXED and not (
            self.cutoff_value and self.cutoff_value > 0
        ):
            raise DomainError(
                "a FIXED cutoff policy needs a positive cutoff_value",
                "cutoff_value",
                self.cutoff_value,
            )
        if self.asymptotic_cutoff is not None and self.asymptotic_cutoff <= 0:
            raise DomainError(
                "asymptotic_cutoff must be positive or None",
                "asymptotic_cutoff",
                self.asymptotic_cutoff,
            )

    def without_tail_mode(self) -> QuadratureSpec:
        """Return a copy that never switches to the tail law."""
        return replace(self, asymptotic_cutoff=None)


@dataclass(frozen=True)
class SolverSpec:
    """Grid scan and bisection settings for the optimizer."""

    s_tol: float = 1e-8
    grid_points: int = 2001
    boundary_margin: float = 1e-6

    def __post_init__(self):
        if self.s_tol <= 0:
            raise DomainError("s_tol must be > 0", "s_tol", self.s_tol)
        if self.grid_points < 101:
            raise DomainError(
                "grid_points must be >= 101", "grid_points", self.grid_points
            )
        if not 0 < self.boundary_margin < 0.1:
            raise DomainError(
                "boundary_margin must lie in (0, 0.1)",
                "boundary_margin",
                self.boundary_margin,
            )

    @property
    def derivative_step(self) -> float:
        """Return the centered-difference step."""
        return max(1e-7, self.s_tol)
