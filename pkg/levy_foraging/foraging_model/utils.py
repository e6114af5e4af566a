"""Utilities."""

import numpy as np

from .const import POLE_TOLERANCE


def is_near_nonpositive_integer(z: float, tol: float = POLE_TOLERANCE) -> bool:
    """Check if z is within tol of 0, -1, -2, ..."""
    nearest = round(z)
    return nearest <= 0 and abs(z - nearest) < tol


def sin_pi(s: float) -> float:
    """Return sin(πs), exactly zero at integers."""
    if float(s).is_integer():
        return 0.0
    return float(np.sin(np.pi * s))


def cos_pi(s: float) -> float:
    """Return cos(πs), exactly zero at half-integers."""
    if (2.0 * s).is_integer() and not float(s).is_integer():
        return 0.0
    return float(np.cos(np.pi * s))
