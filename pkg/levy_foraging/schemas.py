"""Flag validation for every verb of the command-line tool."""

from __future__ import annotations

import logging
import math

import voluptuous as vol

from .const import (
    BIFURCATION_CHOICES,
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
    DEFAULT_KERNEL_STEPS,
    DEFAULT_STEPS,
    DEFAULT_X_MAX,
    FORMAT_JSON,
    FORMAT_TEXT,
    ORACLE_CHOICES,
    SUITE_ALL,
    SUITES,
    VERB_BIFURCATION,
    VERB_EVAL,
    VERB_KERNEL,
    VERB_OPTIMIZE,
    VERB_ORACLE_CHECK,
    VERB_SWEEP,
    VERB_VERIFY,
)
from .exceptions import UsageError
from .foraging_model.const import AVAILABLE_FUNCTIONALS, DEFAULT_SOLVER
from .foraging_model.models import FunctionalId, KappaMode


_LOGGER = logging.getLogger(__name__)


def finite_float(value) -> float:
    """Coerce value to a finite float."""
    try:
        value = float(value)
    except (TypeError, ValueError) as err:
        raise vol.Invalid(f"expected a real number, got {value!r}") from err
    if not math.isfinite(value):
        raise vol.Invalid(f"expected a finite number, got {value}")
    return value


def functional_id(value) -> FunctionalId:
    """Coerce value to a FunctionalId."""
    if isinstance(value, FunctionalId):
        return value
    if str(value).strip() not in AVAILABLE_FUNCTIONALS:
        raise vol.Invalid(
            f"unknown functional {value!r}, expected one of "
            f"{', '.join(sorted(AVAILABLE_FUNCTIONALS))}"
        )
    return FunctionalId.parse(value)


POSITIVE = vol.All(finite_float, vol.Range(min=0, min_included=False))

KAPPA_MODE = vol.All(vol.In([mode.value for mode in KappaMode]), KappaMode)

STEPS = vol.All(vol.Coerce(int), vol.Range(min=2))

SCENARIO_FIELDS = {
    vol.Optional(CONF_T, default=1.0): POSITIVE,
    vol.Optional(CONF_L, default=1.0): POSITIVE,
    vol.Optional(CONF_KAPPA_MODE): KAPPA_MODE,
}

EVAL_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_FUNCTIONAL): functional_id,
        vol.Required(CONF_S): finite_float,
        **SCENARIO_FIELDS,
    },
    extra=vol.REMOVE_EXTRA,
)

SWEEP_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_FUNCTIONAL): functional_id,
        vol.Optional(CONF_S_MIN): finite_float,
        vol.Optional(CONF_S_MAX): finite_float,
        vol.Optional(CONF_STEPS, default=DEFAULT_STEPS): STEPS,
        vol.Optional(CONF_OUT): str,
        **SCENARIO_FIELDS,
    },
    extra=vol.REMOVE_EXTRA,
)

OPTIMIZE_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_FUNCTIONAL): functional_id,
        vol.Optional(CONF_GRID_POINTS, default=DEFAULT_SOLVER.grid_points):
            vol.All(vol.Coerce(int), vol.Range(min=101)),
        vol.Optional(CONF_S_TOL, default=DEFAULT_SOLVER.s_tol): POSITIVE,
        **SCENARIO_FIELDS,
    },
    extra=vol.REMOVE_EXTRA,
)

BIFURCATION_SCHEMA = vol.Schema(
    {vol.Optional(CONF_PARAMETER, default="all"): vol.In(BIFURCATION_CHOICES)},
    extra=vol.REMOVE_EXTRA,
)

KERNEL_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_S): finite_float,
        vol.Optional(CONF_TIME, default=1.0): POSITIVE,
        vol.Optional(CONF_X_MIN, default=0.0): finite_float,
        vol.Optional(CONF_X_MAX, default=DEFAULT_X_MAX): finite_float,
        vol.Optional(CONF_STEPS, default=DEFAULT_KERNEL_STEPS): STEPS,
        vol.Optional(CONF_KAPPA_MODE, default=KappaMode.UNIT.value): KAPPA_MODE,
        vol.Required(CONF_OUT): str,
    },
    extra=vol.REMOVE_EXTRA,
)

ORACLE_SCHEMA = vol.Schema(
    {vol.Optional(CONF_ORACLE, default="all"): vol.In(ORACLE_CHOICES)},
    extra=vol.REMOVE_EXTRA,
)

VERIFY_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_SUITE, default=SUITE_ALL): vol.In(SUITES),
        vol.Optional(CONF_FORMAT, default=FORMAT_TEXT):
            vol.In([FORMAT_TEXT, FORMAT_JSON]),
    },
    extra=vol.REMOVE_EXTRA,
)

SCHEMAS = {
    VERB_EVAL: EVAL_SCHEMA,
    VERB_SWEEP: SWEEP_SCHEMA,
    VERB_OPTIMIZE: OPTIMIZE_SCHEMA,
    VERB_BIFURCATION: BIFURCATION_SCHEMA,
    VERB_KERNEL: KERNEL_SCHEMA,
    VERB_ORACLE_CHECK: ORACLE_SCHEMA,
    VERB_VERIFY: VERIFY_SCHEMA,
}


def _resolve_kappa_mode(options: dict) -> dict:
    """Fill in the κ mode carried by the functional, reject a mismatch."""
    fid = options[CONF_FUNCTIONAL]
    carried = fid.kappa_mode
    requested = options.get(CONF_KAPPA_MODE)
    if requested is not None and requested is not carried:
        raise UsageError(
            f"functional {fid} carries kappa mode '{carried.value}', "
            f"got '{requested.value}'"
        )
    options[CONF_KAPPA_MODE] = carried
    return options


def validate_options(verb: str, user_input: dict) -> dict:
    """Validate the parsed flags of a verb.

    Parameters
    ----------
    verb : str
        Verb name.
    user_input : dict
        Flags keyed by the CONF_* constants; None values count as absent.

    Raises
    ------
    UsageError
        If a flag is missing or invalid.

    Returns
    -------
    dict
        Validated and coerced options.

    """
    if (schema := SCHEMAS.get(verb)) is None:
        raise UsageError(f"unknown verb: {verb!r}")

    user_input = {k: v for k, v in user_input.items() if v is not None}
    try:
        options = schema(user_input)
    except vol.Invalid as err:
        _LOGGER.debug(f"Invalid flags for {verb}: {user_input}")
        raise UsageError(f"{verb}: {err}") from err

    if CONF_FUNCTIONAL in options:
        options = _resolve_kappa_mode(options)
    for low, high in ((CONF_S_MIN, CONF_S_MAX), (CONF_X_MIN, CONF_X_MAX)):
        if low in options and high in options and options[low] >= options[high]:
            raise UsageError(f"{verb}: --{low.replace('_', '-')} must be "
                             f"below --{high.replace('_', '-')}")
    return options
