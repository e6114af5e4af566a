"""Testing module."""

import logging

import pytest

from levy_foraging.const import (
    CONF_FUNCTIONAL,
    CONF_KAPPA_MODE,
    CONF_L,
    CONF_S,
    CONF_STEPS,
    CONF_SUITE,
    CONF_T,
    DEFAULT_STEPS,
    SUITE_ALL,
    VERB_EVAL,
    VERB_SWEEP,
    VERB_VERIFY,
)
from levy_foraging.exceptions import UsageError
from levy_foraging.foraging_model.models import FunctionalId, KappaMode
from levy_foraging.schemas import validate_options

_LOGGER = logging.getLogger(__name__)


def test_eval_defaults():
    """Test the coerced eval options and their defaults."""
    options = validate_options(
        VERB_EVAL, {CONF_FUNCTIONAL: "E2", CONF_S: "0.7", CONF_T: None}
    )
    assert options[CONF_FUNCTIONAL] == FunctionalId.parse("E2")
    assert options[CONF_S] == 0.7
    assert options[CONF_T] == 1.0
    assert options[CONF_L] == 1.0
    assert options[CONF_KAPPA_MODE] is KappaMode.LEVY_WALK


def test_kappa_mode_resolution():
    """Test the κ mode carried by the functional."""
    options = validate_options(
        VERB_EVAL,
        {CONF_FUNCTIONAL: "G1", CONF_S: "0.4", CONF_KAPPA_MODE: "unit"},
    )
    assert options[CONF_KAPPA_MODE] is KappaMode.UNIT
    with pytest.raises(UsageError):
        validate_options(
            VERB_EVAL,
            {CONF_FUNCTIONAL: "G1", CONF_S: "0.4", CONF_KAPPA_MODE: "levy"},
        )


@pytest.mark.parametrize(
    "user_input",
    [
        {CONF_FUNCTIONAL: "E1", CONF_S: "nan"},
        {CONF_FUNCTIONAL: "E1", CONF_S: "0.7", CONF_L: "0"},
        {CONF_FUNCTIONAL: "E1", CONF_S: "0.7", CONF_KAPPA_MODE: "fast"},
        {CONF_FUNCTIONAL: "e1", CONF_S: "0.7"},
        {CONF_S: "0.7"},
    ],
)
def test_invalid_eval_options(user_input):
    """Test rejected eval flags."""
    with pytest.raises(UsageError):
        validate_options(VERB_EVAL, user_input)


def test_sweep_steps():
    """Test the sweep step count."""
    options = validate_options(
        VERB_SWEEP, {CONF_FUNCTIONAL: "G3", "out": "g3.csv"}
    )
    assert options[CONF_STEPS] == DEFAULT_STEPS
    assert "out" not in validate_options(VERB_SWEEP, {CONF_FUNCTIONAL: "G3"})
    with pytest.raises(UsageError):
        validate_options(
            VERB_SWEEP, {CONF_FUNCTIONAL: "G3", "out": "g3.csv", CONF_STEPS: "1"}
        )


def test_verify_defaults():
    """Test the verify suite default and unknown verbs."""
    assert validate_options(VERB_VERIFY, {})[CONF_SUITE] == SUITE_ALL
    assert validate_options(
        VERB_VERIFY, {CONF_SUITE: "appendixA1"}
    )[CONF_SUITE] == "appendixA1"
    with pytest.raises(UsageError):
        validate_options(VERB_VERIFY, {CONF_SUITE: "nonexistent"})
    with pytest.raises(UsageError):
        validate_options("frobnicate", {})
