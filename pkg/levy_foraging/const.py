"""The levy_foraging front end."""

from pathlib import Path

import orjson
from awesomeversion import AwesomeVersion

from .exceptions import UsageError
from .foraging_model.exceptions import INVALID_INPUT_ERRORS


DOMAIN = "levy_foraging"

MANIFEST_PATH = Path(__file__).parent.joinpath("manifest.json")

MANIFEST = orjson.loads(MANIFEST_PATH.read_bytes())

TOOL_VERSION = AwesomeVersion(MANIFEST["version"])

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (UsageError,) + INVALID_INPUT_ERRORS

VERB_EVAL = "eval"
VERB_SWEEP = "sweep"
VERB_OPTIMIZE = "optimize"
VERB_BIFURCATION = "bifurcation"
VERB_KERNEL = "kernel"
VERB_ORACLE_CHECK = "oracle-check"
VERB_VERIFY = "verify"

VERBS = [
    VERB_EVAL, VERB_SWEEP, VERB_OPTIMIZE, VERB_BIFURCATION, VERB_KERNEL,
    VERB_ORACLE_CHECK, VERB_VERIFY,
]

BIFURCATION_CHOICES = ["tstar", "lstar", "all"]

ORACLE_CHOICES = ["phi0", "moment", "remote", "lattice", "all"]

SUITE_ALL = "all"
SUITE_SPECFUN = "specfun"
SUITE_KERNEL = "kernel"
SUITE_FUNCTIONALS = "functionals"
SUITE_E1_DERIVATIVE = "e1-derivative"
SUITE_E2_DERIVATIVE = "e2-derivative"
SUITE_G1_G2_BRACKETS = "g1-g2-brackets"
SUITE_G3_BRACKET = "g3-bracket"
SUITE_G4_ROOT = "g4-root"
SUITE_BIFURCATIONS = "bifurcations"
SUITE_ORACLES = "oracles"
SUITE_ASYMPTOTICS = "asymptotics"

# appendixA1..A5, in order
SUITE_ALIASES = {
    f"appendixA{number}": suite
    for number, suite in enumerate(
        (
            SUITE_E1_DERIVATIVE,
            SUITE_E2_DERIVATIVE,
            SUITE_G1_G2_BRACKETS,
            SUITE_G3_BRACKET,
            SUITE_G4_ROOT,
        ),
        start=1,
    )
}

SUITES = [
    SUITE_ALL, SUITE_SPECFUN, SUITE_KERNEL, SUITE_FUNCTIONALS,
    SUITE_E1_DERIVATIVE, SUITE_E2_DERIVATIVE, SUITE_G1_G2_BRACKETS,
    SUITE_G3_BRACKET, SUITE_G4_ROOT, SUITE_BIFURCATIONS, SUITE_ORACLES,
    SUITE_ASYMPTOTICS, *SUITE_ALIASES,
]

FORMAT_TEXT = "text"
FORMAT_JSON = "json"

CONF_VERB = "verb"
CONF_VERBOSE = "verbose"
CONF_FUNCTIONAL = "functional"
CONF_S = "s"
CONF_T = "T"
CONF_L = "L"
CONF_TIME = "t"
CONF_KAPPA_MODE = "kappa_mode"
CONF_S_MIN = "s_min"
CONF_S_MAX = "s_max"
CONF_X_MIN = "x_min"
CONF_X_MAX = "x_max"
CONF_STEPS = "steps"
CONF_OUT = "out"
CONF_GRID_POINTS = "grid_points"
CONF_S_TOL = "s_tol"
CONF_PARAMETER = "parameter"
CONF_ORACLE = "oracle"
CONF_SUITE = "suite"
CONF_FORMAT = "format"

DEFAULT_STEPS = 2001
DEFAULT_KERNEL_STEPS = 201
DEFAULT_X_MAX = 10.0
