"""Command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable

from .commands import (
    run_bifurcation,
    run_eval,
    run_kernel,
    run_optimize,
    run_oracle_check,
    run_sweep,
    run_verify,
)
from .const import (
    BIFURCATION_CHOICES,
    CONF_VERB,
    CONF_VERBOSE,
    DOMAIN,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    FORMAT_JSON,
    FORMAT_TEXT,
    ORACLE_CHOICES,
    SUITES,
    TOOL_VERSION,
    USAGE_ERRORS,
    VERB_BIFURCATION,
    VERB_EVAL,
    VERB_KERNEL,
    VERB_OPTIMIZE,
    VERB_ORACLE_CHECK,
    VERB_SWEEP,
    VERB_VERIFY,
)
from .exceptions import VerificationFailed
from .foraging_model.exceptions import ForagingError
from .schemas import validate_options


_LOGGER = logging.getLogger(__name__)

COMMANDS: dict[str, Callable[[dict], int]] = {
    VERB_EVAL: run_eval,
    VERB_SWEEP: run_sweep,
    VERB_OPTIMIZE: run_optimize,
    VERB_BIFURCATION: run_bifurcation,
    VERB_KERNEL: run_kernel,
    VERB_ORACLE_CHECK: run_oracle_check,
    VERB_VERIFY: run_verify,
}


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--functional", help="E1-E6, G1-G6, H1-H6, g5c or g6c")
    parser.add_argument("--T", help="time horizon")
    parser.add_argument("--L", help="target distance")
    parser.add_argument("--kappa-mode", help="unit or levy")


def build_parser() -> argparse.ArgumentParser:
    """Return the parser of every verb and flag."""
    parser = argparse.ArgumentParser(
        prog=DOMAIN,
        description="Evaluate and verify Lévy foraging efficiency functionals.",
        allow_abbrev=False,
    )
    parser.add_argument(
        "--verbose", action="store_true", help="debug logging to stderr"
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {TOOL_VERSION}"
    )
    verbs = parser.add_subparsers(dest=CONF_VERB, required=True)

    verb = verbs.add_parser(VERB_EVAL, allow_abbrev=False)
    _add_scenario_flags(verb)
    verb.add_argument("--s")

    verb = verbs.add_parser(VERB_SWEEP, allow_abbrev=False)
    _add_scenario_flags(verb)
    verb.add_argument("--s-min")
    verb.add_argument("--s-max")
    verb.add_argument("--steps")
    verb.add_argument("--out")

    verb = verbs.add_parser(VERB_OPTIMIZE, allow_abbrev=False)
    _add_scenario_flags(verb)
    verb.add_argument("--grid-points")
    verb.add_argument("--s-tol")

    verb = verbs.add_parser(VERB_BIFURCATION, allow_abbrev=False)
    verb.add_argument("parameter", nargs="?", choices=BIFURCATION_CHOICES)

    verb = verbs.add_parser(VERB_KERNEL, allow_abbrev=False)
    verb.add_argument("--s")
    verb.add_argument("--t")
    verb.add_argument("--x-min")
    verb.add_argument("--x-max")
    verb.add_argument("--steps")
    verb.add_argument("--kappa-mode")
    verb.add_argument("--out")

    verb = verbs.add_parser(VERB_ORACLE_CHECK, allow_abbrev=False)
    verb.add_argument("oracle", nargs="?", choices=ORACLE_CHOICES)

    verb = verbs.add_parser(VERB_VERIFY, allow_abbrev=False)
    verb.add_argument("suite", nargs="?", choices=SUITES)
    verb.add_argument("--format", choices=[FORMAT_TEXT, FORMAT_JSON])

    return parser


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: list[str] | None = None) -> int:
    """Run the tool and return its exit code.

    0 on success, 1 when a verification or numerical check fails, 2 for
    invalid flags or out-of-domain parameters.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE

    user_input = vars(args)
    verb = user_input.pop(CONF_VERB)
    _setup_logging(user_input.pop(CONF_VERBOSE))
    _LOGGER.debug(f"{verb}: {user_input}")

    try:
        options = validate_options(verb, user_input)
        return COMMANDS[verb](options)
    except USAGE_ERRORS as err:
        print(f"{DOMAIN} {verb}: {err}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailed as err:
        print(f"{DOMAIN} {verb}: {err}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except ForagingError as err:
        print(f"{DOMAIN} {verb}: {err.__class__.__name__}: {err}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
