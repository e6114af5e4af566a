"""Module for front-end exceptions."""


class CliError(Exception):
    """Base Exception of the command-line front end."""


class UsageError(CliError):
    """Error to indicate missing or invalid flags.

    Raised before any computation starts. Maps to exit code 2.
    """


class VerificationFailed(CliError):
    """Error to indicate that at least one check failed.

    Maps to exit code 1.
    """

    def __init__(self, failed: list[str]):
        super().__init__(f"{len(failed)} check(s) failed: {', '.join(failed)}")
        self.failed = failed
