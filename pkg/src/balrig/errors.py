"""Exception hierarchy shared by the library and the CLI.

Each error class carries the CLI exit code under which it surfaces, so the
command-line front end can map failures to distinct, documented codes.
"""


class BalrigError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(BalrigError):
    """Malformed or inconsistent input (bad JSON, invalid vertex ids, ...)."""

    exit_code = 3


class SizeCapError(BalrigError):
    """Input exceeds a documented size cap for an exponential-time check."""

    exit_code = 4


class TrialDisagreementError(BalrigError):
    """Independent random trials disagreed even after escalation.

    A verdict is never reported from disagreeing trials; this error carries
    the observed verdicts for diagnostics.
    """

    exit_code = 5

    def __init__(self, message, verdicts=None):
        super().__init__(message)
        self.verdicts = verdicts
