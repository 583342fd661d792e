"""Exception hierarchy shared by all modules.

The CLI maps InputError to exit code 2 and InternalError to exit code 3.
"""


class InputError(ValueError):
    """Invalid user-supplied data (bad model, bad graph, bad truncation degree)."""


class InternalError(RuntimeError):
    """An exact identity that must hold has failed; indicates a bug, not bad input."""
