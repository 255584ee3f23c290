"""Exception hierarchy shared across the package.

Every expected failure raises a subclass of :class:`OfansivError` so the CLI
can report it cleanly (exit code 2) instead of dumping a traceback.
"""


class OfansivError(Exception):
    """Base class for all expected errors raised by this package."""
