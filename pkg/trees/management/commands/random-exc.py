"""``random-exc``: same command as ``random_exc``."""

from .random_exc import Command  # noqa: F401
