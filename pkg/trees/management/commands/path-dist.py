"""``path-dist``: same command as ``path_dist``."""

from .path_dist import Command  # noqa: F401
