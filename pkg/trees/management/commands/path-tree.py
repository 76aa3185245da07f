"""``path-tree``: same command as ``path_tree``."""

from .path_tree import Command  # noqa: F401
