"""``contour-tree``: same command as ``contour_tree``."""

from .contour_tree import Command  # noqa: F401
