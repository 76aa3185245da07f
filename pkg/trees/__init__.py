"""
Tree coding and tree metrics.

Rooted trees, their excursion (height function) codes, constant-time
tree distances, contour trees of scalar fields and path forests.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version('tree-contours')
except PackageNotFoundError:  # running from a source checkout
    __version__ = '0.0.0+local'
