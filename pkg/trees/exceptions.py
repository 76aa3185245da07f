"""
Errors raised by the trees application.

Every error carries the process exit status the command-line front end
reports for it.
"""

from enum import IntEnum


class ExitStatus(IntEnum):
    """Exit statuses of the toolkit commands."""
    OK = 0
    BAD_INPUT = 1
    DOMAIN_ERROR = 2
    PROPERTY_VIOLATED = 3


class TreeToolkitError(ValueError):
    """Base class of every toolkit error."""

    exit_status = ExitStatus.DOMAIN_ERROR


# ============================================================================
# Bad input
# ============================================================================

class InvalidInput(TreeToolkitError):
    exit_status = ExitStatus.BAD_INPUT


class FormatError(InvalidInput):
    """A text input could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)


class CycleDetected(InvalidInput):
    def __init__(self, edge: tuple[int, int]):
        self.edge = edge
        super().__init__(f'edge {edge[0]}-{edge[1]} closes a cycle')


class Disconnected(InvalidInput):
    def __init__(self, unreachable: list[int]):
        self.unreachable = unreachable
        shown = ', '.join(map(str, unreachable[:10]))
        super().__init__(f'vertices unreachable from the root: {shown}')


class BadRoot(InvalidInput):
    def __init__(self, root, vertex_count: int):
        self.root = root
        super().__init__(f'root {root!r} is not in 0..{vertex_count - 1}')


class BadVertex(InvalidInput):
    def __init__(self, vertex, vertex_count: int):
        self.vertex = vertex
        super().__init__(f'vertex {vertex!r} is not in 0..{vertex_count - 1}')


class BadEndpoint(InvalidInput):
    def __init__(self, message: str = 'an excursion starts and ends at height 0'):
        super().__init__(message)


class BadStep(InvalidInput):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f'step at index {index} does not move by exactly one unit')


class NegativeHeight(InvalidInput):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f'negative height at index {index}')


class IndexOutOfRange(InvalidInput):
    def __init__(self, index, length: int):
        self.index = index
        super().__init__(f'index {index!r} is not in 0..{length - 1}')


class NegativeValue(InvalidInput):
    def __init__(self, vertex: int, value):
        self.vertex = vertex
        super().__init__(f'vertex {vertex} has negative value {value}')


class DisconnectedGraph(InvalidInput):
    def __init__(self, component_count: int):
        self.component_count = component_count
        super().__init__(f'graph has {component_count} connected components')


class BadPathId(InvalidInput):
    def __init__(self, path_id, path_count: int):
        self.path_id = path_id
        super().__init__(f'path id {path_id!r} is not in 0..{path_count - 1}')


# ============================================================================
# Domain errors
# ============================================================================

class NoLeastElement(TreeToolkitError):
    def __init__(self):
        super().__init__('the order has no least element')


class DownSetNotChain(TreeToolkitError):
    """Two incomparable elements lie below a third."""

    def __init__(self, first, second, top):
        self.triple = (first, second, top)
        super().__init__(
            f'{first!r} and {second!r} are incomparable but both precede {top!r}'
        )


class NotAMetric(TreeToolkitError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f'not a metric: {reason}')


class LevelAboveX(TreeToolkitError):
    def __init__(self, level, height):
        self.level = level
        super().__init__(f'level {level} lies above the vertex height {height}')


class LevelNotRealized(TreeToolkitError):
    """No quotient class sits exactly at the requested level.

    ``below`` and ``above`` are the nearest bracketing classes on the
    root path, as ``(class id, level)`` pairs; either may be None.
    """

    def __init__(self, level, below=None, above=None):
        self.level = level
        self.below = below
        self.above = above
        super().__init__(
            f'no class at level {level} (below: {below}, above: {above})'
        )
