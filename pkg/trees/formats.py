"""
Text formats read and written by the toolkit.

- Edge list: ``n root`` then ``n - 1`` lines ``parent child``; the order
  of the lines is the child order.
- Excursion: one line of whitespace-separated integers.
- Scalar field: ``n m``, then ``n`` lines ``vertex value``, then ``m``
  lines ``u v``.
- Path list: one path per line, tokens separated by whitespace; an
  empty line is the origin.
- Distance matrix: ``n`` then ``n`` rows of ``n`` numbers.
- Weighted graph: ``n m`` then ``m`` lines ``u v length``.
- Newick (read and write) and Graphviz DOT (write).

``#`` starts a comment everywhere except in path lists and Newick,
where it may be a token. Numbers are decimal, with ``.`` as the only
separator.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from numbers import Real
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from .contour import QuotientTree, ScalarField
from .exceptions import FormatError
from .excursion import Excursion, validate_excursion
from .numbers import format_number, parse_number
from .tree_core import RootedTree, build_tree, canonical_newick

logger = logging.getLogger(__name__)

DEFAULT_TEMPLATE_DIR = Path(__file__).resolve().parent / 'templates_dot'


# ============================================================================
# Line helpers
# ============================================================================

def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    """Non-blank lines with comments removed, as (line number, tokens)."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split('#', 1)[0].split()
        if body:
            lines.append((number, body))
    return lines


def _integers(tokens: list[str], line: int, count: int | None = None) -> list[int]:
    if count is not None and len(tokens) != count:
        raise FormatError(f'expected {count} integers, found {len(tokens)}', line)
    try:
        return [_integer(token) for token in tokens]
    except ValueError as exc:
        raise FormatError(str(exc), line) from exc


def _integer(token: str) -> int:
    value = parse_number(token)
    if not isinstance(value, int):
        raise ValueError(f'not an integer: {token!r}')
    return value


def _number(token: str, line: int):
    try:
        return parse_number(token)
    except ValueError as exc:
        raise FormatError(str(exc), line) from exc


def _header(lines, count: int, what: str) -> list[int]:
    if not lines:
        raise FormatError(f'empty {what}')
    number, tokens = lines[0]
    return _integers(tokens, number, count)


# ============================================================================
# Edge list
# ============================================================================

def parse_edge_list(text: str) -> RootedTree:
    lines = _content_lines(text)
    n, root = _header(lines, 2, 'edge list')
    if n < 1:
        raise FormatError('a tree has at least one vertex', lines[0][0])
    body = lines[1:]
    if len(body) != n - 1:
        raise FormatError(f'expected {n - 1} edges, found {len(body)}')

    edges = [tuple(_integers(tokens, number, 2)) for number, tokens in body]
    position = {child: i for i, (_, child) in enumerate(edges)}
    tree = build_tree(edges, root, child_order=position.get, vertex_count=n)
    for (parent, child), (number, _) in zip(edges, body):
        if tree.parent[child] != parent:
            raise FormatError(f'edge {parent} {child} points towards the root', number)
    return tree


def format_edge_list(tree: RootedTree) -> str:
    lines = [f'{tree.vertex_count} {tree.root}']
    lines.extend(f'{parent} {child}' for parent, child in tree.edges())
    return '\n'.join(lines)


# ============================================================================
# Excursion
# ============================================================================

def parse_excursion(text: str) -> Excursion:
    tokens = [(number, token) for number, body in _content_lines(text) for token in body]
    heights = []
    for number, token in tokens:
        heights.extend(_integers([token], number))
    return validate_excursion(heights)


def format_excursion(exc: Excursion) -> str:
    return ' '.join(str(height) for height in exc.heights)


# ============================================================================
# Scalar field
# ============================================================================

def parse_field(text: str) -> ScalarField:
    lines = _content_lines(text)
    n, m = _header(lines, 2, 'field')
    if len(lines) != 1 + n + m:
        raise FormatError(f'expected {n} vertex lines and {m} edge lines')

    values: dict[int, Real] = {}
    for number, tokens in lines[1:1 + n]:
        if len(tokens) != 2:
            raise FormatError('expected "vertex value"', number)
        vertex = _integers(tokens[:1], number)[0]
        if not 0 <= vertex < n or vertex in values:
            raise FormatError(f'vertex id {vertex} repeated or outside 0..{n - 1}', number)
        values[vertex] = _number(tokens[1], number)

    edges = [tuple(_integers(tokens, number, 2)) for number, tokens in lines[1 + n:]]
    for (number, _), (u, v) in zip(lines[1 + n:], edges):
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f'edge {u} {v} uses an unknown vertex', number)
    return ScalarField.build([values[v] for v in range(n)], edges)


def format_field(scalar_field: ScalarField) -> str:
    lines = [f'{scalar_field.vertex_count} {len(scalar_field.edges)}']
    lines.extend(f'{v} {format_number(value)}' for v, value in enumerate(scalar_field.values))
    lines.extend(f'{u} {v}' for u, v in scalar_field.edges)
    return '\n'.join(lines)


# ============================================================================
# Path list
# ============================================================================

def parse_paths(text: str) -> list[tuple[str, ...]]:
    return [tuple(line.split()) for line in text.splitlines()]


def format_paths(paths: Sequence[Sequence[str]]) -> str:
    return '\n'.join(' '.join(tokens) for tokens in paths)


# ============================================================================
# Distance matrix and weighted graph
# ============================================================================

def parse_matrix(text: str) -> list[list[Real]]:
    lines = _content_lines(text)
    (n,) = _header(lines, 1, 'matrix')
    rows = lines[1:]
    if len(rows) != n:
        raise FormatError(f'expected {n} rows, found {len(rows)}')
    matrix = []
    for number, tokens in rows:
        if len(tokens) != n:
            raise FormatError(f'expected {n} entries, found {len(tokens)}', number)
        matrix.append([_number(token, number) for token in tokens])
    return matrix


def format_matrix(matrix: Sequence[Sequence[Real]]) -> str:
    lines = [str(len(matrix))]
    lines.extend(' '.join(format_number(x) for x in row) for row in matrix)
    return '\n'.join(lines)


def parse_weighted_graph(text: str) -> tuple[int, list[tuple[int, int, Real]]]:
    lines = _content_lines(text)
    n, m = _header(lines, 2, 'graph')
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f'expected {m} edges, found {len(body)}')
    edges = []
    for number, tokens in body:
        if len(tokens) != 3:
            raise FormatError('expected "u v length"', number)
        u, v = _integers(tokens[:2], number)
        edges.append((u, v, _number(tokens[2], number)))
    return n, edges


# ============================================================================
# Newick
# ============================================================================

@dataclass(frozen=True)
class NewickTree:
    """A parsed Newick tree; vertex ids are in preorder."""

    tree: RootedTree
    lengths: dict[int, Real] = field(default_factory=dict)
    comments: dict[int, dict[str, str]] = field(default_factory=dict)


_NEWICK_STOP = frozenset('(),:;[]\'')


def _parse_comment(body: str) -> dict[str, str]:
    attrs = {}
    for item in body.lstrip('&').split(','):
        key, _, value = item.partition('=')
        if key:
            attrs[key.strip()] = value.strip()
    return attrs


def parse_newick(text: str) -> NewickTree:
    s = text.strip()
    parent: list[int] = []
    children: list[list[int]] = []
    labels: list[str] = []
    lengths: dict[int, Real] = {}
    comments: dict[int, dict[str, str]] = {}

    def new_vertex(above: int | None) -> int:
        v = len(parent)
        parent.append(v if above is None else above)
        children.append([])
        labels.append('')
        if above is not None:
            children[above].append(v)
        return v

    current = new_vertex(None)
    stack: list[int] = []
    i = 0
    finished = False
    while i < len(s):
        ch = s[i]
        if finished:
            raise FormatError(f'unexpected text after ";" at offset {i}')
        if ch.isspace():
            i += 1
        elif ch == '(':
            stack.append(current)
            current = new_vertex(current)
            i += 1
        elif ch == ',':
            if not stack:
                raise FormatError(f'"," outside parentheses at offset {i}')
            current = new_vertex(stack[-1])
            i += 1
        elif ch == ')':
            if not stack:
                raise FormatError(f'unbalanced ")" at offset {i}')
            current = stack.pop()
            i += 1
        elif ch == ';':
            if stack:
                raise FormatError('unbalanced "(" before ";"')
            finished = True
            i += 1
        elif ch == '[':
            end = s.find(']', i)
            if end < 0:
                raise FormatError(f'unterminated comment at offset {i}')
            comments[current] = _parse_comment(s[i + 1:end])
            i = end + 1
        elif ch == ':':
            j = i + 1
            while j < len(s) and s[j] not in _NEWICK_STOP:
                j += 1
            try:
                lengths[current] = parse_number(s[i + 1:j].strip())
            except ValueError as exc:
                raise FormatError(f'bad edge length at offset {i}') from exc
            i = j
        elif ch == "'":
            j = i + 1
            chars = []
            while True:
                if j >= len(s):
                    raise FormatError(f'unterminated quoted label at offset {i}')
                if s[j] == "'":
                    if j + 1 < len(s) and s[j + 1] == "'":
                        chars.append("'")
                        j += 2
                        continue
                    break
                chars.append(s[j])
                j += 1
            labels[current] = ''.join(chars)
            i = j + 1
        else:
            j = i
            while j < len(s) and s[j] not in _NEWICK_STOP and not s[j].isspace():
                j += 1
            labels[current] = s[i:j]
            i = j
    if not finished:
        raise FormatError('Newick text must end with ";"')

    tree = RootedTree(
        root=0,
        parent=tuple(parent),
        children=tuple(tuple(kids) for kids in children),
        labels=tuple(labels),
    )
    return NewickTree(tree, lengths, comments)


def quotient_newick(quotient: QuotientTree, labels: bool = True) -> str:
    """Contour tree as canonical Newick with heights as ``[&height=...]``."""
    lengths = {c: length for (_, c), length in quotient.edge_length.items()}
    comments = {c: {'height': h} for c, h in enumerate(quotient.height_of)}
    return canonical_newick(quotient.tree, labels=labels, lengths=lengths, comments=comments)


# ============================================================================
# DOT
# ============================================================================

def _dot_string(value: str) -> str:
    return '"' + value.replace('\\', '\\\\').replace('"', '\\"') + '"'


def render_dot(
    tree: RootedTree,
    *,
    name: str = 'tree',
    labels: bool = True,
    heights: Sequence[Real] | None = None,
    lengths: Mapping[int, Real] | None = None,
    members: Sequence[Sequence[int]] | None = None,
    template_dir: Path = DEFAULT_TEMPLATE_DIR,
) -> str:
    """
    Render ``tree`` as a Graphviz digraph.

    Vertices are listed by id and edges in lexicographic order, so the
    output is stable for snapshot tests. ``lengths`` maps a vertex to the
    length of the edge above it.
    """
    vertices = []
    for v in range(tree.vertex_count):
        attributes = [f'label={_dot_string(tree.label(v) if labels else "")}']
        if heights is not None:
            attributes.append(f'height={format_number(heights[v])}')
        if members is not None:
            attributes.append(f'members={_dot_string(" ".join(map(str, members[v])))}')
        vertices.append({'id': v, 'attributes': ', '.join(attributes)})

    edges = []
    for parent, child in sorted(tree.edges()):
        length = lengths.get(child) if lengths else None
        edges.append({
            'parent': parent,
            'child': child,
            'attributes': f'length={format_number(length)}' if length is not None else '',
        })

    env = Environment(
        loader=FileSystemLoader(str(template_dir)),
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
        undefined=StrictUndefined,
    )
    template = env.get_template('tree.dot.j2')
    logger.debug('DOT template loaded from %s', template_dir)
    return template.render(name=name, vertices=vertices, edges=edges)
