"""
Directed coupling graphs shared by every analysis.

A ``CouplingGraph`` is a simple digraph over class names for one coupling
kind. Self-loops are kept, parallel edges are collapsed and isolated nodes
stay in the node set. Graphs are frozen once built.
"""
import logging
from pathlib import Path

import networkx as nx
from networkx.drawing.nx_pydot import write_dot

from core.exceptions import (
    ArgumentError,
    GraphConstructionError,
    GraphFormatError,
    UnknownNodeError,
)

logger = logging.getLogger(__name__)

GRAPH_KINDS = (
    'inheritance',
    'aggregation',
    'interface',
    'parameter',
    'return',
    'generic',
)
REVERSE_PREFIX = 'reverse-'
EDGE_ARROW = '->'
SECTION_HEADERS = frozenset({'nodes:', 'edges:'})


def parse_kind(label):
    """Split a label such as ``reverse-aggregation`` into (kind, reversed)."""
    reversed_ = label.startswith(REVERSE_PREFIX)
    kind = label[len(REVERSE_PREFIX):] if reversed_ else label
    if kind not in GRAPH_KINDS:
        raise ArgumentError(f'Unknown coupling kind: {label!r}')
    return kind, reversed_


class CouplingGraph:
    """Immutable view over a frozen ``networkx.DiGraph``."""

    def __init__(self, kind, digraph, reversed=False):
        self.kind = kind
        self.reversed = reversed
        self._digraph = nx.freeze(digraph)
        self._nodes = tuple(sorted(digraph.nodes))

    @property
    def label(self):
        return f'{REVERSE_PREFIX}{self.kind}' if self.reversed else self.kind

    @property
    def digraph(self):
        return self._digraph

    @property
    def nodes(self):
        """Node names in sorted order."""
        return self._nodes

    @property
    def edges(self):
        return tuple(sorted(self._digraph.edges))

    def number_of_edges(self):
        return self._digraph.number_of_edges()

    def out_neighbors(self, node):
        if node not in self._digraph:
            raise UnknownNodeError(node)
        return frozenset(self._digraph.successors(node))

    def in_neighbors(self, node):
        if node not in self._digraph:
            raise UnknownNodeError(node)
        return frozenset(self._digraph.predecessors(node))

    def has_self_loop(self, node):
        return self._digraph.has_edge(node, node)

    def __contains__(self, node):
        return node in self._digraph

    def __len__(self):
        return len(self._nodes)

    def __eq__(self, other):
        if not isinstance(other, CouplingGraph):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.reversed == other.reversed
            and self._nodes == other._nodes
            and set(self._digraph.edges) == set(other._digraph.edges)
        )

    __hash__ = None

    def __repr__(self):
        return (
            f'<CouplingGraph {self.label}: {len(self)} nodes, '
            f'{self.number_of_edges()} edges>'
        )


def _writable(node):
    """Whether ``node`` survives a trip through the interchange format."""
    return (
        isinstance(node, str)
        and node == node.strip()
        and len(node.splitlines()) == 1
        and not node.startswith('#')
        and EDGE_ARROW not in node
        and node not in SECTION_HEADERS
    )


def build_graph(kind, nodes, edges, reversed=False):
    """Build a graph; every edge endpoint must be a declared node.

    Node names must be writable as one interchange line, so empty names,
    surrounding whitespace, line breaks, a leading ``#``, the edge arrow
    and the section headers are rejected.
    """
    parse_kind(kind)
    node_set = set()
    for node in nodes:
        if not _writable(node):
            raise GraphConstructionError(f'Invalid node name: {node!r}')
        node_set.add(node)

    edge_set = set()
    for src, dst in edges:
        if src not in node_set or dst not in node_set:
            raise GraphConstructionError(
                f'Edge ({src!r}, {dst!r}) has an endpoint outside the node set'
            )
        edge_set.add((src, dst))

    digraph = nx.DiGraph()
    digraph.add_nodes_from(sorted(node_set))
    digraph.add_edges_from(sorted(edge_set))
    return CouplingGraph(kind, digraph, reversed=reversed)


def transpose(graph):
    """Reverse every edge; the kind is kept and the reversed marker flips."""
    return CouplingGraph(
        graph.kind,
        graph.digraph.reverse(copy=True),
        reversed=not graph.reversed,
    )


def out_neighbors(graph, node):
    return graph.out_neighbors(node)


def iter_walks(graph, node, depth):
    """Yield every walk of exactly ``depth`` edges starting at ``node``.

    Walks may revisit nodes. The enumeration is exponential in ``depth``
    and only meant for small graphs.
    """
    if depth < 0:
        raise ArgumentError('Walk depth must be >= 0')
    graph.out_neighbors(node)

    stack = [(node,)]
    while stack:
        walk = stack.pop()
        if len(walk) == depth + 1:
            yield walk
            continue
        for successor in sorted(graph.out_neighbors(walk[-1]), reverse=True):
            stack.append(walk + (successor,))


def count_paths(graph, node, depth):
    """Number of walks of exactly ``depth`` edges from ``node``."""
    return sum(1 for _ in iter_walks(graph, node, depth))


def format_graph(graph):
    """Render a graph in the line-based interchange format."""
    lines = [f'kind: {graph.label}', 'nodes:']
    lines.extend(graph.nodes)
    lines.append('edges:')
    lines.extend(f'{src} {EDGE_ARROW} {dst}' for src, dst in graph.edges)
    return '\n'.join(lines) + '\n'


def parse_graph(text):
    """Parse the interchange format produced by ``format_graph``."""
    label = None
    section = None
    nodes = []
    edges = []
    edge_lines = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue

        if label is None:
            key, sep, value = line.partition(':')
            if not sep or key.strip() != 'kind':
                raise GraphFormatError('expected "kind: <kind>" header',
                                       number)
            label = value.strip()
            try:
                parse_kind(label)
            except ArgumentError:
                raise GraphFormatError(f'unknown kind {label!r}', number)
            continue

        if line in SECTION_HEADERS:
            next_section = line[:-1]
            if next_section == section or (
                    next_section == 'nodes' and section == 'edges'):
                raise GraphFormatError(f'unexpected {line!r}', number)
            section = next_section
            continue

        if section == 'nodes':
            if EDGE_ARROW in line:
                raise GraphFormatError(f'edge outside "edges:": {line!r}',
                                       number)
            nodes.append(line)
        elif section == 'edges':
            src, sep, dst = line.partition(EDGE_ARROW)
            src, dst = src.strip(), dst.strip()
            if not sep or not src or not dst:
                raise GraphFormatError(f'malformed edge {line!r}', number)
            edges.append((src, dst))
            edge_lines.setdefault((src, dst), number)
        else:
            raise GraphFormatError(f'unexpected line {line!r}', number)

    if label is None:
        raise GraphFormatError('missing "kind:" header')
    if section is None:
        raise GraphFormatError('missing "nodes:" section')

    declared = set(nodes)
    for edge in edges:
        if edge[0] not in declared or edge[1] not in declared:
            raise GraphFormatError(
                f'edge {edge[0]} {EDGE_ARROW} {edge[1]} uses an '
                'undeclared node',
                edge_lines[edge],
            )

    kind, reversed_ = parse_kind(label)
    return build_graph(kind, nodes, edges, reversed=reversed_)


def read_graph_file(path):
    try:
        text = Path(path).read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFormatError(f'Cannot read graph file {path}: {exc}')
    graph = parse_graph(text)
    logger.debug('Read %r from %s', graph, path)
    return graph


def write_graph_file(graph, path):
    Path(path).write_text(format_graph(graph), encoding='utf-8')


def write_dot_file(graph, path):
    """Export the same nodes and edges as a DOT digraph."""
    digraph = nx.DiGraph(name=graph.label.replace('-', '_'))
    digraph.add_nodes_from(graph.nodes)
    digraph.add_edges_from(graph.edges)
    write_dot(digraph, path)
