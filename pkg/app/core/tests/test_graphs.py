"""
Tests for coupling graphs and the interchange format.
"""
import random
import tempfile
from pathlib import Path

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from core.exceptions import (
    ArgumentError,
    GraphConstructionError,
    GraphFormatError,
    UnknownNodeError,
)
from core.graphs import (
    build_graph,
    count_paths,
    format_graph,
    iter_walks,
    out_neighbors,
    parse_graph,
    parse_kind,
    read_graph_file,
    transpose,
    write_dot_file,
    write_graph_file,
)


def chain():
    """Create and return the chain a -> b -> c."""
    return build_graph('aggregation', ['a', 'b', 'c'],
                       [('a', 'b'), ('b', 'c')])


def star(leaves=3):
    """Create and return a root pointing at ``leaves`` leaves."""
    names = [f'l{i}' for i in range(1, leaves + 1)]
    return build_graph('inheritance', ['root'] + names,
                       [('root', name) for name in names])


@st.composite
def small_graphs(draw, max_nodes=8):
    """Random digraphs with self-loops, up to ``max_nodes`` nodes."""
    count = draw(st.integers(min_value=1, max_value=max_nodes))
    nodes = [f'n{i}' for i in range(count)]
    pairs = [(a, b) for a in nodes for b in nodes]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs),
                           max_size=len(pairs)))
    edges = [pair for pair, keep in zip(pairs, chosen) if keep]
    return build_graph('aggregation', nodes, edges)


def random_graph(nodes, mean_degree, seed, kind='aggregation'):
    """A seeded random digraph with about ``mean_degree`` edges per node."""
    rng = random.Random(seed)
    names = [f'org.example.C{i:05d}' for i in range(nodes)]
    edges = [
        (src, rng.choice(names))
        for src in names for _ in range(mean_degree)
    ]
    return build_graph(kind, names, edges)


class BuildGraphTests(SimpleTestCase):
    """Test graph construction."""

    def test_duplicate_edges_collapse(self):
        """Test parallel edges are stored once."""
        graph = build_graph('aggregation', ['a', 'b'],
                            [('a', 'b'), ('a', 'b')])

        self.assertEqual(graph.number_of_edges(), 1)

    def test_self_loop_kept(self):
        """Test a self-loop is a regular edge."""
        graph = build_graph('aggregation', ['a'], [('a', 'a')])

        self.assertEqual(graph.edges, (('a', 'a'),))
        self.assertTrue(graph.has_self_loop('a'))

    def test_isolated_nodes_kept(self):
        """Test nodes without edges stay in the node set."""
        graph = build_graph('parameter', ['c', 'a', 'b'], [])

        self.assertEqual(graph.nodes, ('a', 'b', 'c'))
        self.assertEqual(graph.number_of_edges(), 0)

    def test_chain(self):
        graph = chain()

        self.assertEqual(len(graph), 3)
        self.assertEqual(graph.edges, (('a', 'b'), ('b', 'c')))

    def test_unknown_endpoint_rejected(self):
        """Test an edge leaving the node set names the pair."""
        with self.assertRaisesMessage(GraphConstructionError, "('a', 'z')"):
            build_graph('aggregation', ['a'], [('a', 'z')])

    def test_unknown_kind_rejected(self):
        with self.assertRaises(ArgumentError):
            build_graph('composition', ['a'], [])

    def test_unwritable_names_rejected(self):
        """Test names the interchange format cannot carry are refused."""
        for name in ('', '#x', 'a -> b', 'a->b', ' a', 'a ', 'a\nb',
                     'nodes:', 'edges:', None):
            with self.subTest(name=name):
                with self.assertRaises(GraphConstructionError):
                    build_graph('aggregation', [name, 'b'], [])

    def test_graph_is_frozen(self):
        """Test the underlying digraph refuses mutation."""
        graph = chain()

        with self.assertRaises(Exception):
            graph.digraph.add_edge('c', 'a')

    def test_parse_kind(self):
        self.assertEqual(parse_kind('aggregation'), ('aggregation', False))
        self.assertEqual(parse_kind('reverse-aggregation'),
                         ('aggregation', True))
        self.assertEqual(parse_kind('generic'), ('generic', False))


class NeighborTests(SimpleTestCase):
    """Test successor lookups."""

    def test_successors(self):
        self.assertEqual(out_neighbors(chain(), 'a'), {'b'})

    def test_sink(self):
        self.assertEqual(out_neighbors(chain(), 'c'), set())

    def test_self_loop(self):
        graph = build_graph('aggregation', ['a'], [('a', 'a')])

        self.assertEqual(out_neighbors(graph, 'a'), {'a'})

    def test_unknown_node(self):
        """Test an unknown node raises a lookup error."""
        with self.assertRaises(UnknownNodeError):
            out_neighbors(chain(), 'z')
        with self.assertRaises(LookupError):
            chain().in_neighbors('z')


class TransposeTests(SimpleTestCase):
    """Test edge reversal."""

    def test_chain_reversed(self):
        reversed_chain = transpose(chain())

        self.assertEqual(reversed_chain.edges, (('b', 'a'), ('c', 'b')))
        self.assertEqual(reversed_chain.label, 'reverse-aggregation')

    def test_self_loop_fixed_point(self):
        graph = build_graph('aggregation', ['a'], [('a', 'a')])

        self.assertEqual(transpose(graph).edges, (('a', 'a'),))

    def test_empty_edge_set(self):
        graph = build_graph('return', ['a', 'b'], [])

        self.assertEqual(transpose(graph).edges, ())
        self.assertEqual(transpose(graph).nodes, ('a', 'b'))

    @settings(max_examples=100, deadline=None)
    @given(small_graphs())
    def test_involution(self, graph):
        """Test transposing twice gives the original graph back."""
        twice = transpose(transpose(graph))

        self.assertEqual(twice, graph)
        self.assertEqual(transpose(graph).nodes, graph.nodes)
        self.assertEqual(transpose(graph).number_of_edges(),
                         graph.number_of_edges())


class CountPathsTests(SimpleTestCase):
    """Test the brute-force walk counter."""

    def test_zero_depth(self):
        self.assertEqual(count_paths(chain(), 'c', 0), 1)

    def test_chain(self):
        self.assertEqual(count_paths(chain(), 'a', 2), 1)
        self.assertEqual(count_paths(chain(), 'a', 3), 0)

    def test_self_loop(self):
        graph = build_graph('aggregation', ['a'], [('a', 'a')])

        self.assertEqual(count_paths(graph, 'a', 5), 1)

    def test_star(self):
        self.assertEqual(count_paths(star(), 'root', 1), 3)
        self.assertEqual(count_paths(star(), 'root', 2), 0)

    def test_walks_listed(self):
        """Test the enumerated walks in successor order."""
        graph = build_graph('aggregation', ['a', 'b'],
                            [('a', 'a'), ('a', 'b')])

        self.assertEqual(list(iter_walks(graph, 'a', 2)), [
            ('a', 'a', 'a'), ('a', 'a', 'b'),
        ])

    def test_negative_depth(self):
        with self.assertRaises(ArgumentError):
            count_paths(chain(), 'a', -1)

    @settings(max_examples=200, deadline=None)
    @given(small_graphs(), st.integers(min_value=1, max_value=4))
    def test_enumeration_matches_recursion(self, graph, depth):
        """Test P_d(n) is the sum of P_{d-1} over the successors."""
        for node in graph.nodes:
            expected = sum(count_paths(graph, successor, depth - 1)
                           for successor in graph.out_neighbors(node))

            self.assertEqual(count_paths(graph, node, depth), expected)

    def test_duplicate_edges_do_not_count(self):
        graph = build_graph('aggregation', ['a', 'b'],
                            [('a', 'b')] * 3)

        self.assertEqual(count_paths(graph, 'a', 1), 1)


class InterchangeFormatTests(SimpleTestCase):
    """Test reading and writing the text interchange format."""

    def test_parse_single_edge(self):
        graph = parse_graph('kind: aggregation\nnodes:\nA\nB\nedges:\n'
                            'A -> B\n')

        self.assertEqual(graph.kind, 'aggregation')
        self.assertEqual(graph.nodes, ('A', 'B'))
        self.assertEqual(graph.edges, (('A', 'B'),))

    def test_isolated_nodes(self):
        graph = parse_graph('kind: inheritance\nnodes:\nx\ny\nz\nedges:\n')

        self.assertEqual(len(graph), 3)
        self.assertEqual(graph.number_of_edges(), 0)

    def test_comments_and_blank_lines(self):
        graph = parse_graph('# exported\n\nkind: return\n\nnodes:\n'
                            '# none yet\na\nedges:\n\na -> a\n')

        self.assertEqual(graph.edges, (('a', 'a'),))

    def test_reverse_label(self):
        graph = parse_graph('kind: reverse-aggregation\nnodes:\na\nb\n'
                            'edges:\nb -> a\n')

        self.assertTrue(graph.reversed)
        self.assertEqual(format_graph(graph).splitlines()[0],
                         'kind: reverse-aggregation')

    def test_unknown_kind(self):
        with self.assertRaisesMessage(GraphFormatError, 'line 1'):
            parse_graph('kind: friendship\nnodes:\n')

    def test_missing_header(self):
        with self.assertRaisesMessage(GraphFormatError, 'line 1'):
            parse_graph('nodes:\na\n')

    def test_malformed_edge(self):
        """Test a broken edge line reports its line number."""
        with self.assertRaisesMessage(GraphFormatError, 'line 5'):
            parse_graph('kind: aggregation\nnodes:\na\nedges:\na => b\n')

    def test_edge_in_nodes_section(self):
        with self.assertRaisesMessage(GraphFormatError, 'line 3'):
            parse_graph('kind: aggregation\nnodes:\na -> b\n')

    def test_undeclared_node(self):
        with self.assertRaisesMessage(GraphFormatError, 'line 5'):
            parse_graph('kind: aggregation\nnodes:\na\nedges:\na -> b\n')

    def test_file_round_trip(self):
        """Test a 6,000-node graph survives write then read."""
        graph = random_graph(6000, 5, seed=7)

        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'big.graph'
            write_graph_file(graph, path)
            loaded = read_graph_file(path)

        self.assertEqual(loaded, graph)

    def test_awkward_names_round_trip(self):
        """Test names with spaces, symbols and colons read back intact."""
        names = ['a b', 'x#y', 'Map<K, V>', 'a-b', 'kind: x', 'nodes']
        graph = build_graph('generic', names,
                            [('a b', 'x#y'), ('kind: x', 'nodes')])

        self.assertEqual(parse_graph(format_graph(graph)), graph)

    def test_missing_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'absent.graph'
            with self.assertRaisesMessage(GraphFormatError,
                                          'Cannot read graph file'):
                read_graph_file(path)

    def test_file_not_utf8(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'binary.graph'
            path.write_bytes(b'\xff\xfe')
            with self.assertRaisesMessage(GraphFormatError,
                                          'Cannot read graph file'):
                read_graph_file(path)


    def test_dot_export(self):
        """Test the DOT file carries every node and edge."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'chain.dot'
            write_dot_file(chain(), path)
            text = path.read_text()

        self.assertIn('digraph', text)
        for src, dst in (('a', 'b'), ('b', 'c')):
            self.assertIn(f'{src} -> {dst}', text)
