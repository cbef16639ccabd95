"""
Tests for the JSON and CSV forms of a potential gain result.
"""
import io
import json

from django.test import SimpleTestCase

from core.exceptions import ModelError
from core.graphs import build_graph
from gain.engine import DECAY, PGConfig, potential_gain
from gain.serializers import (
    read_result_csv,
    result_from_json,
    result_to_json,
    write_result_csv,
)


def chain_result(config=None):
    """Potential gain of the chain a -> b -> c."""
    graph = build_graph('aggregation', ['a', 'b', 'c'],
                        [('a', 'b'), ('b', 'c')])
    return potential_gain(graph, config)


class ResultJsonTests(SimpleTestCase):
    """Test the JSON document of a result."""

    def test_document_fields(self):
        data = json.loads(json.dumps(result_to_json(chain_result())))

        self.assertEqual(data['kind'], 'aggregation')
        self.assertEqual(data['discount'], 'reciprocal')
        self.assertEqual(data['d_max'], 15)
        self.assertEqual(data['truncated_at'], 2)
        self.assertEqual(data['nodes'][0], {
            'node': 'a', 'pg': 0.583333333333, 'r': [0.333333333333, 0.5],
        })

    def test_load_keeps_values(self):
        """Test a loaded document recomputes to its stored Pg."""
        config = PGConfig(DECAY, 0.25, 4)
        data = json.loads(json.dumps(result_to_json(chain_result(config))))

        loaded = result_from_json(data)

        self.assertEqual(loaded.config, config)
        self.assertEqual(loaded.truncated_at, 2)
        for node, value in loaded.recompute_pg().items():
            self.assertAlmostEqual(value, loaded.pg[node], delta=1e-11)

    def test_wrong_r_length(self):
        data = json.loads(json.dumps(result_to_json(chain_result())))
        data['nodes'][1]['r'] = [0.3]

        with self.assertRaisesMessage(ModelError, 'expected 2 R values'):
            result_from_json(data)

    def test_truncation_past_d_max(self):
        data = json.loads(json.dumps(result_to_json(chain_result())))
        data['d_max'] = 1

        with self.assertRaises(ModelError):
            result_from_json(data)

    def test_negative_gain_rejected(self):
        data = json.loads(json.dumps(result_to_json(chain_result())))
        data['nodes'][0]['pg'] = -1.0

        with self.assertRaises(ModelError):
            result_from_json(data)

    def test_unknown_kind_rejected(self):
        data = json.loads(json.dumps(result_to_json(chain_result())))
        data['kind'] = 'friendship'

        with self.assertRaises(ModelError):
            result_from_json(data)


class ResultCsvTests(SimpleTestCase):
    """Test the CSV table of a result."""

    def test_rows(self):
        stream = io.StringIO()
        write_result_csv(chain_result(), stream)

        self.assertEqual(stream.getvalue().splitlines(), [
            'node,pg,r_1,r_2',
            'a,0.583333333333,0.333333333333,0.5',
            'b,0.333333333333,0.333333333333,0',
            'c,0,0,0',
        ])

    def test_read_back(self):
        stream = io.StringIO()
        write_result_csv(chain_result(), stream)
        stream.seek(0)

        loaded = read_result_csv(stream, 'aggregation')

        self.assertEqual(loaded.nodes, ('a', 'b', 'c'))
        self.assertEqual(loaded.truncated_at, 2)
        self.assertEqual(loaded.r(2, 'a'), 0.5)

    def test_bad_header(self):
        with self.assertRaises(ModelError):
            read_result_csv(io.StringIO('name,value\na,1\n'), 'aggregation')

    def test_short_row(self):
        """Test a row with missing columns names its line."""
        with self.assertRaisesMessage(ModelError, 'line 3'):
            read_result_csv(io.StringIO('node,pg,r_1\na,1,1\nb,0\n'),
                            'aggregation')
