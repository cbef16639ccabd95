"""
Tests for extraction over the bundled shop corpus.
"""
import json
from pathlib import Path

from django.test import SimpleTestCase

from extractor.loader import parse_source_tree
from extractor.model import build_model
from extractor.serializers import model_to_json

FIXTURES = Path(__file__).resolve().parent / 'fixtures'
CORPUS = FIXTURES / 'corpus'


def load_expected():
    return json.loads((FIXTURES / 'expected_model.json').read_text())


def corpus_document():
    """The corpus model as a plain JSON document."""
    units, _ = parse_source_tree(CORPUS)
    return json.loads(json.dumps(model_to_json(build_model(units))))


class FixtureCorpusTests(SimpleTestCase):
    """Test counts and edges against the hand-written expectation."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.document = corpus_document()
        cls.expected = load_expected()

    def test_class_rows(self):
        self.assertEqual(self.document['classes'], self.expected['classes'])

    def test_edges_per_kind(self):
        for kind, edges in self.expected['edges'].items():
            with self.subTest(kind=kind):
                self.assertEqual(self.document['edges'][kind], edges)

    def test_edge_counts(self):
        counts = {kind: len(edges)
                  for kind, edges in self.document['edges'].items()}

        self.assertEqual(counts, {
            'inheritance': 3, 'aggregation': 21, 'interface': 2,
            'parameter': 11, 'return': 11, 'generic': 7,
        })

    def test_literal_and_comment_names_ignored(self):
        """Test names inside strings and comments never become edges."""
        product = [dst for src, dst in self.document['edges']['aggregation']
                   if src == 'org.shop.model.Product']

        self.assertNotIn('org.shop.model.Customer', product)

    def test_long_method_bodies(self):
        units, _ = parse_source_tree(CORPUS)
        printer = build_model(units).classes[
            'org.shop.service.ReportPrinter']

        self.assertEqual(
            [(m.name, m.body_line_count) for m in printer.methods],
            [('print', 120), ('header', 49)],
        )
