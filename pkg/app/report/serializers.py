"""
Validation of the merged analysis configuration and the JSON report.
"""
from rest_framework import serializers

from core.graphs import GRAPH_KINDS, REVERSE_PREFIX
from gain.engine import DISCOUNTS
from ranking.keyclass import KEY_METRICS
from ranking.serializers import (
    KeyClassReportSerializer,
    OverlapReportSerializer,
    RankingTableSerializer,
    TKCReportSerializer,
)
from smells.detectors import DEFAULT_BASIC_TYPES
from smells.serializers import SmellFindingSerializer

KIND_LABELS = GRAPH_KINDS + tuple(REVERSE_PREFIX + k for k in GRAPH_KINDS)
INPUT_MODES = ('source', 'graph', 'model')
FORMATS = ('markdown', 'csv', 'json')
SECTIONS = ('summary', 'rankings', 'overlaps', 'tkc', 'key-classes',
            'smells')
SECTION_KEYS = {
    'summary': 'summary',
    'rankings': 'rankings',
    'overlaps': 'overlaps',
    'tkc': 'tkc',
    'key-classes': 'key_classes',
    'smells': 'smells',
}


class AnalysisConfigSerializer(serializers.Serializer):
    source = serializers.CharField(allow_null=True, default=None)
    graph = serializers.CharField(allow_null=True, default=None)
    model = serializers.CharField(allow_null=True, default=None)
    kind = serializers.ListField(
        child=serializers.ChoiceField(choices=KIND_LABELS), default=list)
    discount = serializers.ChoiceField(choices=DISCOUNTS)
    gamma = serializers.FloatField()
    dmax = serializers.IntegerField(min_value=1)
    top = serializers.IntegerField(min_value=1)
    key_percentile = serializers.FloatField(min_value=0, max_value=100)
    key_min_metrics = serializers.IntegerField(min_value=1,
                                               max_value=len(KEY_METRICS))
    self_ref_threshold = serializers.IntegerField(min_value=0)
    large_class = serializers.IntegerField(min_value=0)
    primitive_fraction = serializers.FloatField()
    primitive_min_attributes = serializers.IntegerField(min_value=0)
    long_method = serializers.IntegerField(min_value=0)
    constructors = serializers.IntegerField(min_value=0)
    basic_types = serializers.ListField(
        child=serializers.CharField(), allow_empty=False,
        default=lambda: sorted(DEFAULT_BASIC_TYPES))
    format = serializers.ChoiceField(choices=FORMATS)
    out = serializers.CharField(allow_null=True, default=None)
    lenient = serializers.BooleanField(default=False)
    jobs = serializers.IntegerField(min_value=1, default=1)
    skip = serializers.ListField(
        child=serializers.ChoiceField(choices=SECTIONS), default=list)

    def validate_gamma(self, value):
        if not 0.0 < value < 1.0:
            raise serializers.ValidationError(
                'gamma must lie in the open interval (0, 1)')
        return value

    def validate_primitive_fraction(self, value):
        if not 0.0 < value <= 1.0:
            raise serializers.ValidationError(
                'primitive fraction must lie in (0, 1]')
        return value

    def validate(self, attrs):
        given = [mode for mode in INPUT_MODES if attrs.get(mode)]
        if len(given) > 1:
            raise serializers.ValidationError(
                'Give exactly one input: ' + ', '.join(
                    f'--{mode}' for mode in given))
        return attrs


class SummaryRowSerializer(serializers.Serializer):
    metric = serializers.CharField()
    max = serializers.IntegerField()
    median = serializers.IntegerField()


class SummarySerializer(serializers.Serializer):
    class_count = serializers.IntegerField()
    rows = SummaryRowSerializer(many=True)
    mean_constructors = serializers.DecimalField(max_digits=12,
                                                 decimal_places=3)


class ReportSerializer(serializers.Serializer):
    """A full report; sections listed in ``config.skip`` are dropped."""
    potential_gain = serializers.SerializerMethodField()
    summary = SummarySerializer()
    rankings = serializers.SerializerMethodField()
    overlaps = OverlapReportSerializer(many=True)
    tkc = TKCReportSerializer()
    key_classes = KeyClassReportSerializer(source='key_report')
    smells = SmellFindingSerializer(many=True)

    def get_potential_gain(self, report):
        config = report.config.pg_config
        return {
            'discount': config.discount,
            'gamma': config.gamma,
            'd_max': config.d_max,
        }

    def get_rankings(self, report):
        tables = []
        for table in report.rankings:
            data = RankingTableSerializer(table).data
            for row in data['rows']:
                facts = report.metrics[row['node']]
                row.update(
                    methods=facts.methods,
                    attributes=facts.attributes,
                    constructors=facts.constructors,
                    depth=facts.depth,
                )
            tables.append(data)
        return tables

    def to_representation(self, report):
        data = super().to_representation(report)
        for section in report.config.skip:
            data.pop(SECTION_KEYS[section], None)
        return data