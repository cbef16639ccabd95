"""
JSON forms of ranking tables, overlaps and key-class reports.
"""
from rest_framework import serializers

from core.formatting import json_number
from ranking.keyclass import KEY_METRICS


class NumberField(serializers.Field):
    """Integer or real printed the way the Markdown tables print it."""

    def to_representation(self, value):
        return json_number(value)


class RankRowSerializer(serializers.Serializer):
    rank = serializers.IntegerField(min_value=1)
    node = serializers.CharField()
    value = NumberField()


class RankingTableSerializer(serializers.Serializer):
    metric = serializers.CharField()
    rows = RankRowSerializer(many=True)


class OverlapRowSerializer(serializers.Serializer):
    node = serializers.CharField()
    position_a = serializers.IntegerField(min_value=1)
    position_b = serializers.IntegerField(min_value=1)


class OverlapReportSerializer(serializers.Serializer):
    metric_a = serializers.CharField()
    metric_b = serializers.CharField()
    rows = OverlapRowSerializer(many=True)


class TKCEntrySerializer(serializers.Serializer):
    node = serializers.CharField()
    self_references = serializers.IntegerField(min_value=0)
    in_both = serializers.BooleanField()


class TKCReportSerializer(serializers.Serializer):
    threshold = serializers.IntegerField(min_value=0)
    entries = TKCEntrySerializer(many=True)


class KeyClassVerdictSerializer(serializers.Serializer):
    node = serializers.CharField()
    values = serializers.SerializerMethodField()
    percentiles = serializers.SerializerMethodField()
    passed = serializers.ListField(child=serializers.CharField())
    key = serializers.BooleanField()
    tkc = serializers.BooleanField()
    evidence = serializers.ListField(child=serializers.CharField())

    def get_values(self, verdict):
        return {m: json_number(verdict.values[m]) for m in KEY_METRICS}

    def get_percentiles(self, verdict):
        return {m: json_number(verdict.percentiles[m]) for m in KEY_METRICS}


class KeyClassReportSerializer(serializers.Serializer):
    percentile = serializers.FloatField(source='config.percentile')
    min_metrics = serializers.IntegerField(source='config.min_metrics')
    threshold = NumberField()
    class_count = serializers.IntegerField()
    key_classes = serializers.SerializerMethodField()
    verdicts = KeyClassVerdictSerializer(many=True)
    tkc = TKCReportSerializer(allow_null=True)

    def get_key_classes(self, report):
        return [verdict.node for verdict in report.key_classes]
