from rest_framework import serializers

from core.formatting import json_number
from smells.detectors import SMELLS


class EvidenceSerializer(serializers.Serializer):
    name = serializers.CharField()
    value = serializers.SerializerMethodField()
    threshold = serializers.SerializerMethodField()

    def get_value(self, evidence):
        return json_number(evidence.shown)

    def get_threshold(self, evidence):
        return json_number(evidence.threshold)


class SmellFindingSerializer(serializers.Serializer):
    node = serializers.CharField()
    smell = serializers.ChoiceField(choices=SMELLS)
    member = serializers.CharField(allow_blank=True)
    evidence = EvidenceSerializer(many=True)
    refactorings = serializers.ListField(child=serializers.CharField())
    verdict = serializers.SerializerMethodField()

    def get_verdict(self, finding):
        return finding.verdict()
