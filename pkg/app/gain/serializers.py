"""
JSON and CSV forms of a potential gain result.
"""
import csv

from rest_framework import serializers

from core.exceptions import ArgumentError, ModelError
from core.formatting import format_number, json_number
from core.graphs import parse_kind
from gain.engine import DISCOUNTS, PGConfig, PGResult


class GainField(serializers.FloatField):
    """Non-negative real printed with 12 significant digits."""

    def __init__(self, **kwargs):
        kwargs.setdefault('min_value', 0.0)
        super().__init__(**kwargs)

    def to_representation(self, value):
        return json_number(float(value))


class NodeGainSerializer(serializers.Serializer):
    node = serializers.CharField()
    pg = GainField()
    r = serializers.ListField(child=GainField())


class PGResultSerializer(serializers.Serializer):
    kind = serializers.CharField(source='label')
    discount = serializers.ChoiceField(choices=DISCOUNTS,
                                       source='config.discount')
    gamma = serializers.FloatField(source='config.gamma')
    d_max = serializers.IntegerField(min_value=1, source='config.d_max')
    truncated_at = serializers.IntegerField(min_value=0)
    nodes = NodeGainSerializer(many=True, source='node_rows')

    def validate_kind(self, value):
        try:
            parse_kind(value)
        except ArgumentError as exc:
            raise serializers.ValidationError(str(exc))
        return value

    def validate(self, attrs):
        truncated_at = attrs['truncated_at']
        if truncated_at > attrs['config']['d_max']:
            raise serializers.ValidationError(
                'truncated_at cannot exceed d_max'
            )
        for row in attrs['node_rows']:
            if len(row['r']) != truncated_at:
                raise serializers.ValidationError(
                    f'{row["node"]}: expected {truncated_at} R values'
                )
        return attrs

    def create(self, validated_data):
        try:
            config = PGConfig(**validated_data['config'])
        except ArgumentError as exc:
            raise serializers.ValidationError(str(exc))
        rows = sorted(validated_data['node_rows'], key=lambda row: row['node'])
        return _result_from_rows(
            validated_data['label'], config, rows,
            validated_data['truncated_at'],
        )


def _result_from_rows(label, config, rows, truncated_at):
    nodes = tuple(row['node'] for row in rows)
    r_table = [dict.fromkeys(nodes, 1.0)]
    for depth in range(1, truncated_at + 1):
        r_table.append({row['node']: row['r'][depth - 1] for row in rows})
    return PGResult(
        label=label,
        config=config,
        nodes=nodes,
        r_table=tuple(r_table),
        pg={row['node']: row['pg'] for row in rows},
        truncated_at=truncated_at,
    )


def result_to_json(result):
    return PGResultSerializer(result).data


def result_from_json(data):
    serializer = PGResultSerializer(data=data)
    if not serializer.is_valid():
        raise ModelError(f'Invalid potential gain document: '
                         f'{serializer.errors}')
    try:
        return serializer.save()
    except serializers.ValidationError as exc:
        raise ModelError(f'Invalid potential gain document: {exc.detail}')


def csv_header(truncated_at):
    return ['node', 'pg'] + [f'r_{d}' for d in range(1, truncated_at + 1)]


def write_result_csv(result, stream):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(csv_header(result.truncated_at))
    for row in result.node_rows:
        writer.writerow(
            [row['node'], format_number(row['pg'])]
            + [format_number(value) for value in row['r']]
        )


def read_result_csv(stream, label, config=None):
    """Read a CSV written by ``write_result_csv``.

    The CSV carries no configuration; ``config`` defaults to the
    reciprocal discount.
    """
    reader = csv.reader(stream)
    header = next(reader, None)
    if not header or header[:2] != ['node', 'pg']:
        raise ModelError('potential gain CSV must start with "node,pg"')
    truncated_at = len(header) - 2
    if header != csv_header(truncated_at):
        raise ModelError(f'unexpected potential gain CSV header: {header}')

    rows = []
    for number, record in enumerate(reader, start=2):
        if len(record) != len(header):
            raise ModelError(f'line {number}: expected {len(header)} columns')
        try:
            values = [float(value) for value in record[1:]]
        except ValueError:
            raise ModelError(f'line {number}: non-numeric value')
        rows.append({'node': record[0], 'pg': values[0], 'r': values[1:]})

    config = config or PGConfig()
    if truncated_at > config.d_max:
        raise ModelError('CSV holds more depths than d_max allows')
    rows.sort(key=lambda row: row['node'])
    return _result_from_rows(label, config, rows, truncated_at)
