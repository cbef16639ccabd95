"""
JSON document for a class model.

The document stores the parsed units (enough to rebuild the model) plus
the derived data downstream stages read directly: per-class counts and
depths, the resolution table and the edges of every coupling kind.
"""
import json
from pathlib import Path

from rest_framework import serializers

from core.exceptions import InvariantViolation, ModelError
from core.graphs import GRAPH_KINDS
from extractor.declarations import (
    DECLARATION_KINDS,
    ClassDecl,
    CompilationUnit,
    ConstructorDecl,
    FieldDecl,
    MethodDecl,
    TypeRef,
    UnparsedMember,
)
from extractor.model import build_coupling_graph, build_model, count_members

MODEL_SCHEMA = 'keyclass.class-model/1'
DERIVED_KEYS = ('classes', 'depth', 'resolution', 'edges')


class TypeRefSerializer(serializers.Serializer):
    name = serializers.CharField()
    dims = serializers.IntegerField(min_value=0, default=0)
    bound = serializers.ChoiceField(choices=['', 'extends', 'super'],
                                    allow_blank=True, default='')

    def get_fields(self):
        fields = super().get_fields()
        fields['args'] = TypeRefSerializer(many=True, required=False)
        return fields


class FieldDeclSerializer(serializers.Serializer):
    name = serializers.CharField()
    type = TypeRefSerializer()
    is_static = serializers.BooleanField(default=False)
    enum_constant = serializers.BooleanField(default=False)
    line = serializers.IntegerField(min_value=0, default=0)


class MethodDeclSerializer(serializers.Serializer):
    name = serializers.CharField()
    return_type = TypeRefSerializer(allow_null=True)
    parameters = TypeRefSerializer(many=True)
    body_line_count = serializers.IntegerField(min_value=0)
    has_body = serializers.BooleanField()
    type_params = serializers.ListField(child=serializers.CharField(),
                                        default=list)
    line = serializers.IntegerField(min_value=0, default=0)

    def validate(self, attrs):
        if not attrs['has_body'] and attrs['body_line_count']:
            raise serializers.ValidationError(
                'a method without a body has body_line_count 0'
            )
        return attrs


class ConstructorDeclSerializer(serializers.Serializer):
    parameters = TypeRefSerializer(many=True)
    type_params = serializers.ListField(child=serializers.CharField(),
                                        default=list)
    line = serializers.IntegerField(min_value=0, default=0)


class UnparsedMemberSerializer(serializers.Serializer):
    line = serializers.IntegerField(min_value=0)
    reason = serializers.CharField()


class ClassDeclSerializer(serializers.Serializer):
    qualified_name = serializers.CharField()
    name = serializers.CharField()
    kind = serializers.ChoiceField(choices=DECLARATION_KINDS)
    superclass = TypeRefSerializer(allow_null=True)
    interfaces = TypeRefSerializer(many=True)
    fields = FieldDeclSerializer(many=True)
    methods = MethodDeclSerializer(many=True)
    constructors = ConstructorDeclSerializer(many=True)
    type_params = serializers.ListField(child=serializers.CharField(),
                                        default=list)
    unparsed = UnparsedMemberSerializer(many=True, required=False)
    line = serializers.IntegerField(min_value=0, default=0)

    def get_fields(self):
        fields = super().get_fields()
        fields['nested'] = ClassDeclSerializer(many=True, required=False)
        return fields


class CompilationUnitSerializer(serializers.Serializer):
    path = serializers.CharField()
    package = serializers.CharField(allow_blank=True)
    imports = serializers.ListField(child=serializers.CharField())
    on_demand_imports = serializers.ListField(child=serializers.CharField())
    classes = ClassDeclSerializer(many=True)


def _type_ref(data):
    if data is None:
        return None
    return TypeRef(
        name=data['name'],
        args=tuple(_type_ref(arg) for arg in data.get('args', ())),
        dims=data.get('dims', 0),
        bound=data.get('bound', ''),
    )


def _class_decl(data):
    return ClassDecl(
        qualified_name=data['qualified_name'],
        name=data['name'],
        kind=data['kind'],
        superclass=_type_ref(data['superclass']),
        interfaces=tuple(_type_ref(t) for t in data['interfaces']),
        fields=tuple(
            FieldDecl(f['name'], _type_ref(f['type']), f['is_static'],
                      f['enum_constant'], line=f['line'])
            for f in data['fields']
        ),
        methods=tuple(
            MethodDecl(
                name=m['name'],
                return_type=_type_ref(m['return_type']),
                parameters=tuple(_type_ref(p) for p in m['parameters']),
                body_line_count=m['body_line_count'],
                has_body=m['has_body'],
                type_params=tuple(m['type_params']),
                line=m['line'],
            )
            for m in data['methods']
        ),
        constructors=tuple(
            ConstructorDecl(
                parameters=tuple(_type_ref(p) for p in c['parameters']),
                type_params=tuple(c['type_params']),
                line=c['line'],
            )
            for c in data['constructors']
        ),
        nested=tuple(_class_decl(n) for n in data.get('nested', ())),
        type_params=tuple(data['type_params']),
        unparsed=tuple(
            UnparsedMember(u['line'], u['reason'])
            for u in data.get('unparsed', ())
        ),
        line=data['line'],
    )


class ClassModelSerializer(serializers.Serializer):
    schema = serializers.SerializerMethodField()
    units = CompilationUnitSerializer(many=True)
    classes = serializers.SerializerMethodField()
    depth = serializers.SerializerMethodField()
    resolution = serializers.SerializerMethodField()
    edges = serializers.SerializerMethodField()

    def get_schema(self, model):
        return MODEL_SCHEMA

    def get_classes(self, model):
        rows = []
        for name, decl in model.classes.items():
            counts = count_members(decl)
            rows.append({
                'name': name,
                'file': model.files[name],
                'kind': decl.kind,
                'depth': model.depth[name],
                'methods': counts.methods,
                'attributes': counts.attributes,
                'constructors': counts.constructors,
            })
        return rows

    def get_depth(self, model):
        return dict(model.depth)

    def get_resolution(self, model):
        return [
            {'context': context, 'name': name, 'target': target}
            for (context, name), target in sorted(model.resolution.items())
        ]

    def get_edges(self, model):
        return {
            kind: [list(edge) for edge in
                   build_coupling_graph(model, kind).edges]
            for kind in GRAPH_KINDS
        }

    def validate(self, attrs):
        schema = self.initial_data.get('schema')
        if schema != MODEL_SCHEMA:
            raise serializers.ValidationError(
                f'unsupported schema {schema!r}, expected {MODEL_SCHEMA!r}'
            )
        return attrs

    def create(self, validated_data):
        units = [
            CompilationUnit(
                path=unit['path'],
                package=unit['package'],
                imports=tuple(unit['imports']),
                on_demand_imports=tuple(unit['on_demand_imports']),
                classes=tuple(_class_decl(c) for c in unit['classes']),
            )
            for unit in validated_data['units']
        ]
        return build_model(units)


def model_to_json(model):
    return ClassModelSerializer(model).data


def model_from_json(data):
    """Rebuild a model and check it against the stored derived data."""
    serializer = ClassModelSerializer(data=data)
    if not serializer.is_valid():
        raise ModelError(f'Invalid class model document: {serializer.errors}')
    model = serializer.save()

    rebuilt = json.loads(json.dumps(model_to_json(model)))
    for key in DERIVED_KEYS:
        if key in data and data[key] != rebuilt[key]:
            raise InvariantViolation(
                f'Stored {key!r} disagrees with the rebuilt class model'
            )
    return model


def write_model_file(model, path):
    text = json.dumps(model_to_json(model), indent=2) + '\n'
    Path(path).write_text(text, encoding='utf-8')


def read_model_file(path):
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except (OSError, ValueError) as exc:
        raise ModelError(f'Cannot read class model {path}: {exc}')
    return model_from_json(data)
