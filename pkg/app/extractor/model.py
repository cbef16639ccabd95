"""
Class model: name resolution, inheritance depth and coupling graphs.
"""
import logging
from collections import namedtuple
from dataclasses import dataclass, replace
from typing import Dict, Optional, Tuple

from core.exceptions import ArgumentError, ModelError
from core.graphs import GRAPH_KINDS, build_graph
from extractor.declarations import INTERFACE, ClassDecl, CompilationUnit

logger = logging.getLogger(__name__)

ROOT_CLASS = 'java.lang.Object'

MemberCounts = namedtuple('MemberCounts', 'methods attributes constructors')


@dataclass(frozen=True)
class ClassModel:
    """Every declared class with its resolved references and depth.

    ``resolution`` maps (context class, type name as written) to the
    qualified name of a model class, or ``None`` for external types.
    """
    units: Tuple[CompilationUnit, ...]
    classes: Dict[str, ClassDecl]
    files: Dict[str, str]
    resolution: Dict[Tuple[str, str], Optional[str]]
    depth: Dict[str, int]

    def resolve(self, context, type_ref):
        """Qualified name of the model class ``type_ref`` denotes, if any."""
        if type_ref is None or type_ref.is_primitive or type_ref.is_wildcard:
            return None
        return self.resolution.get((context, type_ref.name))

    def resolved_references(self, context, type_ref, skip=()):
        """Model classes named anywhere in ``type_ref``, arguments included."""
        targets = []
        for part in type_ref.walk():
            if part.name in skip:
                continue
            target = self.resolve(context, part)
            if target is not None and target not in targets:
                targets.append(target)
        return targets

    def resolved_arguments(self, context, type_ref, skip=()):
        targets = []
        for part in type_ref.type_arguments():
            if part.name in skip:
                continue
            target = self.resolve(context, part)
            if target is not None and target not in targets:
                targets.append(target)
        return targets

    def superclass_of(self, name):
        decl = self.classes[name]
        if decl.kind == INTERFACE or name == ROOT_CLASS:
            return None
        return self.resolve(name, decl.superclass)

    def __len__(self):
        return len(self.classes)


class _Resolver:
    """Resolves simple and dotted type names seen from a class."""

    def __init__(self, units):
        self.classes = {}
        self.files = {}
        self.unit_of = {}
        self.enclosing = {}

        for unit in sorted(units, key=lambda u: u.path):
            for top in unit.classes:
                self._register(top, unit, None)

        self.visible_params = {}
        for name, decl in self.classes.items():
            params = set(decl.type_params)
            outer = self.enclosing[name]
            while outer is not None:
                params.update(self.classes[outer].type_params)
                outer = self.enclosing[outer]
            self.visible_params[name] = frozenset(params)

    def _register(self, decl, unit, outer):
        name = decl.qualified_name
        if name in self.classes:
            raise ModelError(
                f'Duplicate class {name} declared in {self.files[name]} '
                f'and {unit.path}'
            )
        self.classes[name] = decl
        self.files[name] = unit.path
        self.unit_of[name] = unit
        self.enclosing[name] = outer
        for inner in decl.nested:
            self._register(inner, unit, name)

    def resolve(self, context, written):
        first, dot, rest = written.partition('.')
        if not dot:
            if written in self.visible_params[context]:
                return None
            return self._resolve_simple(context, written)
        if written in self.classes:
            return written
        if first in self.visible_params[context]:
            return None
        base = self._resolve_simple(context, first)
        if base is None:
            return None
        candidate = f'{base}.{rest}'
        return candidate if candidate in self.classes else None

    def _resolve_simple(self, context, simple):
        scope = context
        while scope is not None:
            if self.classes[scope].name == simple:
                return scope
            candidate = f'{scope}.{simple}'
            if candidate in self.classes:
                return candidate
            scope = self.enclosing[scope]

        unit = self.unit_of[context]
        for top in unit.classes:
            if top.name == simple:
                return top.qualified_name

        candidate = f'{unit.package}.{simple}' if unit.package else simple
        if candidate in self.classes:
            return candidate

        for imported in unit.imports:
            if imported.rsplit('.', 1)[-1] == simple:
                return imported if imported in self.classes else None

        for package in unit.on_demand_imports:
            candidate = f'{package}.{simple}'
            if candidate in self.classes:
                return candidate
        return None


def _type_refs(decl):
    """(type, names to skip) for every type written in a declaration."""
    if decl.superclass is not None:
        yield decl.superclass, ()
    for interface in decl.interfaces:
        yield interface, ()
    yield from _member_types(decl)
    for constructor in decl.constructors:
        for param in constructor.parameters:
            yield param, constructor.type_params


def _member_types(decl):
    """Field, parameter and return types of a declaration."""
    for field in decl.fields:
        yield field.type, ()
    for method in decl.methods:
        if method.return_type is not None:
            yield method.return_type, method.type_params
        for param in method.parameters:
            yield param, method.type_params


def build_model(units):
    """Merge parsed units into one model; files are processed in path order."""
    resolver = _Resolver(units)
    resolution = {}
    for name in sorted(resolver.classes):
        for type_ref, skip in _type_refs(resolver.classes[name]):
            for part in type_ref.walk():
                if part.is_primitive or part.name in skip:
                    continue
                key = (name, part.name)
                if key not in resolution:
                    resolution[key] = resolver.resolve(name, part.name)

    classes = {
        name: resolver.classes[name] for name in sorted(resolver.classes)
    }
    model = ClassModel(
        units=tuple(sorted(units, key=lambda u: u.path)),
        classes=classes,
        files={name: resolver.files[name] for name in classes},
        resolution=resolution,
        depth={},
    )
    model = replace(model, depth=compute_depth(model))
    logger.debug('Built model with %d classes from %d units',
                 len(model), len(model.units))
    return model


def compute_depth(model):
    """Inheritance depth per class; interfaces and java.lang.Object are 0.

    A class without a superclass in the model hangs off the implicit root
    and gets depth 1.
    """
    depth = {}
    for name in model.classes:
        chain = []
        position = {}
        current = name
        while current not in depth:
            if current in position:
                cycle = chain[position[current]:] + [current]
                raise ModelError(
                    'Inheritance cycle: ' + ' -> '.join(cycle)
                )
            parent = model.superclass_of(current)
            if parent is None:
                decl = model.classes[current]
                is_root = decl.kind == INTERFACE or current == ROOT_CLASS
                depth[current] = 0 if is_root else 1
                break
            position[current] = len(chain)
            chain.append(current)
            current = parent
        for node in reversed(chain):
            depth[node] = depth[model.superclass_of(node)] + 1
    return {name: depth[name] for name in model.classes}


def _coupling_edges(model, kind):
    for name, decl in model.classes.items():
        if kind == 'inheritance':
            if decl.kind == INTERFACE:
                parents = [model.resolve(name, t) for t in decl.interfaces]
            else:
                parents = [model.resolve(name, decl.superclass)]
            for parent in parents:
                if parent is not None:
                    yield parent, name
        elif kind == 'interface':
            if decl.kind != INTERFACE:
                for interface in decl.interfaces:
                    target = model.resolve(name, interface)
                    if target is not None:
                        yield target, name
        elif kind == 'aggregation':
            for field in decl.fields:
                for target in model.resolved_references(name, field.type):
                    yield name, target
        elif kind == 'parameter':
            for method in decl.methods:
                for param in method.parameters:
                    for target in model.resolved_references(
                            name, param, method.type_params):
                        yield name, target
        elif kind == 'return':
            for method in decl.methods:
                if method.return_type is None:
                    continue
                for target in model.resolved_references(
                        name, method.return_type, method.type_params):
                    yield name, target
        elif kind == 'generic':
            for type_ref, skip in _member_types(decl):
                for target in model.resolved_arguments(name, type_ref, skip):
                    yield name, target


def build_coupling_graph(model, kind):
    """One coupling graph over every class of the model.

    Inheritance and interface edges point from the supertype to the
    subtype; the other kinds point from the using class to the used one.
    """
    if kind not in GRAPH_KINDS:
        raise ArgumentError(f'Unknown coupling kind: {kind!r}')
    return build_graph(kind, model.classes, _coupling_edges(model, kind))


def count_members(decl):
    """Declared methods, attributes and constructors of one class."""
    return MemberCounts(
        methods=len(decl.methods),
        attributes=len(decl.fields),
        constructors=len(decl.constructors),
    )
