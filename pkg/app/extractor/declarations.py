"""
Declaration-level facts extracted from one compilation unit.

Line numbers are kept for messages only and never take part in equality,
so a pretty-printed and re-parsed unit compares equal to the original.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

PRIMITIVE_TYPES = frozenset({
    'boolean', 'byte', 'char', 'short', 'int', 'long', 'float', 'double',
})
WILDCARD = '?'

CLASS = 'class'
INTERFACE = 'interface'
ENUM = 'enum'
DECLARATION_KINDS = (CLASS, INTERFACE, ENUM)


@dataclass(frozen=True)
class TypeRef:
    """A type as written: dotted name, type arguments, array dimensions.

    Arguments of every segment of a qualified generic type are flattened
    into ``args``. A wildcard has name ``?`` and, when bounded, its bound
    as the single argument.
    """
    name: str
    args: Tuple['TypeRef', ...] = ()
    dims: int = 0
    bound: str = ''

    @property
    def simple_name(self):
        return self.name.rsplit('.', 1)[-1]

    @property
    def is_primitive(self):
        return self.name in PRIMITIVE_TYPES

    @property
    def is_wildcard(self):
        return self.name == WILDCARD

    def walk(self):
        """This type and every nested argument, wildcards skipped."""
        if not self.is_wildcard:
            yield self
        for arg in self.args:
            yield from arg.walk()

    def type_arguments(self):
        for arg in self.args:
            yield from arg.walk()

    def __str__(self):
        if self.is_wildcard:
            if not self.args:
                return WILDCARD
            return f'{WILDCARD} {self.bound} {self.args[0]}'
        text = self.name
        if self.args:
            text += '<' + ', '.join(str(arg) for arg in self.args) + '>'
        return text + '[]' * self.dims


@dataclass(frozen=True)
class FieldDecl:
    name: str
    type: TypeRef
    is_static: bool = False
    enum_constant: bool = False
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MethodDecl:
    name: str
    return_type: Optional[TypeRef]
    parameters: Tuple[TypeRef, ...] = ()
    body_line_count: int = 0
    has_body: bool = False
    type_params: Tuple[str, ...] = ()
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ConstructorDecl:
    parameters: Tuple[TypeRef, ...] = ()
    type_params: Tuple[str, ...] = ()
    line: int = field(default=0, compare=False)

    @property
    def arity(self):
        return len(self.parameters)


@dataclass(frozen=True)
class UnparsedMember:
    line: int
    reason: str


@dataclass(frozen=True)
class ClassDecl:
    qualified_name: str
    name: str
    kind: str = CLASS
    superclass: Optional[TypeRef] = None
    interfaces: Tuple[TypeRef, ...] = ()
    fields: Tuple[FieldDecl, ...] = ()
    methods: Tuple[MethodDecl, ...] = ()
    constructors: Tuple[ConstructorDecl, ...] = ()
    nested: Tuple['ClassDecl', ...] = ()
    type_params: Tuple[str, ...] = ()
    unparsed: Tuple[UnparsedMember, ...] = field(default=(), compare=False)
    line: int = field(default=0, compare=False)

    def walk(self):
        """This declaration and all nested ones, depth first."""
        yield self
        for inner in self.nested:
            yield from inner.walk()


@dataclass(frozen=True)
class CompilationUnit:
    path: str
    package: str = ''
    imports: Tuple[str, ...] = ()
    on_demand_imports: Tuple[str, ...] = ()
    classes: Tuple[ClassDecl, ...] = ()

    def walk(self):
        for decl in self.classes:
            yield from decl.walk()
