"""
Declaration-level parsing of Java sources with ``javalang``.

Only what the class metrics need is kept: package, imports, type
declarations with their supertypes, fields, methods and constructors.
Method, constructor and initializer bodies are found by brace matching
over the tokens; their line counts are taken there and the bodies are
emptied before ``javalang.parser.Parser`` reads the rest.
"""
import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Optional, Tuple

from javalang import tree
from javalang.parser import JavaSyntaxError, Parser
from javalang.tokenizer import Annotation

from core.exceptions import SourceParseError
from extractor.declarations import (
    CLASS,
    ENUM,
    INTERFACE,
    WILDCARD,
    ClassDecl,
    CompilationUnit,
    ConstructorDecl,
    FieldDecl,
    MethodDecl,
    TypeRef,
    UnparsedMember,
)
from extractor.tokens import is_symbol, line_of, match_brackets, tokenize

logger = logging.getLogger(__name__)

TYPE_KEYWORDS = frozenset({'class', 'interface', 'enum'})


@dataclass(frozen=True)
class MemberSpan:
    """Tokens ``[start, end)`` of one member of the type ``scope``."""
    start: int
    end: int
    scope: Tuple[str, ...]


@dataclass(frozen=True)
class BodySpan:
    scope: Tuple[str, ...]
    name: Optional[str]
    opening: int
    closing: int
    line_count: int


class DeclarationScanner:
    """Find member and body spans by brace matching.

    ``scope`` is the chain of simple names of the enclosing type
    declarations. Bodies of local and anonymous classes are inside
    method bodies and are never looked at.
    """

    def __init__(self, tokens, partner):
        self.tokens = tokens
        self.partner = partner
        self.members = []
        self.bodies = []

    def scan(self):
        self._members(0, len(self.tokens), ())
        return self

    def member_at(self, index):
        """The innermost member span holding token ``index``."""
        found = None
        for span in self.members:
            if span.start <= index < span.end:
                if found is None or len(span.scope) > len(found.scope):
                    found = span
        return found

    def _at(self, index, value):
        return (0 <= index < len(self.tokens)
                and is_symbol(self.tokens[index], value))

    def _skip(self, index):
        return self.partner.get(index, index) + 1

    def _members(self, start, end, scope):
        index = start
        while index < end:
            first = index
            index = self._member(index, end, scope)
            if scope:
                self.members.append(MemberSpan(first, index, scope))

    def _member(self, index, end, scope):
        params = None
        assigned = False
        while index < end:
            token = self.tokens[index]
            if is_symbol(token, ';'):
                return index + 1
            if (isinstance(token, Annotation)
                    and not self._at(index + 1, 'interface')):
                index = self._skip_annotation(index)
                continue
            if (token.value in TYPE_KEYWORDS and not assigned
                    and not self._at(index - 1, '.')):
                return self._type(index, end, scope)
            if is_symbol(token, '(') or is_symbol(token, '['):
                if token.value == '(' and params is None and not assigned:
                    params = index
                index = self._skip(index)
                continue
            if is_symbol(token, '=') or (params is not None
                                         and token.value == 'default'):
                assigned = True
            elif is_symbol(token, '{'):
                if assigned:
                    index = self._skip(index)
                    continue
                name = None if params is None else self.tokens[params - 1]
                self._body(index, scope, name and name.value)
                return self._skip(index)
            index += 1
        return index

    def _skip_annotation(self, index):
        index += 1
        while self._at(index + 1, '.'):
            index += 2
        index += 1
        if self._at(index, '('):
            index = self._skip(index)
        return index

    def _type(self, index, end, scope):
        name = self.tokens[index + 1].value
        opening = index + 1
        while opening < end and not self._at(opening, '{'):
            opening = self._skip(opening)
        if opening >= end:
            return end
        closing = self.partner[opening]
        first = opening + 1
        if self.tokens[index].value == 'enum':
            while first < closing and not self._at(first, ';'):
                first = self._skip(first)
            first += 1
        self._members(first, closing, scope + (name,))
        return closing + 1

    def _body(self, opening, scope, name):
        closing = self.partner[opening]
        lines = line_of(self.tokens[closing]) - line_of(self.tokens[opening])
        self.bodies.append(
            BodySpan(scope, name, opening, closing, max(lines - 1, 0)))


def _line(node):
    position = getattr(node, 'position', None)
    return position.line if position else 0


def _type_ref(node, extra_dims=0):
    dims = len(node.dimensions or ()) + extra_dims
    if isinstance(node, tree.BasicType):
        return TypeRef(node.name, dims=dims)
    names = []
    args = []
    part = node
    while part is not None:
        names.append(part.name)
        args.extend(_type_argument(arg) for arg in part.arguments or ())
        part = part.sub_type
    return TypeRef('.'.join(names), tuple(args), dims)


def _type_argument(node):
    if node.pattern_type == WILDCARD:
        return TypeRef(WILDCARD)
    bound = _type_ref(node.type)
    if node.pattern_type:
        return TypeRef(WILDCARD, (bound,), bound=node.pattern_type)
    return bound


def _type_params(node):
    params = getattr(node, 'type_parameters', None) or ()
    return tuple(param.name for param in params)


def _parameters(node):
    return tuple(_type_ref(param.type, 1 if param.varargs else 0)
                 for param in node.parameters)


class UnitBuilder:
    """Turn a javalang compilation unit into declaration records."""

    def __init__(self, path, bodies, unparsed):
        self.path = path
        self.bodies = defaultdict(deque)
        for body in bodies:
            if body.name is not None:
                self.bodies[body.scope, body.name].append(body.line_count)
        self.unparsed = unparsed

    def build(self, unit):
        package = unit.package.name if unit.package else ''
        imports = [imp for imp in unit.imports if not imp.static]
        prefix = f'{package}.' if package else ''
        return CompilationUnit(
            path=self.path,
            package=package,
            imports=tuple(i.path for i in imports if not i.wildcard),
            on_demand_imports=tuple(i.path for i in imports if i.wildcard),
            classes=tuple(self._declaration(node, prefix, ())
                          for node in unit.types if node is not None),
        )

    def _body_lines(self, scope, name):
        queue = self.bodies[scope, name]
        return queue.popleft() if queue else 0

    def _declaration(self, node, prefix, outer):
        scope = outer + (node.name,)
        qualified_name = prefix + node.name
        superclass = None
        interfaces = ()
        members = node.body
        fields = []
        if isinstance(node, tree.EnumDeclaration):
            kind = ENUM
            interfaces = node.implements or ()
            members = node.body.declarations
            fields.extend(
                FieldDecl(constant.name, TypeRef(node.name), is_static=True,
                          enum_constant=True, line=_line(constant))
                for constant in node.body.constants
            )
        elif isinstance(node, tree.ClassDeclaration):
            kind = CLASS
            superclass = node.extends
            interfaces = node.implements or ()
        else:
            kind = INTERFACE
            interfaces = getattr(node, 'extends', None) or ()

        methods = []
        constructors = []
        nested = []
        for member in members or ():
            if isinstance(member, tree.FieldDeclaration):
                is_static = (kind == INTERFACE
                             or 'static' in (member.modifiers or ()))
                fields.extend(
                    FieldDecl(
                        declarator.name,
                        _type_ref(member.type,
                                  len(declarator.dimensions or ())),
                        is_static=is_static,
                        line=_line(member),
                    )
                    for declarator in member.declarators
                )
            elif isinstance(member, tree.MethodDeclaration):
                has_body = member.body is not None
                methods.append(MethodDecl(
                    name=member.name,
                    return_type=(None if member.return_type is None
                                 else _type_ref(member.return_type)),
                    parameters=_parameters(member),
                    body_line_count=(self._body_lines(scope, member.name)
                                     if has_body else 0),
                    has_body=has_body,
                    type_params=_type_params(member),
                    line=_line(member),
                ))
            elif isinstance(member, tree.ConstructorDeclaration):
                self._body_lines(scope, member.name)
                constructors.append(ConstructorDecl(
                    parameters=_parameters(member),
                    type_params=_type_params(member),
                    line=_line(member),
                ))
            elif isinstance(member, tree.AnnotationMethod):
                methods.append(MethodDecl(
                    name=member.name,
                    return_type=_type_ref(member.return_type,
                                          len(member.dimensions or ())),
                    line=_line(member),
                ))
            elif isinstance(member, tree.TypeDeclaration):
                nested.append(self._declaration(
                    member, f'{qualified_name}.', scope))

        return ClassDecl(
            qualified_name=qualified_name,
            name=node.name,
            kind=kind,
            superclass=None if superclass is None else _type_ref(superclass),
            interfaces=tuple(_type_ref(ref) for ref in interfaces),
            fields=tuple(fields),
            methods=tuple(methods),
            constructors=tuple(constructors),
            nested=tuple(nested),
            type_params=_type_params(node),
            unparsed=tuple(self.unparsed.get(scope, ())),
            line=_line(node),
        )


def _syntax_error(exc, path, tokens):
    position = getattr(exc.at, 'position', None)
    if position is None and tokens:
        position = tokens[-1].position
    line = position.line if position else None
    return SourceParseError(exc.description, path, line)


def parse_compilation_unit(source, path='<string>'):
    """Parse one Java source file into a ``CompilationUnit``.

    A member javalang rejects is dropped, logged and kept as an
    ``UnparsedMember`` of its class. Anything outside a member, and any
    lexical or bracket error, raises ``SourceParseError``.
    """
    tokens = tokenize(source, path)
    scanner = DeclarationScanner(tokens, match_brackets(tokens, path)).scan()
    keep = [True] * len(tokens)
    for body in scanner.bodies:
        for index in range(body.opening + 1, body.closing):
            keep[index] = False
    index_of = {id(token): index for index, token in enumerate(tokens)}

    unparsed = defaultdict(list)
    while True:
        try:
            unit = Parser([t for t, kept in zip(tokens, keep) if kept]).parse()
            break
        except JavaSyntaxError as exc:
            span = scanner.member_at(index_of.get(id(exc.at), -1))
            if span is None:
                raise _syntax_error(exc, path, tokens) from exc
            line = line_of(tokens[span.start])
            logger.warning('%s:%d: unparsed member in %s: %s', path, line,
                           '.'.join(span.scope), exc.description)
            unparsed[span.scope].append(
                UnparsedMember(line, exc.description))
            for index in range(span.start, span.end):
                keep[index] = False

    bodies = [body for body in scanner.bodies if keep[body.opening]]
    return UnitBuilder(path, bodies, unparsed).build(unit)
