"""
Render a parsed unit back to Java source.

Only declarations are printed. Method bodies become blank lines so the
re-parsed body line counts match. Initializers and unparsed members are
dropped, except that interface constants get a zero value.
"""
from extractor.declarations import ENUM, INTERFACE

INDENT = '    '


def _type_params(names):
    return f'<{", ".join(names)}> ' if names else ''


def _parameters(types):
    return ', '.join(f'{param} p{index}' for index, param in enumerate(types))


def _constant_value(type_ref):
    if type_ref.dims or not type_ref.is_primitive:
        return 'null'
    return 'false' if type_ref.name == 'boolean' else '0'


def _body(lines, indent):
    return ['{'] + [''] * lines + [f'{indent}}}']


def _render_method(method, decl, indent):
    returns = 'void' if method.return_type is None else str(method.return_type)
    head = (f'{indent}{_type_params(method.type_params)}{returns} '
            f'{method.name}({_parameters(method.parameters)})')
    if not method.has_body:
        prefix = '' if decl.kind == INTERFACE else 'abstract '
        return [f'{indent}{prefix}{head.lstrip()};']
    if decl.kind == INTERFACE:
        head = f'{indent}default {head.lstrip()}'
    lines = _body(method.body_line_count, indent)
    lines[0] = f'{head} {lines[0]}'
    return lines


def _render_class(decl, indent=''):
    header = f'{indent}{decl.kind} {decl.name}'
    if decl.type_params:
        header += f'<{", ".join(decl.type_params)}>'
    if decl.kind == INTERFACE:
        if decl.interfaces:
            header += ' extends ' + ', '.join(map(str, decl.interfaces))
    else:
        if decl.superclass is not None:
            header += f' extends {decl.superclass}'
        if decl.interfaces:
            header += ' implements ' + ', '.join(map(str, decl.interfaces))

    inner = indent + INDENT
    lines = [header + ' {']
    fields = list(decl.fields)
    if decl.kind == ENUM:
        constants = [f.name for f in fields if f.enum_constant]
        fields = [f for f in fields if not f.enum_constant]
        lines.append(f'{inner}{", ".join(constants)};')

    for field in fields:
        shown_static = field.is_static and decl.kind != INTERFACE
        static = 'static ' if shown_static else ''
        value = ''
        if decl.kind == INTERFACE:
            value = f' = {_constant_value(field.type)}'
        lines.append(f'{inner}{static}{field.type} {field.name}{value};')
    for constructor in decl.constructors:
        head = (f'{inner}{_type_params(constructor.type_params)}{decl.name}'
                f'({_parameters(constructor.parameters)})')
        lines.append(f'{head} {{')
        lines.append(f'{inner}}}')
    for method in decl.methods:
        lines.extend(_render_method(method, decl, inner))
    for nested in decl.nested:
        lines.extend(_render_class(nested, inner))
    lines.append(f'{indent}}}')
    return lines


def render_unit(unit):
    lines = []
    if unit.package:
        lines += [f'package {unit.package};', '']
    lines += [f'import {name};' for name in unit.imports]
    lines += [f'import {name}.*;' for name in unit.on_demand_imports]
    if unit.imports or unit.on_demand_imports:
        lines.append('')
    for decl in unit.classes:
        lines.extend(_render_class(decl))
        lines.append('')
    return '\n'.join(lines)
