"""
Tests for the tokenizer and the declaration parser.
"""
from django.test import SimpleTestCase
from javalang.tokenizer import Identifier, Literal

from core.exceptions import SourceParseError
from extractor.declarations import (
    ConstructorDecl,
    FieldDecl,
    MethodDecl,
    TypeRef,
)
from extractor.parser import parse_compilation_unit
from extractor.tokens import is_symbol, line_of, match_brackets, tokenize


def parse_class(source):
    """Parse ``source`` and return its first top-level declaration."""
    return parse_compilation_unit(source, 'A.java').classes[0]


class TokenizeTests(SimpleTestCase):
    """Test tokenizing and bracket matching."""

    def test_comments_dropped(self):
        tokens = tokenize('a /* b */ c // d\ne')

        self.assertEqual([t.value for t in tokens
                          if isinstance(t, Identifier)], ['a', 'c', 'e'])

    def test_literals_are_opaque(self):
        """Test braces inside literals never reach the parser."""
        tokens = tokenize('x = "{ B b; }"; c = \'{\';')

        literals = [t for t in tokens if isinstance(t, Literal)]
        self.assertEqual(len(literals), 2)
        self.assertFalse(any(is_symbol(t, '{') for t in tokens))

    def test_line_numbers(self):
        tokens = tokenize('a\n/* one\ntwo */\nb')

        self.assertEqual([(t.value, line_of(t)) for t in tokens[:2]],
                         [('a', 1), ('b', 4)])

    def test_unterminated_comment(self):
        with self.assertRaisesMessage(SourceParseError,
                                      'A.java:2: unterminated comment'):
            tokenize('class A {\n /* open', 'A.java')

    def test_unterminated_string(self):
        with self.assertRaisesMessage(SourceParseError, 'A.java:1'):
            tokenize('String s = "abc;\n', 'A.java')

    def test_brackets_matched(self):
        tokens = tokenize('class A { void m(int[] a) { } }')
        partner = match_brackets(tokens)

        self.assertEqual(tokens[partner[2]].value, '}')
        self.assertEqual(partner[2], len(tokens) - 1)
        self.assertEqual(tokens[partner[5]].value, ')')

    def test_stray_closer(self):
        with self.assertRaisesMessage(SourceParseError,
                                      "A.java:2: unexpected '}'"):
            match_brackets(tokenize('class A { }\n}', 'A.java'), 'A.java')


class ParseMembersTests(SimpleTestCase):
    """Test member extraction."""

    def test_field_constructor_method(self):
        decl = parse_class('class A { int x; A() {} void m(B b) {} }')

        self.assertEqual(decl.fields, (FieldDecl('x', TypeRef('int')),))
        self.assertEqual(decl.constructors, (ConstructorDecl(),))
        self.assertEqual(decl.constructors[0].arity, 0)
        self.assertEqual(decl.methods, (
            MethodDecl('m', None, (TypeRef('B'),), 0, has_body=True),
        ))

    def test_multiple_declarators(self):
        decl = parse_class('class A { int x, y; }')

        self.assertEqual([f.name for f in decl.fields], ['x', 'y'])

    def test_declarator_dimensions(self):
        """Test brackets after a declarator apply to that one only."""
        decl = parse_class('class A { int a[], b; }')

        self.assertEqual([f.type.dims for f in decl.fields], [1, 0])

    def test_comment_and_string_opacity(self):
        decl = parse_class('class A { /* B b; */ String s = "C c;"; }')

        self.assertEqual(decl.fields, (FieldDecl('s', TypeRef('String')),))

    def test_annotations_ignored(self):
        decl = parse_class(
            '@Entity(name = "a") class A {\n'
            '  @Inject B b;\n'
            '  @SuppressWarnings("unchecked")\n'
            '  @Override public String toString() { return ""; }\n'
            '}'
        )

        self.assertEqual(decl.fields, (FieldDecl('b', TypeRef('B')),))
        self.assertEqual([m.name for m in decl.methods], ['toString'])

    def test_generic_field(self):
        decl = parse_class('class A { Map<String, List<B>> m; }')

        self.assertEqual(decl.fields[0].type, TypeRef('Map', (
            TypeRef('String'), TypeRef('List', (TypeRef('B'),)),
        )))

    def test_wildcard_argument(self):
        decl = parse_class('class A { List<? extends B> items; }')

        wildcard = decl.fields[0].type.args[0]
        self.assertTrue(wildcard.is_wildcard)
        self.assertEqual(wildcard.bound, 'extends')
        self.assertEqual(str(decl.fields[0].type), 'List<? extends B>')

    def test_static_and_initializers(self):
        decl = parse_class(
            'class T {\n'
            '  static final T X = new T(), Y = make(new int[] {1, 2});\n'
            '  Map<K, V> m = new HashMap<>();\n'
            '  static { X.init(); }\n'
            '}'
        )

        self.assertEqual([(f.name, f.is_static) for f in decl.fields],
                         [('X', True), ('Y', True), ('m', False)])

    def test_varargs(self):
        decl = parse_class('class A { void m(B... bs) {} }')

        self.assertEqual(decl.methods[0].parameters, (TypeRef('B', dims=1),))

    def test_generic_method(self):
        decl = parse_class('class A { public <T> T id(T t) { return t; } }')

        self.assertEqual(decl.methods[0].type_params, ('T',))
        self.assertEqual(decl.methods[0].return_type, TypeRef('T'))

    def test_body_line_count(self):
        """Test lines between the braces are counted, blank ones too."""
        decl = parse_class(
            'class A {\n'
            '  void m() {\n'
            '    a();\n'
            '\n'
            '    b();\n'
            '  }\n'
            '  void n() { }\n'
            '}'
        )

        self.assertEqual([m.body_line_count for m in decl.methods], [3, 0])

    def test_bodies_are_not_parsed(self):
        """Test statements javalang cannot read stay hidden in a body."""
        decl = parse_class(
            'class A {\n'
            '  int m(int k) {\n'
            '    return switch (k) { case 1 -> 2; default -> 3; };\n'
            '  }\n'
            '}'
        )

        self.assertEqual([(m.name, m.body_line_count) for m in decl.methods],
                         [('m', 1)])

    def test_overload_line_counts(self):
        decl = parse_class(
            'class A {\n'
            '  void m() {\n'
            '  }\n'
            '  void m(int x) {\n'
            '\n'
            '\n'
            '  }\n'
            '}'
        )

        self.assertEqual([m.body_line_count for m in decl.methods], [0, 2])

    def test_abstract_method(self):
        decl = parse_class('abstract class A { abstract int m(); }')

        self.assertFalse(decl.methods[0].has_body)
        self.assertEqual(decl.methods[0].body_line_count, 0)

    def test_counts_example(self):
        decl = parse_class('class A { A(){} A(int x){} void m(){} int f; }')

        self.assertEqual(
            (len(decl.methods), len(decl.fields), len(decl.constructors)),
            (1, 1, 2),
        )
        self.assertEqual(decl.constructors[1].parameters, (TypeRef('int'),))


class ParseDeclarationsTests(SimpleTestCase):
    """Test type declarations, supertypes and unit headers."""

    def test_package_and_imports(self):
        unit = parse_compilation_unit(
            'package p;\n'
            'import q.B;\n'
            'import r.*;\n'
            'import static s.C.x;\n'
            'public class A {}\n',
            'p/A.java',
        )

        self.assertEqual(unit.package, 'p')
        self.assertEqual(unit.imports, ('q.B',))
        self.assertEqual(unit.on_demand_imports, ('r',))
        self.assertEqual(unit.classes[0].qualified_name, 'p.A')
        self.assertEqual(unit.path, 'p/A.java')

    def test_supertypes(self):
        decl = parse_class('class B extends A implements I, J<K> {}')

        self.assertEqual(decl.superclass, TypeRef('A'))
        self.assertEqual(decl.interfaces,
                         (TypeRef('I'), TypeRef('J', (TypeRef('K'),))))

    def test_interface_extends_list(self):
        decl = parse_class('interface I extends J, K { int X = 1; void m(); }')

        self.assertEqual(decl.kind, 'interface')
        self.assertIsNone(decl.superclass)
        self.assertEqual(len(decl.interfaces), 2)
        self.assertTrue(decl.fields[0].is_static)
        self.assertFalse(decl.methods[0].has_body)

    def test_enum_constants_are_static_fields(self):
        decl = parse_class(
            'enum Color { RED("r"), GREEN("g") { }; int code; '
            'Color(String s) {} }'
        )

        self.assertEqual(decl.kind, 'enum')
        self.assertEqual(
            [(f.name, str(f.type), f.is_static, f.enum_constant)
             for f in decl.fields],
            [('RED', 'Color', True, True), ('GREEN', 'Color', True, True),
             ('code', 'int', False, False)],
        )
        self.assertEqual(len(decl.constructors), 1)

    def test_annotation_type(self):
        decl = parse_class(
            '@interface Tag { String value() default "x"; int n(); }')

        self.assertEqual(decl.kind, 'interface')
        self.assertEqual([(m.name, m.has_body) for m in decl.methods],
                         [('value', False), ('n', False)])

    def test_nested_classes(self):
        unit = parse_compilation_unit(
            'package p; class A { class B { B b; } static class C {} }')

        nested = unit.classes[0].nested
        self.assertEqual([n.qualified_name for n in nested],
                         ['p.A.B', 'p.A.C'])
        self.assertEqual([d.name for d in unit.walk()], ['A', 'B', 'C'])

    def test_unparsed_member_recorded(self):
        """Test an unsupported member is marked and the unit is kept."""
        with self.assertLogs('extractor.parser', 'WARNING'):
            decl = parse_class('class A {\n void 123bad() {}\n int y;\n}')

        self.assertEqual(len(decl.unparsed), 1)
        self.assertEqual(decl.unparsed[0].line, 2)
        self.assertEqual([f.name for f in decl.fields], ['y'])

    def test_line_counts_after_unparsed_member(self):
        with self.assertLogs('extractor.parser', 'WARNING') as logs:
            decl = parse_class(
                'class A {\n'
                ' void 123bad() {\n'
                ' }\n'
                ' void ok() {\n'
                '   a();\n'
                ' }\n'
                '}'
            )

        self.assertIn('A.java:2: unparsed member in A', logs.output[0])
        self.assertEqual([(m.name, m.body_line_count) for m in decl.methods],
                         [('ok', 1)])

    def test_unbalanced_braces(self):
        with self.assertRaisesMessage(SourceParseError, 'unbalanced'):
            parse_class('class A {\n void m() { }\n')

    def test_mismatched_brackets(self):
        with self.assertRaises(SourceParseError):
            parse_class('class A { void m() { a(]; } }')

    def test_stray_top_level_token(self):
        with self.assertRaisesMessage(SourceParseError, 'A.java:1'):
            parse_class('int x;')
