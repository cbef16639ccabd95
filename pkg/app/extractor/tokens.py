"""
Java tokens from ``javalang.tokenizer`` and the bracket pairs between them.

Comments are dropped by the tokenizer and every string or character
literal is a single ``Literal`` token, so nothing inside them can open a
brace or produce a type reference. Lexical errors become
``SourceParseError`` with the line they occur on.
"""
from javalang import tokenizer
from javalang.tokenizer import Literal, Separator

from core.exceptions import SourceParseError

OPENERS = {'(': ')', '[': ']', '{': '}'}
CLOSERS = frozenset(OPENERS.values())


class JavaTokenizer(tokenizer.JavaTokenizer):
    """javalang's tokenizer, failing on the first lexical error."""

    def __init__(self, source, path):
        super().__init__(source)
        self.path = path

    def read_comment(self):
        if (self.data.startswith('/*', self.i)
                and self.data.find('*/', self.i + 2) == -1):
            raise SourceParseError('unterminated comment', self.path,
                                   self.current_line)
        return super().read_comment()

    def error(self, message, char=None):
        raise SourceParseError(message[:1].lower() + message[1:], self.path,
                               self.current_line)


def tokenize(source, path='<string>'):
    return list(JavaTokenizer(source, path).tokenize())


def line_of(token):
    return token.position.line


def is_symbol(token, value):
    """Whether ``token`` is the separator or operator ``value``."""
    return not isinstance(token, Literal) and token.value == value


def match_brackets(tokens, path='<string>'):
    """Map the index of every opening bracket to its closing partner.

    Raises ``SourceParseError`` for a closer without an opener, a closer
    of the wrong kind, or an opener still open at the end of input.
    """
    partner = {}
    stack = []
    for index, token in enumerate(tokens):
        if not isinstance(token, Separator):
            continue
        if token.value in OPENERS:
            stack.append(index)
        elif token.value in CLOSERS:
            if not stack:
                raise SourceParseError(f"unexpected '{token.value}'", path,
                                       line_of(token))
            opening = stack.pop()
            expected = OPENERS[tokens[opening].value]
            if token.value != expected:
                raise SourceParseError(
                    f"mismatched '{token.value}' (expected '{expected}')",
                    path, line_of(token))
            partner[opening] = index
    if stack:
        token = tokens[stack[-1]]
        raise SourceParseError(
            f"unbalanced '{token.value}' opened at line {line_of(token)}",
            path, line_of(token))
    return partner
