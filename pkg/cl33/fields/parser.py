"""
    Recursive-descent parser for trig-poly text such as

        -1/2*t1*sin(t3 - x3) + 3*x1^2 + cos(2*t3 + 1/3)

    Grammar:
        expr   := term (('+' | '-') term)*
        term   := unary (('*' | '/') unary)*      division by constants only
        unary  := ('+' | '-') unary | power
        power  := atom ('^' INTEGER)?
        atom   := NUMBER | COORDINATE | ('cos' | 'sin') '(' expr ')'
                  | '(' expr ')'
"""
from fractions import Fraction
import re

from ..core.exceptions import ParseError
from ..core.ring import RATIONAL
from .trigpoly import COORDINATES, LinearForm, TrigPoly

_TOKEN = re.compile(r'\s*(?:(?P<number>\d+(?:\.\d*)?|\.\d+)|'
                    r'(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))')
FUNCTIONS = ('cos', 'sin')


def byte_offset(text, pos):
    return len(text[:pos].encode('utf-8'))


def tokenize(text, base=0):
    """
        :param text: expression text
        :param base: byte offset of text within a larger document
        :returns: list of (kind, value, byte offset); kind is number, name,
            op or end
        :raises ParseError: unknown character
    """
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            tokens.append(('end', None, base + byte_offset(text, pos)))
            return tokens
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError('unexpected character {!r}'.format(text[pos]),
                             base + byte_offset(text, pos))
        start = match.start(match.lastgroup)
        tokens.append((match.lastgroup, match.group(match.lastgroup),
                       base + byte_offset(text, start)))
        pos = match.end()


class _Parser:
    def __init__(self, text, base=0):
        self.tokens = tokenize(text, base)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, op):
        kind, value, offset = self.take()
        if kind != 'op' or value != op:
            raise ParseError('expected {!r}'.format(op), offset)

    def parse(self):
        value = self.expr()
        kind, _, offset = self.peek()
        if kind != 'end':
            raise ParseError('unexpected trailing input', offset)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, op, _ = self.peek()
            if kind == 'op' and op in '+-':
                self.take()
                rhs = self.term()
                value = value + rhs if op == '+' else value - rhs
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, op, offset = self.peek()
            if kind == 'op' and op == '*':
                self.take()
                value = value * self.unary()
            elif kind == 'op' and op == '/':
                self.take()
                divisor = self.unary()
                if not divisor.is_constant():
                    raise ParseError('division by a non-constant', offset)
                d = divisor.constant_value()
                if d == 0:
                    raise ParseError('division by zero', offset)
                value = value * (1 / Fraction(d))
            else:
                return value

    def unary(self):
        kind, op, _ = self.peek()
        if kind == 'op' and op in '+-':
            self.take()
            value = self.unary()
            return -value if op == '-' else value
        return self.power()

    def power(self):
        value = self.atom()
        kind, op, _ = self.peek()
        if kind == 'op' and op == '^':
            self.take()
            kind, exponent, offset = self.take()
            if kind != 'number' or not exponent.isdigit():
                raise ParseError('exponent must be a non-negative integer',
                                 offset)
            value = value ** int(exponent)
        return value

    def atom(self):
        kind, value, offset = self.take()
        if kind == 'number':
            return TrigPoly.constant(Fraction(value), RATIONAL)
        if kind == 'name':
            if value in COORDINATES:
                return TrigPoly.variable(value)
            if value in FUNCTIONS:
                self.expect('(')
                argument = self.expr()
                self.expect(')')
                phase = linear_form_of(argument, offset)
                return TrigPoly.cos(phase) if value == 'cos' else \
                    TrigPoly.sin(phase)
            raise ParseError('unknown name {!r}'.format(value), offset)
        if kind == 'op' and value == '(':
            inner = self.expr()
            self.expect(')')
            return inner
        if kind == 'end':
            raise ParseError('unexpected end of input', offset)
        raise ParseError('unexpected {!r}'.format(value), offset)


def linear_form_of(tp, offset=0):
    """
        Reads an affine trig-poly back as a LinearForm

        :raises ParseError: the argument is not affine
    """
    coefficients = [0] * 6
    constant = 0
    for (exp, kind, _), value in tp.terms.items():
        if kind != '1' or sum(exp) > 1:
            raise ParseError('trigonometric argument must be linear', offset)
        if sum(exp) == 0:
            constant = value
        else:
            coefficients[exp.index(1)] = value
    return LinearForm(coefficients, constant, RATIONAL)


def parse_trigpoly(text, base=0):
    """
        Parses trig-poly text into an exact TrigPoly

        :param text: expression text
        :param base: byte offset of text in its enclosing document
        :returns: TrigPoly over the rational ring
        :raises ParseError: malformed text, with the byte offset
    """
    return _Parser(text, base).parse()
