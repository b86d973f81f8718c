"""
    Reader for rational functions of transverse time given as factors:

        q      := product ('/' product)?
        product:= item ('*' item)*
        item   := NUMBER | '(' 't' (('+' | '-') term)* ')'
        term   := NUMBER | NUMBER 'i' | NUMBER '*' 'i' | 'i'

    "(t-1-2i)*(t+0.5i)/(t-3)" has zeros 1+2i, -0.5i and a pole at 3.
"""
import re

import numpy as np

from ..core.exceptions import DomainError, ParseError, handler
from ..fields.parser import byte_offset

_TOKEN = re.compile(r'\s*(?:(?P<number>\d+(?:\.\d*)?|\.\d+)|'
                    r'(?P<name>[ti])|(?P<op>[-+*/()]))')


class RationalFunctionSpec:
    def __init__(self, zeros=None, poles=None, leading=1.0):
        """
            Initialization - q(t) = leading * prod(t - z) / prod(t - p)

            :param zeros: complex zeros, all simple
            :param poles: complex poles, all simple
            :param leading: complex leading coefficient, nonzero
            :raises DomainError: repeated or coinciding zeros and poles
        """
        self.zeros = [complex(z) for z in zeros or []]
        self.poles = [complex(p) for p in poles or []]
        self.leading = complex(leading)
        points = self.zeros + self.poles
        if len(set(points)) != len(points):
            handler(type(self).__name__, 'repeated points in {}'.format(
                points))
            raise DomainError('simple zeros and poles only')
        if self.leading == 0:
            raise DomainError('the leading coefficient must be nonzero')

    def evaluate(self, t):
        t = np.asarray(t, dtype=complex)
        value = np.full(t.shape, self.leading, dtype=complex)
        for z in self.zeros:
            value = value * (t - z)
        for p in self.poles:
            value = value / (t - p)
        return value

    def log_derivative(self, t):
        """
            q'/q = sum 1/(t - z) - sum 1/(t - p)
        """
        t = np.asarray(t, dtype=complex)
        out = np.zeros(t.shape, dtype=complex)
        for z in self.zeros:
            out = out + 1 / (t - z)
        for p in self.poles:
            out = out - 1 / (t - p)
        return out

    def conjugate(self):
        """
            The data under t -> t*
        """
        return RationalFunctionSpec([z.conjugate() for z in self.zeros],
                                    [p.conjugate() for p in self.poles],
                                    self.leading.conjugate())

    def get_dict(self):
        def pair(z):
            return [z.real, z.imag]
        return {'zeros': [pair(z) for z in self.zeros],
                'poles': [pair(p) for p in self.poles],
                'leading': pair(self.leading)}


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            tokens.append(('end', None, byte_offset(text, pos)))
            return tokens
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError('unexpected character {!r}'.format(text[pos]),
                             byte_offset(text, pos))
        start = match.start(match.lastgroup)
        tokens.append((match.lastgroup, match.group(match.lastgroup),
                       byte_offset(text, start)))
        pos = match.end()


class _QParser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.seen = set()

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def at(self, kind, value=None):
        k, v, _ = self.peek()
        return k == kind and (value is None or v == value)

    def expect(self, kind, value):
        k, v, offset = self.take()
        if k != kind or v != value:
            raise ParseError('expected {!r}'.format(value), offset)

    def parse(self):
        leading, zeros = self.product()
        poles = []
        if self.at('op', '/'):
            self.take()
            divisor, poles = self.product()
            leading = leading / divisor
        kind, _, offset = self.peek()
        if kind != 'end':
            raise ParseError('unexpected trailing input', offset)
        return RationalFunctionSpec(zeros, poles, leading)

    def product(self):
        leading, points = 1.0 + 0j, []
        while True:
            coefficient, point = self.item()
            if point is None:
                leading = leading * coefficient
            else:
                points.append(point)
            if not self.at('op', '*'):
                return leading, points
            self.take()

    def item(self):
        """
            :returns: (coefficient, None) for a number, (1, point) for a
                factor (t - point)
        """
        kind, value, offset = self.peek()
        if kind == 'number':
            self.take()
            if float(value) == 0:
                raise ParseError('a zero factor has no charges', offset)
            return float(value), None
        if kind == 'op' and value == '(':
            self.take()
            self.expect('name', 't')
            point = 0j
            while self.at('op', '+') or self.at('op', '-'):
                _, sign, _ = self.take()
                term = self.term()
                point += -term if sign == '+' else term
            self.expect('op', ')')
            if point in self.seen:
                handler('parse_q', 'factor (t - {}) repeats'.format(point))
                raise ParseError('repeated factor: simple zeros/poles only',
                                 offset)
            self.seen.add(point)
            return 1, point
        if kind == 'end':
            raise ParseError('unexpected end of input', offset)
        raise ParseError('expected a number or a factor (t - a)', offset)

    def term(self):
        kind, value, offset = self.take()
        if kind == 'name' and value == 'i':
            return 1j
        if kind != 'number':
            raise ParseError('expected a number or i', offset)
        number = float(value)
        if self.at('name', 'i'):
            self.take()
            return number * 1j
        if self.at('op', '*'):
            self.take()
            self.expect('name', 'i')
            return number * 1j
        return complex(number)


def parse_q(text):
    """
        Parses q(t) text into its zeros, poles and leading coefficient

        :param text: expression in the factor grammar
        :returns: RationalFunctionSpec
        :raises ParseError: malformed text or a repeated factor, with the
            byte offset of the offending token
    """
    return _QParser(text).parse()
