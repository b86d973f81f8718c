from fractions import Fraction
import math
import numbers

import numpy as np

from ..core.config import get_tolerance
from ..core.exceptions import BadInput, DomainError, handler
from ..core.ring import RATIONAL, DOUBLE, RINGS, to_ring, common_ring, \
    format_number, ring_of_number

COORDINATES = ('t1', 't2', 't3', 'x1', 'x2', 'x3')
KINDS = ('1', 'cos', 'sin')
_ZERO_EXP = (0, 0, 0, 0, 0, 0)


def coordinate_index(coord):
    """
        :param coord: coordinate name or index
        :returns: index 0..5 into COORDINATES
        :raises BadInput: unknown coordinate
    """
    if isinstance(coord, int) and not isinstance(coord, bool) and \
            0 <= coord < 6:
        return coord
    if coord in COORDINATES:
        return COORDINATES.index(coord)
    handler('coordinates', '{!r} is not a coordinate'.format(coord))
    raise BadInput('{!r} is not one of {}'.format(coord, COORDINATES))


class LinearForm:
    def __init__(self, coefficients=None, constant=0, ring=RATIONAL):
        """
            Initialization - an affine form over (t1, t2, t3, x1, x2, x3)

            :param coefficients: six coefficients or a dict coordinate -> value
            :param constant: constant term
            :param ring: RATIONAL or DOUBLE
        """
        if isinstance(coefficients, dict):
            values = [0] * 6
            for coord, value in coefficients.items():
                values[coordinate_index(coord)] = value
            coefficients = values
        if coefficients is None:
            coefficients = [0] * 6
        if len(coefficients) != 6:
            handler(type(self).__name__, '{} is not six coefficients'
                    .format(coefficients))
            raise BadInput('a linear form needs six coefficients')
        self.__ring = ring
        self.__coefficients = tuple(to_ring(c, ring) for c in coefficients)
        self.__constant = to_ring(constant, ring)

    @property
    def ring(self):
        return self.__ring

    @property
    def coefficients(self):
        return self.__coefficients

    @property
    def constant(self):
        return self.__constant

    def key(self):
        return self.__coefficients + (self.__constant,)

    def is_zero(self):
        return all(v == 0 for v in self.key())

    def is_constant(self):
        return all(v == 0 for v in self.__coefficients)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.key() == other.key() \
            and self.ring == other.ring

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        common_ring(self.ring, other.ring, type(self).__name__)
        return LinearForm([a + b for a, b in zip(self.__coefficients,
                                                 other.coefficients)],
                          self.__constant + other.constant, self.__ring)

    def __neg__(self):
        return LinearForm([-a for a in self.__coefficients], -self.__constant,
                          self.__ring)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = to_ring(factor, self.__ring)
        return LinearForm([a * factor for a in self.__coefficients],
                          self.__constant * factor, self.__ring)

    def canonical(self):
        """
            :returns: (sign, form) with sign*form == self and the first
                nonzero entry of form positive
        """
        for value in self.key():
            if value != 0:
                if value < 0:
                    return -1, -self
                return 1, self
        return 1, self

    def to_double(self):
        return LinearForm([float(a) for a in self.__coefficients],
                          float(self.__constant), DOUBLE)

    def evaluate(self, point):
        return sum(float(a) * float(x) for a, x in
                   zip(self.__coefficients, point)) + float(self.__constant)

    def evaluate_many(self, points):
        coeffs = np.array([float(a) for a in self.__coefficients])
        return np.asarray(points, dtype=float) @ coeffs + \
            float(self.__constant)

    def __str__(self):
        parts = []
        for coord, value in zip(COORDINATES, self.__coefficients):
            if value == 0:
                continue
            if value == 1:
                parts.append(coord)
            elif value == -1:
                parts.append('-' + coord)
            else:
                parts.append('{}*{}'.format(format_number(value), coord))
        if self.__constant != 0 or not parts:
            parts.append(format_number(self.__constant))
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return 'LinearForm({})'.format(self)


def _monomial_text(exponents):
    parts = []
    for coord, e in zip(COORDINATES, exponents):
        if e == 1:
            parts.append(coord)
        elif e > 1:
            parts.append('{}^{}'.format(coord, e))
    return '*'.join(parts)


class TrigPoly:
    def __init__(self, terms=None, ring=RATIONAL):
        """
            Initialization - a sum of monomial x {1, cos(L), sin(L)} terms

            :param terms: dict keyed by (exponents, kind, phase) holding
                coefficients; kind is '1', 'cos' or 'sin' and phase is a
                LinearForm (None for kind '1')
            :param ring: RATIONAL or DOUBLE
        """
        if ring not in RINGS:
            handler(type(self).__name__, '{} is not a ring'.format(ring))
            raise BadInput('unknown coefficient ring {!r}'.format(ring))
        self.__ring = ring
        collected = {}
        for (exponents, kind, phase), value in (terms or {}).items():
            value = to_ring(value, ring)
            _accumulate(collected, tuple(exponents), kind, phase, value, ring)
        self.__terms = {k: v for k, v in collected.items() if v != 0}

    @classmethod
    def _raw(cls, terms, ring):
        tp = cls.__new__(cls)
        tp.__ring = ring
        tp.__terms = {k: v for k, v in terms.items() if v != 0}
        return tp

    @classmethod
    def constant(cls, value, ring=None):
        if ring is None:
            ring = ring_of_number(value)
        return cls({(_ZERO_EXP, '1', None): value}, ring)

    @classmethod
    def zero(cls, ring=RATIONAL):
        return cls._raw({}, ring)

    @classmethod
    def variable(cls, coord, power=1, coefficient=1, ring=RATIONAL):
        exponents = [0] * 6
        exponents[coordinate_index(coord)] = power
        return cls({(tuple(exponents), '1', None): coefficient}, ring)

    @classmethod
    def cos(cls, phase, coefficient=1):
        return cls({(_ZERO_EXP, 'cos', phase): coefficient}, phase.ring)

    @classmethod
    def sin(cls, phase, coefficient=1):
        return cls({(_ZERO_EXP, 'sin', phase): coefficient}, phase.ring)

    @property
    def ring(self):
        return self.__ring

    @property
    def terms(self):
        return dict(self.__terms)

    def is_zero(self, tol=None):
        if self.__ring == RATIONAL:
            return not self.__terms
        tol = get_tolerance() if tol is None else tol
        return all(abs(v) <= tol for v in self.__terms.values())

    def max_abs(self):
        return max((abs(float(v)) for v in self.__terms.values()), default=0.0)

    def is_polynomial(self):
        return all(kind == '1' for (_, kind, _) in self.__terms)

    def is_constant(self):
        return all(exp == _ZERO_EXP and kind == '1'
                   for (exp, kind, _) in self.__terms)

    def constant_value(self):
        """
            :returns: the value of a constant trig-poly
            :raises DomainError: the trig-poly is not constant
        """
        if not self.is_constant():
            raise DomainError('{} is not constant'.format(self))
        return self.__terms.get((_ZERO_EXP, '1', None),
                                to_ring(0, self.__ring))

    def degree(self):
        return max((sum(exp) for (exp, _, _) in self.__terms), default=0)

    def free_of(self, coords):
        """
            :returns: True when no term depends on any of the coordinates
        """
        idx = [coordinate_index(c) for c in coords]
        for (exp, kind, phase) in self.__terms:
            if any(exp[n] for n in idx):
                return False
            if phase is not None and any(phase.coefficients[n] != 0
                                         for n in idx):
                return False
        return True

    def phases(self):
        return sorted({phase for (_, _, phase) in self.__terms
                       if phase is not None}, key=LinearForm.key)

    def to_double(self):
        return TrigPoly._raw({(exp, kind, None if phase is None else
                               phase.to_double()): float(v)
                              for (exp, kind, phase), v in
                              self.__terms.items()}, DOUBLE)

    def _lift(self, other):
        if isinstance(other, TrigPoly):
            common_ring(self.__ring, other.ring, type(self).__name__)
            return other
        if isinstance(other, numbers.Real) and not isinstance(other, bool):
            return TrigPoly.constant(to_ring(other, self.__ring), self.__ring)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.__terms)
        for k, v in other.__terms.items():
            terms[k] = terms.get(k, 0) + v
        return TrigPoly._raw(terms, self.__ring)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly._raw({k: -v for k, v in self.__terms.items()},
                             self.__ring)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Real) and not isinstance(other, bool):
            factor = to_ring(other, self.__ring)
            return TrigPoly._raw({k: v * factor for k, v in
                                  self.__terms.items()}, self.__ring)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = {}
        for (e1, k1, p1), v1 in self.__terms.items():
            for (e2, k2, p2), v2 in other.__terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                value = v1 * v2
                for kind, phase, weight in _trig_product(k1, p1, k2, p2,
                                                         self.__ring):
                    _accumulate(out, exponents, kind, phase, value * weight,
                                self.__ring)
        return TrigPoly._raw(out, self.__ring)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError('only non-negative integer powers')
        out = TrigPoly.constant(to_ring(1, self.__ring), self.__ring)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def differentiate(self, coord):
        """
            Exact partial derivative along one coordinate
        """
        n = coordinate_index(coord)
        out = {}
        for (exp, kind, phase), value in self.__terms.items():
            if exp[n]:
                lowered = list(exp)
                lowered[n] -= 1
                _accumulate(out, tuple(lowered), kind, phase,
                            value * exp[n], self.__ring)
            if kind != '1':
                slope = phase.coefficients[n]
                if slope != 0:
                    if kind == 'cos':
                        _accumulate(out, exp, 'sin', phase, -value * slope,
                                    self.__ring)
                    else:
                        _accumulate(out, exp, 'cos', phase, value * slope,
                                    self.__ring)
        return TrigPoly._raw(out, self.__ring)

    def evaluate(self, point):
        """
            :param point: six coordinate values
            :returns: float value at the point
        """
        point = [float(x) for x in point]
        total = 0.0
        for (exp, kind, phase), value in self.__terms.items():
            term = float(value)
            for x, e in zip(point, exp):
                if e:
                    term *= x ** e
            if kind == 'cos':
                term *= math.cos(phase.evaluate(point))
            elif kind == 'sin':
                term *= math.sin(phase.evaluate(point))
            total += term
        return total

    def evaluate_many(self, points):
        """
            :param points: array of shape (n, 6)
            :returns: ndarray of n values
        """
        points = np.asarray(points, dtype=float)
        total = np.zeros(points.shape[0])
        for (exp, kind, phase), value in self.__terms.items():
            term = np.full(points.shape[0], float(value))
            for n, e in enumerate(exp):
                if e:
                    term = term * points[:, n] ** e
            if kind == 'cos':
                term = term * np.cos(phase.evaluate_many(points))
            elif kind == 'sin':
                term = term * np.sin(phase.evaluate_many(points))
            total = total + term
        return total

    def sorted_terms(self):
        def order(item):
            (exp, kind, phase), _ = item
            return (KINDS.index(kind),
                    () if phase is None else phase.key(), exp)
        return sorted(self.__terms.items(), key=order)

    def get_dict(self):
        return {'ring': self.__ring, 'text': str(self)}

    def __str__(self):
        if not self.__terms:
            return '0'
        parts = []
        for (exp, kind, phase), value in self.sorted_terms():
            factors = []
            mono = _monomial_text(exp)
            if mono:
                factors.append(mono)
            if kind != '1':
                factors.append('{}({})'.format(kind, phase))
            coeff = format_number(value)
            if not factors:
                parts.append(coeff)
            elif value == 1:
                parts.append('*'.join(factors))
            elif value == -1:
                parts.append('-' + '*'.join(factors))
            else:
                parts.append(coeff + '*' + '*'.join(factors))
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return 'TrigPoly({})'.format(self)


def _accumulate(terms, exponents, kind, phase, value, ring):
    """
        Adds one term in canonical form: phases carry a positive leading
            entry, cos(0) folds into the polynomial part and sin(0) vanishes
    """
    if kind not in KINDS:
        raise BadInput('{!r} is not a term kind'.format(kind))
    if kind != '1':
        if phase is None:
            raise BadInput('trigonometric term without a phase')
        if phase.ring != ring:
            common_ring(ring, phase.ring, 'TrigPoly')
        if phase.is_zero():
            if kind == 'sin':
                return
            kind, phase = '1', None
        else:
            sign, phase = phase.canonical()
            if kind == 'sin' and sign < 0:
                value = -value
    else:
        phase = None
    key = (exponents, kind, phase)
    terms[key] = terms.get(key, 0) + value


def _trig_product(k1, p1, k2, p2, ring):
    """
        Product-to-sum rules as (kind, phase, weight) triples
    """
    if k1 == '1':
        return [(k2, p2, 1)]
    if k2 == '1':
        return [(k1, p1, 1)]
    half = Fraction(1, 2) if ring == RATIONAL else 0.5
    plus, minus = p1 + p2, p1 - p2
    if k1 == 'cos' and k2 == 'cos':
        return [('cos', minus, half), ('cos', plus, half)]
    if k1 == 'sin' and k2 == 'sin':
        return [('cos', minus, half), ('cos', plus, -half)]
    if k1 == 'sin' and k2 == 'cos':
        return [('sin', plus, half), ('sin', minus, half)]
    return [('sin', plus, half), ('sin', minus, -half)]
