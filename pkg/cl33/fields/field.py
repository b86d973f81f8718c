import numbers

import numpy as np

from ..core.blade import METRIC, blade_text, grade, parse_blade
from ..core.config import get_tolerance
from ..core.constants import COEFFICIENT_MASKS, COEFFICIENT_PARTS
from ..core.exceptions import BadInput, DomainError, handler
from ..core.multivector import Multivector
from ..core.ring import RATIONAL, DOUBLE, RINGS, to_ring, common_ring
from .trigpoly import TrigPoly, coordinate_index


class MultivectorField:
    def __init__(self, components=None, ring=RATIONAL):
        """
            Initialization - a multivector whose 64 coefficients are
                trig-polys over the six coordinates

            :param components: dict keyed by blade mask or blade text holding
                TrigPoly values (plain numbers are promoted to constants)
            :param ring: RATIONAL or DOUBLE
        """
        if ring not in RINGS:
            handler(type(self).__name__, '{} is not a ring'.format(ring))
            raise BadInput('unknown coefficient ring {!r}'.format(ring))
        self.__ring = ring
        out = {}
        for key, value in (components or {}).items():
            if isinstance(key, str):
                mask, sign = parse_blade(key)
            else:
                mask, sign = key, 1
            if not isinstance(value, TrigPoly):
                value = TrigPoly.constant(to_ring(value, ring), ring)
            common_ring(ring, value.ring, type(self).__name__)
            value = value if sign > 0 else -value
            out[mask] = out[mask] + value if mask in out else value
        self.__components = {m: v for m, v in out.items() if not _empty(v)}

    @classmethod
    def _raw(cls, components, ring):
        f = cls.__new__(cls)
        f.__ring = ring
        f.__components = {m: v for m, v in components.items()
                          if not _empty(v)}
        return f

    @classmethod
    def from_multivector(cls, mv):
        """
            A constant field equal to a Multivector everywhere
        """
        return cls._raw({mask: TrigPoly.constant(value, mv.ring)
                         for mask, value in mv.terms.items()}, mv.ring)

    @classmethod
    def scalar(cls, value):
        """
            :param value: TrigPoly (or number) placed on the scalar blade
        """
        if not isinstance(value, TrigPoly):
            value = TrigPoly.constant(value)
        return cls._raw({0: value}, value.ring)

    @classmethod
    def blade(cls, key, value):
        if not isinstance(value, TrigPoly):
            value = TrigPoly.constant(value)
        return cls({key: value}, value.ring)

    @classmethod
    def zero(cls, ring=RATIONAL):
        return cls._raw({}, ring)

    @property
    def ring(self):
        return self.__ring

    @property
    def components(self):
        return dict(self.__components)

    def component(self, key):
        if isinstance(key, str):
            mask, sign = parse_blade(key)
        else:
            mask, sign = key, 1
        value = self.__components.get(mask, TrigPoly.zero(self.__ring))
        return value if sign > 0 else -value

    def masks(self):
        return sorted(self.__components)

    def grades(self):
        return sorted({grade(m) for m in self.__components})

    def is_zero(self, tol=None):
        return all(v.is_zero(tol) for v in self.__components.values())

    def max_abs(self):
        return max((v.max_abs() for v in self.__components.values()),
                   default=0.0)

    def to_double(self):
        if self.__ring == DOUBLE:
            return self
        return MultivectorField._raw({m: v.to_double() for m, v in
                                      self.__components.items()}, DOUBLE)

    def restrict(self, masks):
        """
            Keeps only the components on the given blade masks
        """
        masks = set(masks)
        return MultivectorField._raw({m: v for m, v in
                                      self.__components.items()
                                      if m in masks}, self.__ring)

    def prune(self, tol=None):
        """
            Drops components whose coefficients all lie within tol
        """
        return MultivectorField._raw({m: v for m, v in
                                      self.__components.items()
                                      if not v.is_zero(tol)}, self.__ring)

    def _lift(self, other):
        if isinstance(other, MultivectorField):
            common_ring(self.__ring, other.ring, type(self).__name__)
            return other
        if isinstance(other, Multivector):
            common_ring(self.__ring, other.ring, type(self).__name__)
            return MultivectorField.from_multivector(other)
        if isinstance(other, TrigPoly):
            common_ring(self.__ring, other.ring, type(self).__name__)
            return MultivectorField._raw({0: other}, self.__ring)
        if isinstance(other, numbers.Real) and not isinstance(other, bool):
            return MultivectorField._raw(
                {0: TrigPoly.constant(to_ring(other, self.__ring),
                                      self.__ring)}, self.__ring)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.__components)
        for m, v in other.__components.items():
            out[m] = out[m] + v if m in out else v
        return MultivectorField._raw(out, self.__ring)

    __radd__ = __add__

    def __neg__(self):
        return MultivectorField._raw({m: -v for m, v in
                                      self.__components.items()}, self.__ring)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Real) and not isinstance(other, bool):
            return MultivectorField._raw({m: v * other for m, v in
                                          self.__components.items()},
                                         self.__ring)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return field_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, numbers.Real) and not isinstance(other, bool):
            return self * other
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return field_product(other, self)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def differentiate(self, coord):
        coordinate_index(coord)
        return MultivectorField._raw({m: v.differentiate(coord) for m, v in
                                      self.__components.items()}, self.__ring)

    def grade_project(self, g):
        if isinstance(g, bool) or not isinstance(g, int) or not 0 <= g <= 6:
            handler(type(self).__name__, '{} is not a grade'.format(g))
            raise DomainError('grade {} outside 0..6'.format(g))
        return MultivectorField._raw({m: v for m, v in
                                      self.__components.items()
                                      if grade(m) == g}, self.__ring)

    def even(self):
        return MultivectorField._raw({m: v for m, v in
                                      self.__components.items()
                                      if grade(m) % 2 == 0}, self.__ring)

    def odd(self):
        return MultivectorField._raw({m: v for m, v in
                                      self.__components.items()
                                      if grade(m) % 2 == 1}, self.__ring)

    def evaluate(self, point):
        """
            :param point: six coordinate values (t1, t2, t3, x1, x2, x3)
            :returns: a double-ring Multivector
        """
        return Multivector({m: v.evaluate(point) for m, v in
                            self.__components.items()}, DOUBLE)

    def evaluate_many(self, points):
        """
            :returns: dict mask -> ndarray of values at each point
        """
        return {m: v.evaluate_many(points) for m, v in
                self.__components.items()}

    def sampled_max_abs(self, points):
        """
            Max-abs component value over a set of sample points
        """
        values = self.evaluate_many(points)
        return max((float(np.max(np.abs(v))) for v in values.values()),
                   default=0.0)

    def dump(self):
        """
            Text form: one "blade := trig-poly" line per nonzero component,
                ordered by mask value
        """
        return '\n'.join('{} := {}'.format(blade_text(m),
                                           self.__components[m])
                         for m in sorted(self.__components))

    def get_dict(self):
        return {blade_text(m): str(self.__components[m])
                for m in sorted(self.__components)}

    def __str__(self):
        return self.dump() if self.__components else '0'

    def __repr__(self):
        return 'MultivectorField({} components, {})'.format(
            len(self.__components), self.__ring)


def _empty(value):
    return not value.terms


def field_product(A, B, metric=METRIC):
    """
        Geometric product of two fields, trig-poly coefficients multiplied
            pointwise
    """
    ring = common_ring(A.ring, B.ring, 'field_product')
    out = {}
    b_components = B.components
    for a_mask, a_value in A.components.items():
        for b_mask, b_value in b_components.items():
            mask, sign = metric.product(a_mask, b_mask)
            value = a_value * b_value
            if sign < 0:
                value = -value
            out[mask] = out[mask] + value if mask in out else value
    return MultivectorField._raw(out, ring)


def coefficient_field(one=None, i=None, I=None, S=None, ring=RATIONAL):
    """
        Builds a value of the coefficient algebra span{1, i, I, S} from its
            four trig-poly parts
    """
    parts = (one, i, I, S)
    comps = {}
    for mask, value in zip(COEFFICIENT_MASKS, parts):
        if value is None:
            continue
        if not isinstance(value, TrigPoly):
            value = TrigPoly.constant(to_ring(value, ring), ring)
        comps[mask] = value
    return MultivectorField(comps, ring)


def coefficient_parts(field):
    """
        :returns: dict part name ('1', 'i', 'I', 'S') -> TrigPoly
        :raises DomainError: the field has content outside span{1, i, I, S}
    """
    stray = [m for m in field.masks() if m not in COEFFICIENT_MASKS]
    if stray:
        handler('coefficient_parts', 'blades {} lie outside the coefficient '
                'algebra'.format([blade_text(m) for m in stray]))
        raise DomainError('field is not a coefficient-algebra value')
    return {part: field.component(mask)
            for part, mask in zip(COEFFICIENT_PARTS, COEFFICIENT_MASKS)}


def project_coefficients(field):
    """
        Projection onto span{1, i, I, S}
    """
    return field.restrict(COEFFICIENT_MASKS)


def complex_part(field):
    """
        The span{1, i} part of a coefficient-algebra value
    """
    return field.restrict((COEFFICIENT_MASKS[0], COEFFICIENT_MASKS[1]))


def pseudo_part(field):
    """
        The span{I, S} part of a coefficient-algebra value
    """
    return field.restrict((COEFFICIENT_MASKS[2], COEFFICIENT_MASKS[3]))
