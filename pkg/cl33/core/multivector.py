from fractions import Fraction
import numbers

from .blade import METRIC, Blade, blade_text, grade, parse_blade
from .config import get_tolerance
from .exceptions import DomainError, BadType, handler
from .ring import RATIONAL, DOUBLE, RINGS, to_ring, common_ring, \
    format_number, ring_of_number


class Multivector:
    def __init__(self, coefficients=None, ring=RATIONAL):
        """
            Initialization - an immutable element of Cl(3,3)

            :param coefficients: dict keyed by blade mask (int) or blade text
                (str) holding real coefficients
            :param ring: RATIONAL (exact) or DOUBLE
        """
        if ring not in RINGS:
            handler(type(self).__name__, '{} is not a ring'.format(ring))
            raise BadType('unknown coefficient ring {!r}'.format(ring))
        self.__ring = ring
        terms = {}
        for key, value in (coefficients or {}).items():
            if isinstance(key, str):
                mask, sign = parse_blade(key)
            elif isinstance(key, Blade):
                mask, sign = key.mask, key.sign
            else:
                mask, sign = key, 1
            value = to_ring(value, ring) * sign
            terms[mask] = terms.get(mask, 0) + value
        self.__terms = {mask: value for mask, value in terms.items()
                        if value != 0}

    @classmethod
    def scalar(cls, value, ring=None):
        if ring is None:
            ring = ring_of_number(value)
        return cls({0: value}, ring)

    @classmethod
    def blade(cls, key, coefficient=1, ring=RATIONAL):
        return cls({key: coefficient}, ring)

    @classmethod
    def _raw(cls, terms, ring):
        mv = cls.__new__(cls)
        mv.__ring = ring
        mv.__terms = {mask: value for mask, value in terms.items()
                      if value != 0}
        return mv

    @property
    def ring(self):
        return self.__ring

    @property
    def terms(self):
        """
            :returns: a copy of the nonzero coefficients keyed by mask
        """
        return dict(self.__terms)

    def coefficient(self, key):
        if isinstance(key, str):
            mask, sign = parse_blade(key)
        else:
            mask, sign = key, 1
        return self.__terms.get(mask, to_ring(0, self.__ring)) * sign

    def grades(self):
        return sorted({grade(mask) for mask in self.__terms})

    def is_zero(self, tol=None):
        """
            Exact test for the rational ring; componentwise tolerance for the
                double ring
        """
        if self.__ring == RATIONAL:
            return not self.__terms
        tol = get_tolerance() if tol is None else tol
        return all(abs(value) <= tol for value in self.__terms.values())

    def max_abs(self):
        return max((abs(float(value)) for value in self.__terms.values()),
                   default=0.0)

    def to_double(self):
        return Multivector._raw({mask: float(value) for mask, value in
                                 self.__terms.items()}, DOUBLE)

    def _lift(self, other):
        if isinstance(other, Multivector):
            common_ring(self.__ring, other.ring, type(self).__name__)
            return other
        if isinstance(other, numbers.Real) and not isinstance(other, bool):
            return Multivector({0: other}, self.__ring)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.__terms)
        for mask, value in other.__terms.items():
            terms[mask] = terms.get(mask, 0) + value
        return Multivector._raw(terms, self.__ring)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw({mask: -value for mask, value in
                                 self.__terms.items()}, self.__ring)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, numbers.Real) and not isinstance(other, bool):
            factor = to_ring(other, self.__ring)
            return Multivector._raw({mask: value * factor for mask, value in
                                     self.__terms.items()}, self.__ring)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real) and not isinstance(other, bool):
            if self.__ring == RATIONAL:
                return self * (1 / Fraction(other))
            return self * (1.0 / other)
        return NotImplemented

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def grade_project(self, g):
        return grade_project(self, g)

    def reverse(self):
        return reverse(self)

    def even(self):
        return Multivector._raw({mask: value for mask, value in
                                 self.__terms.items()
                                 if grade(mask) % 2 == 0}, self.__ring)

    def odd(self):
        return Multivector._raw({mask: value for mask, value in
                                 self.__terms.items()
                                 if grade(mask) % 2 == 1}, self.__ring)

    def scalar_part(self):
        return self.coefficient(0)

    def get_dict(self):
        """
            Converts the multivector into a dict of blade text to coefficient
                text, ordered by mask value
        """
        return {blade_text(mask): format_number(self.__terms[mask])
                for mask in sorted(self.__terms)}

    def __str__(self):
        if not self.__terms:
            return '0'
        parts = []
        for mask in sorted(self.__terms):
            value = format_number(self.__terms[mask])
            parts.append(value if mask == 0 else
                         '{}*{}'.format(value, blade_text(mask)))
        return ' + '.join(parts)

    def __repr__(self):
        return 'Multivector({}, {})'.format(str(self), self.__ring)


def geometric_product(A, B, metric=METRIC):
    """
        Bilinear extension of the blade product

        :param A: left Multivector
        :param B: right Multivector
        :param metric: MetricSignature to multiply under
        :returns: the Multivector A·B
        :raises RingMismatch: A and B carry different coefficient rings
    """
    ring = common_ring(A.ring, B.ring, 'geometric_product')
    out = {}
    b_terms = B.terms
    for a_mask, a_value in A.terms.items():
        for b_mask, b_value in b_terms.items():
            mask, sign = metric.product(a_mask, b_mask)
            value = a_value * b_value
            out[mask] = out.get(mask, 0) + (value if sign > 0 else -value)
    return Multivector._raw(out, ring)


def grade_project(A, g):
    """
        Keeps exactly the coefficients of grade g

        :raises DomainError: g outside 0..6
    """
    if isinstance(g, bool) or not isinstance(g, int) or not 0 <= g <= 6:
        handler('grade_project', '{} is not a grade of Cl(3,3)'.format(g))
        raise DomainError('grade {} outside 0..6'.format(g))
    return Multivector._raw({mask: value for mask, value in A.terms.items()
                             if grade(mask) == g}, A.ring)


def reverse_sign(mask):
    g = grade(mask)
    return -1 if (g * (g - 1) // 2) % 2 else 1


def reverse(A):
    """
        Reversion: every grade-g blade scaled by (-1)^(g(g-1)/2)
    """
    return Multivector._raw({mask: value * reverse_sign(mask)
                             for mask, value in A.terms.items()}, A.ring)


def inverse(A):
    """
        Inverse of a versor as reverse(A) / <A reverse(A)>_0

        :raises DomainError: A is not invertible this way
    """
    norm = A * reverse(A)
    scalar = norm.scalar_part()
    if not (norm - Multivector({0: scalar}, A.ring)).is_zero() or \
            (scalar == 0 if A.ring == RATIONAL else
             abs(scalar) <= get_tolerance()):
        handler('inverse', '{} is not a versor'.format(A))
        raise DomainError('{} has no versor inverse'.format(A))
    return reverse(A) / scalar


def component_along(A, key):
    """
        Scalar coefficient of A along a signed blade, <A blade^-1>_0
    """
    if isinstance(key, str):
        mask, sign = parse_blade(key)
    else:
        mask, sign = key, 1
    unit = Multivector._raw({mask: to_ring(sign, A.ring)}, A.ring)
    return (A * inverse(unit)).scalar_part()


def check_i_commutation(A, metric=METRIC):
    """
        :returns: True iff i·A = A·i for the transverse-time bivector i
    """
    i = Multivector._raw({0b000011: to_ring(1, A.ring)}, A.ring)
    return (geometric_product(i, A, metric) -
            geometric_product(A, i, metric)).is_zero()
