from fractions import Fraction
import numbers

from .exceptions import RingMismatch, BadType, handler

RATIONAL = 'rational'
DOUBLE = 'double'
RINGS = (RATIONAL, DOUBLE)


def to_ring(value, ring):
    """
        Coerces a plain number into a coefficient ring

        :param value: int, Fraction or float
        :param ring: RATIONAL or DOUBLE
        :returns: a Fraction (rational ring) or a float (double ring)
        :raises RingMismatch: a float offered to the rational ring
        :raises BadType: value is not a real number
    """
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        handler('ring', '{!r} is not a real coefficient'.format(value))
        raise BadType('coefficient {!r} is not a real number'.format(value))
    if ring == RATIONAL:
        if isinstance(value, float):
            raise RingMismatch('float {!r} offered to the rational ring'
                               .format(value))
        return Fraction(value)
    return float(value)


def ring_of_number(value):
    """
        :returns: the narrowest ring a plain number belongs to
    """
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RATIONAL
    return DOUBLE


def common_ring(a, b, caller='ring'):
    """
        Verifies two rings agree

        :raises RingMismatch: the rings differ
    """
    if a != b:
        handler(caller, 'cannot combine {} and {} coefficients'.format(a, b))
        raise RingMismatch('{} and {} coefficients never mix'.format(a, b))
    return a


def format_number(value):
    """
        Deterministic text for a coefficient: p/q for rationals, repr for
            doubles
    """
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return '{}/{}'.format(value.numerator, value.denominator)
    return repr(float(value))
