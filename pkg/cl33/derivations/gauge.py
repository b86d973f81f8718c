"""
    Polynomial solutions of (d_x1^2 + d_x2^2 + d_x3^2 - d_t3^2) psi = f.

    With P the double antiderivative in x1 and M = d_x2^2 + d_x3^2 - d_t3^2,
    psi = sum_k (-1)^k P (M P)^k f. M lowers the degree in (x2, x3, t3) by
    two, so the sum is finite.
"""
from fractions import Fraction

from ..core.exceptions import DomainError, handler, typeChecker
from ..core.ring import RATIONAL
from ..fields.trigpoly import TrigPoly, coordinate_index

_X1 = coordinate_index('x1')


def double_antiderivative(tp):
    """
        x1^e -> x1^(e+2) / ((e+1)(e+2)) term by term
    """
    terms = {}
    for (exponents, kind, phase), value in tp.terms.items():
        e = exponents[_X1]
        raised = list(exponents)
        raised[_X1] = e + 2
        scale = (e + 1) * (e + 2)
        value = value * Fraction(1, scale) if tp.ring == RATIONAL \
            else value / scale
        terms[(tuple(raised), kind, phase)] = value
    return TrigPoly(terms, tp.ring)


def transverse_wave(tp):
    """
        (d_x2^2 + d_x3^2 - d_t3^2) tp
    """
    out = tp.differentiate('x2').differentiate('x2') + \
        tp.differentiate('x3').differentiate('x3')
    return out - tp.differentiate('t3').differentiate('t3')


def solve_wave_poisson(f):
    """
        :param f: polynomial TrigPoly
        :returns: polynomial psi with (laplacian - d_t3^2) psi = f
        :raises DomainError: f is not polynomial
    """
    typeChecker('solve_wave_poisson', f, TrigPoly, 'rhs')
    if not f.is_polynomial():
        handler('solve_wave_poisson', 'right-hand side {} has trigonometric '
                'terms'.format(f))
        raise DomainError('the gauge solver needs a polynomial right-hand side')
    psi = TrigPoly.zero(f.ring)
    term = double_antiderivative(f)
    sign = 1
    while not term.is_zero():
        psi = psi + term * sign
        term = double_antiderivative(transverse_wave(term))
        sign = -sign
    return psi
