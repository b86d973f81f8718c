"""
    Spacetime-algebra regression on the subalgebra generated by
    gamma_t3, gamma_s1, gamma_s2, gamma_s3.

    A = gamma_t3 a_t + sum_n gamma_sn a_n, box = gamma_t3 d_t3 - sum_n gamma_sn d_xn.
    box A = (Lorenz residual) + sum_n e_n (E_n + I B_n) with e_n = gamma_sn gamma_t3.
"""
from ..core.constants import PSEUDO_I, generator
from ..core.exceptions import DomainError, handler, typeChecker
from ..core.multivector import inverse
from ..core.report import Check, measure
from ..core.ring import RATIONAL
from ..fields.calculus import apply_D, curl, div, dt3
from ..fields.field import MultivectorField
from ..fields.trigpoly import TrigPoly
from .spec import potential_fields

SPATIAL_GENERATORS = ('s1', 's2', 's3')


def _const(mv, ring):
    return mv if ring == RATIONAL else mv.to_double()


def spacetime_units(ring=RATIONAL):
    """
        :returns: dict with the bivector units e_n and the vector and
            trivector units the derivative of a bivector field lands on
    """
    t3 = _const(generator('t3'), ring)
    I = _const(PSEUDO_I, ring)
    s = [_const(generator(name), ring) for name in SPATIAL_GENERATORS]
    return {
        'e': [sn * t3 for sn in s],
        'time': t3,
        'space': s,
        'space_dual': [sn * I for sn in s],
        'time_dual': t3 * I,
    }


def box(F):
    """
        The spacetime derivative of a t1,t2-free field

        :raises DomainError: F depends on t1 or t2
    """
    typeChecker('box', F, MultivectorField, 'field')
    for value in F.components.values():
        if not value.free_of(('t1', 't2')):
            handler('box', '{} depends on t1/t2'.format(value))
            raise DomainError('spacetime fields must not depend on t1, t2')
    return apply_D(F)


def reading(field, unit):
    """
        Scalar coefficient of field along a basis unit
    """
    return MultivectorField.scalar((field * inverse(unit)).component(0))


def potential_vector(a_t, a_s):
    """
        A = gamma_t3 a_t + sum_n gamma_sn a_n
    """
    ring = a_t.ring
    units = spacetime_units(ring)
    A = units['time'] * MultivectorField.scalar(a_t)
    for unit, a in zip(units['space'], a_s):
        A = A + unit * MultivectorField.scalar(a)
    return A


def bivector_field(E, B, ring=RATIONAL):
    """
        F = sum_n e_n (E_n + I B_n)
    """
    units = spacetime_units(ring)
    I = _const(PSEUDO_I, ring)
    F = MultivectorField.zero(ring)
    for e, En, Bn in zip(units['e'], E, B):
        F = F + e * (En + I * Bn)
    return F


def sta_regression(a_t, a_s, tol=None):
    """
        Compares the spacetime-algebra derivation of E, B and Maxwell's
            equations against 3+1 vector calculus for a given potential

        :param a_t: scalar potential (TrigPoly, t1,t2-free)
        :param a_s: three vector-potential components (TrigPoly)
        :returns: list of Check entries
        :raises DomainError: a potential depends on t1 or t2
    """
    typeChecker('sta_regression', a_t, TrigPoly, 'a_t')
    ring = a_t.ring
    E, B = potential_fields(a_t, a_s)
    units = spacetime_units(ring)
    dA = box(potential_vector(a_t, a_s))
    F = bivector_field(E, B, ring)
    checks = [
        measure('field_reconstruction', dA.grade_project(2) - F, tol),
        Check.info('lorentz_residual', residual=dA.grade_project(0).max_abs()),
    ]
    dF = box(F)
    gauss = reading(dF, units['time'])
    ampere = [reading(dF, u) for u in units['space']]
    faraday = [reading(dF, u) for u in units['space_dual']]
    monopole = reading(dF, units['time_dual'])
    rebuilt = units['time'] * gauss + units['time_dual'] * monopole
    for n in range(3):
        rebuilt = rebuilt + units['space'][n] * ampere[n] + \
            units['space_dual'][n] * faraday[n]
    curl_B = curl(B)
    checks += [
        measure('sta_closure', dF - rebuilt, tol),
        measure('gauss', gauss - div(E), tol),
        measure('ampere', [a - (c - dt3(e)) for a, c, e in
                           zip(ampere, curl_B, E)], tol),
        measure('faraday', faraday, tol),
        measure('faraday_vector_form',
                [f + dt3(b) + c for f, b, c in zip(faraday, B, curl(E))],
                tol),
        measure('no_monopole', monopole, tol),
    ]
    return checks
