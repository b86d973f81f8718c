"""
    Odd-field specifications: the eight coefficient-algebra components
    (K1..K3, U, V, W1..W3) of an odd multivector field, their assembly,
    a text format, randomized generation and a small library of exact
    solutions built from 3+1 potentials.
"""
from fractions import Fraction
import re

from ..core.blade import parse_blade
from ..core.constants import COEFFICIENT_PARTS, PSEUDO_I, PSEUDO_S, generator
from ..core.exceptions import BadInput, DomainError, ParseError, handler, \
    typeChecker
from ..core.ring import RATIONAL, DOUBLE, common_ring
from ..fields.calculus import curl, div, dt3, grad, tau_field
from ..fields.field import MultivectorField, coefficient_field, \
    coefficient_parts
from ..fields.parser import byte_offset, parse_trigpoly
from ..fields.trigpoly import LinearForm, TrigPoly

COMPONENT_NAMES = ('K1', 'K2', 'K3', 'U', 'V', 'W1', 'W2', 'W3')


def _as_coefficient(value, ring, caller, field):
    if value is None:
        return MultivectorField.zero(ring)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        value = TrigPoly.constant(value, ring)
    if isinstance(value, TrigPoly):
        value = MultivectorField.scalar(value)
    typeChecker(caller, value, MultivectorField, field)
    common_ring(ring, value.ring, caller)
    coefficient_parts(value)
    return value


class OddFieldSpec:
    def __init__(self, K=None, U=None, V=None, W=None, ring=RATIONAL,
                 raw=None, psi=None):
        """
            Initialization - the components of the odd field
                gamma_s.K + gamma_t3 U + gamma_t1 V + gamma_t1 gamma_s.gamma_t3 W

            :param K: three coefficient-algebra fields (or TrigPolys)
            :param U: coefficient-algebra field
            :param V: coefficient-algebra field (transverse-time component)
            :param W: three coefficient-algebra fields
            :param ring: coefficient ring of every component
            :param raw: optional MultivectorField added verbatim on assembly
            :param psi: optional gauge function (coefficient-algebra field)
        """
        self.__ring = ring
        name = type(self).__name__
        K = K if K is not None else (None, None, None)
        W = W if W is not None else (None, None, None)
        if len(K) != 3 or len(W) != 3:
            handler(name, 'K and W need three components each')
            raise BadInput('K and W need three components each')
        self.__K = tuple(_as_coefficient(k, ring, name, 'K') for k in K)
        self.__U = _as_coefficient(U, ring, name, 'U')
        self.__V = _as_coefficient(V, ring, name, 'V')
        self.__W = tuple(_as_coefficient(w, ring, name, 'W') for w in W)
        if raw is not None:
            typeChecker(name, raw, MultivectorField, 'raw')
        self.__raw = raw
        self.__psi = None if psi is None else \
            _as_coefficient(psi, ring, name, 'psi')

    @property
    def ring(self):
        return self.__ring

    @property
    def K(self):
        return self.__K

    @property
    def U(self):
        return self.__U

    @property
    def V(self):
        return self.__V

    @property
    def W(self):
        return self.__W

    @property
    def raw(self):
        return self.__raw

    @property
    def psi(self):
        return self.__psi

    def components(self):
        """
            :returns: dict component name -> coefficient-algebra field
        """
        return dict(zip(COMPONENT_NAMES, self.__K + (self.__U, self.__V) +
                        self.__W))

    def map(self, fn):
        """
            A new spec with fn applied to every component (raw and psi kept)
        """
        return OddFieldSpec(K=[fn(k) for k in self.__K], U=fn(self.__U),
                            V=fn(self.__V), W=[fn(w) for w in self.__W],
                            ring=self.__ring, raw=self.__raw,
                            psi=None if self.__psi is None else
                            fn(self.__psi))

    def to_double(self):
        return OddFieldSpec(K=[k.to_double() for k in self.__K],
                            U=self.__U.to_double(), V=self.__V.to_double(),
                            W=[w.to_double() for w in self.__W],
                            ring=DOUBLE,
                            raw=None if self.__raw is None else
                            self.__raw.to_double(),
                            psi=None if self.__psi is None else
                            self.__psi.to_double())

    def to_text(self):
        """
            Spec-file text, one "NAME.part = expr" line per nonzero part
        """
        lines = []
        for cname, value in self.components().items():
            for part, tp in coefficient_parts(value).items():
                if tp.is_zero():
                    continue
                suffix = '' if part == '1' else '.' + part
                lines.append('{}{} = {}'.format(cname, suffix, tp))
        return '\n'.join(lines) + ('\n' if lines else '')

    def get_dict(self):
        return {cname: value.get_dict() for cname, value in
                self.components().items() if not value.is_zero()}


def _blade_unit(*names):
    out = generator(names[0])
    for name in names[1:]:
        out = out * generator(name)
    return out


def assemble_odd(spec):
    """
        Builds the odd multivector field of a spec, coefficient values to the
            right of each basis blade

        :param spec: OddFieldSpec
        :returns: MultivectorField
    """
    typeChecker('assemble_odd', spec, OddFieldSpec, 'spec')
    ring = spec.ring

    def unit(*names):
        mv = _blade_unit(*names)
        return mv if ring == RATIONAL else mv.to_double()

    out = MultivectorField.zero(ring)
    for n, s in enumerate(('s1', 's2', 's3')):
        out = out + unit(s) * spec.K[n]
        out = out + unit('t1', s, 't3') * spec.W[n]
    out = out + unit('t3') * spec.U
    out = out + unit('t1') * spec.V
    if spec.raw is not None:
        out = out + spec.raw
    return out


def primed_copy(spec):
    """
        The pseudo-source copy of a spec: every component multiplied by S
    """
    S = PSEUDO_S if spec.ring == RATIONAL else PSEUDO_S.to_double()
    return spec.map(lambda value: value * S)


_LINE = re.compile(r'^\s*(?P<name>[A-Za-z_][A-Za-z0-9_]*)'
                   r'(?:\.(?P<part>[A-Za-z0-9]+))?\s*=(?P<expr>.*)$')


def parse_spec_file(text):
    """
        Parses spec-file text:

            # comment
            K1 = cos(t3 - x3)
            W1.i = -1/2*t2*sin(t3 - x3)
            raw.t1t2 = 1

        NAME is one of K1..K3, U, V, W1..W3 or psi with an optional part
        1, i, I or S; raw.<blade> adds a raw component.

        :returns: OddFieldSpec
        :raises ParseError: with the byte offset of the offending text
    """
    parts = {}
    raw = {}
    offset = 0
    for line in text.splitlines(True):
        start = offset
        offset += len(line.encode('utf-8'))
        body = line.split('#', 1)[0]
        if body.strip() == '':
            continue
        match = _LINE.match(body.rstrip('\r\n'))
        if match is None:
            raise ParseError('expected NAME[.part] = expression', start)
        name, part = match.group('name'), match.group('part')
        expr_offset = start + byte_offset(body, match.start('expr'))
        value = parse_trigpoly(match.group('expr'), expr_offset)
        if name == 'raw':
            if part is None:
                raise ParseError('raw needs a blade, e.g. raw.t1t2', start)
            try:
                mask, sign = parse_blade(part)
            except BadInput:
                raise ParseError('{!r} is not a blade'.format(part), start)
            if mask in raw:
                raise ParseError('raw.{} assigned twice'.format(part), start)
            raw[mask] = value if sign > 0 else -value
            continue
        if name not in COMPONENT_NAMES + ('psi',):
            raise ParseError('unknown component {!r}'.format(name), start)
        part = '1' if part is None else part
        if part not in COEFFICIENT_PARTS:
            raise ParseError('unknown part {!r}, expected one of {}'.format(
                part, COEFFICIENT_PARTS), start)
        if (name, part) in parts:
            raise ParseError('{}.{} assigned twice'.format(name, part), start)
        parts[(name, part)] = value

    def component(name):
        values = {p: parts[(name, p)] for p in COEFFICIENT_PARTS
                  if (name, p) in parts}
        if not values:
            return None
        return coefficient_field(one=values.get('1'), i=values.get('i'),
                                 I=values.get('I'), S=values.get('S'))

    return OddFieldSpec(K=[component('K{}'.format(n)) for n in (1, 2, 3)],
                        U=component('U'), V=component('V'),
                        W=[component('W{}'.format(n)) for n in (1, 2, 3)],
                        raw=MultivectorField(raw) if raw else None,
                        psi=component('psi'))


def random_trigpoly(rng, degree=2, max_terms=3):
    """
        A random polynomial of bounded degree with small rational coefficients
    """
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        exponents = [0] * 6
        for _ in range(int(rng.integers(0, degree + 1))):
            exponents[int(rng.integers(0, 6))] += 1
        coefficient = Fraction(int(rng.integers(-4, 5)),
                               int(rng.integers(1, 4)))
        terms[(tuple(exponents), '1', None)] = coefficient
    return TrigPoly(terms)


def random_spec(rng, degree=2, density=0.5):
    """
        A random odd spec with polynomial components of degree <= degree
    """
    def component():
        values = {}
        for part in COEFFICIENT_PARTS:
            if rng.random() < density:
                values[part] = random_trigpoly(rng, degree)
        return coefficient_field(one=values.get('1'), i=values.get('i'),
                                 I=values.get('I'), S=values.get('S'))

    return OddFieldSpec(K=[component() for _ in range(3)], U=component(),
                        V=component(), W=[component() for _ in range(3)])


def _potential_fields(a_t, a_s):
    for tp in (a_t,) + tuple(a_s):
        typeChecker('spec_from_potentials', tp, TrigPoly, 'potential')
        if not tp.free_of(('t1', 't2')):
            handler('spec_from_potentials', '{} depends on t1/t2'.format(tp))
            raise DomainError('3+1 potentials must not depend on t1, t2')
    phi = MultivectorField.scalar(a_t)
    A = tuple(MultivectorField.scalar(a) for a in a_s)
    E = tuple(-g - dt3(a) for g, a in zip(grad(phi), A))
    B = curl(A)
    return phi, A, E, B


def potential_fields(a_t, a_s):
    """
        E = -grad a_t - d_t3 a_s and B = curl a_s for 3+1 potentials

        :returns: (E, B) as tuples of scalar fields
    """
    _, _, E, B = _potential_fields(a_t, a_s)
    return E, B


def spec_from_potentials(a_t, a_s):
    """
        Builds an exact solution spec from a t1,t2-independent 3+1 potential
            in Lorentz gauge whose sources satisfy curl J = 0 and
            grad rho + d_t3 J = 0

        :param a_t: scalar potential (TrigPoly)
        :param a_s: three vector-potential components (TrigPoly)
        :returns: OddFieldSpec with K = A - J h, U = a_t - rho h, V = 0 and
            W = -(tau/2)(E + I B), where h = (t1^2 + t2^2)/4
        :raises DomainError: the potential violates the requirements
    """
    phi, A, E, B = _potential_fields(a_t, a_s)
    lorentz = div(A) + dt3(phi)
    rho = div(E)
    J = tuple(c - dt3(e) for c, e in zip(curl(B), E))
    if not lorentz.is_zero():
        raise DomainError('potential violates the Lorentz condition')
    if not all(c.is_zero() for c in curl(J)):
        raise DomainError('current must be curl-free')
    if not all((g + dt3(j)).is_zero() for g, j in zip(grad(rho), J)):
        raise DomainError('grad rho + d_t3 J must vanish')
    h = MultivectorField.scalar(
        (TrigPoly.variable('t1', 2) + TrigPoly.variable('t2', 2)) *
        Fraction(1, 4))
    half_tau = tau_field() * Fraction(-1, 2)
    K = [a - j * h for a, j in zip(A, J)]
    U = phi - rho * h
    W = [half_tau * (e + PSEUDO_I * b) for e, b in zip(E, B)]
    return OddFieldSpec(K=K, U=U, V=None, W=W)


def _cos_t3_minus_x3():
    return TrigPoly.cos(LinearForm({'t3': 1, 'x3': -1}))


def solution_library():
    """
        Named exact solutions: a plane wave, a static uniform charge, a
            linearly ramped charge with its current, and a pure-gauge spec
            with a harmonic transverse-time component

        :returns: dict name -> OddFieldSpec
    """
    zero = TrigPoly.zero()
    x1 = TrigPoly.variable('x1')
    t3 = TrigPoly.variable('t3')
    library = {
        'plane_wave': spec_from_potentials(zero, (_cos_t3_minus_x3(), zero,
                                                  zero)),
        'static_charge': spec_from_potentials(x1 * x1 * Fraction(-1, 2),
                                              (zero, zero, zero)),
        'ramped_charge': spec_from_potentials(
            x1 * x1 * t3 * Fraction(-1, 2),
            (x1 * x1 * x1 * Fraction(1, 6), zero, zero)),
        'pure_gauge': OddFieldSpec(K=[x1 * -2, None, None],
                                   V=tau_field(),
                                   psi=x1 * x1),
    }
    return library
