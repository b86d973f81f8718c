"""
    From D V = 0 to Maxwell's equations.

    D V of an odd spec field is even and splits into four disjoint blade
    families, each a basis prefix times a coefficient-algebra value:

        scalar            1                  div K + d_t3 U + grad_T V
        space_time  n     gamma_sn gamma_t3  I (curl K)_n - d_n U - d_t3 K_n + grad_T W_n
        transverse_time   gamma_t1 gamma_t3  grad_T* U - div W - d_t3 V
        transverse_space n gamma_t1 gamma_sn grad_T* K_n + I (curl W)_n + d_n V + d_t3 W_n

    F_n = -grad_T W_n carries E (span{1, i}) and I B (span{I, S}).
"""
from ..core.blade import grade
from ..core.constants import COEFFICIENT_MASKS, PSEUDO_I, PSEUDO_S, generator
from ..core.exceptions import DomainError, ParityError, handler, \
    typeChecker
from ..core.multivector import Multivector, inverse
from ..core.report import Check, measure
from ..core.ring import RATIONAL
from ..fields.calculus import TRANSVERSE, TRANSVERSE_CONJUGATE, \
    apply_D, apply_transverse, curl, div, dt3, grad, transverse_laplacian, \
    wave_operator
from ..fields.field import MultivectorField, complex_part, \
    project_coefficients, pseudo_part
from ..fields.trigpoly import TrigPoly
from .gauge import solve_wave_poisson
from .spec import OddFieldSpec, assemble_odd

FAMILIES = ('scalar', 'space_time', 'transverse_time', 'transverse_space')


def _unit(ring, *names):
    out = Multivector.scalar(1)
    for name in names:
        out = out * generator(name)
    return out if ring == RATIONAL else out.to_double()


def _const(mv, ring):
    return mv if ring == RATIONAL else mv.to_double()


def family_prefixes(ring=RATIONAL):
    """
        :returns: dict family -> list of basis prefixes (one per member)
    """
    return {
        'scalar': [_unit(ring)],
        'space_time': [_unit(ring, s, 't3') for s in ('s1', 's2', 's3')],
        'transverse_time': [_unit(ring, 't1', 't3')],
        'transverse_space': [_unit(ring, 't1', s) for s in ('s1', 's2', 's3')],
    }


def family_masks():
    """
        :returns: dict family -> list (one per member) of blade mask sets
    """
    out = {}
    for family, prefixes in family_prefixes().items():
        out[family] = []
        for prefix in prefixes:
            (mask,) = prefix.terms.keys()
            out[family].append({mask ^ c for c in COEFFICIENT_MASKS})
    return out


def check_partition():
    """
        :returns: True when the families are disjoint and cover all 32 even
            blades
    """
    seen = []
    for members in family_masks().values():
        for masks in members:
            seen.extend(masks)
    even = {m for m in range(64) if grade(m) % 2 == 0}
    return len(seen) == len(set(seen)) == 32 and set(seen) == even


class BracketFamilies:
    def __init__(self, scalar, space_time, transverse_time, transverse_space):
        """
            Initialization - the four family projections of an even field

            :param scalar: MultivectorField
            :param space_time: tuple of three MultivectorFields
            :param transverse_time: MultivectorField
            :param transverse_space: tuple of three MultivectorFields
        """
        self.scalar = scalar
        self.space_time = tuple(space_time)
        self.transverse_time = transverse_time
        self.transverse_space = tuple(transverse_space)

    def fields(self):
        """
            :returns: dict family -> single MultivectorField
        """
        return {
            'scalar': self.scalar,
            'space_time': sum(self.space_time[1:], self.space_time[0]),
            'transverse_time': self.transverse_time,
            'transverse_space': sum(self.transverse_space[1:],
                                    self.transverse_space[0]),
        }

    def total(self):
        fields = list(self.fields().values())
        return sum(fields[1:], fields[0])

    def coefficients(self):
        """
            Strips the basis prefixes: dict family -> list of coefficient-
                algebra values, prefix^-1 times the family member
        """
        ring = self.scalar.ring
        prefixes = family_prefixes(ring)
        members = {'scalar': [self.scalar],
                   'space_time': list(self.space_time),
                   'transverse_time': [self.transverse_time],
                   'transverse_space': list(self.transverse_space)}
        return {family: [project_coefficients(inverse(p) * m) for p, m in
                         zip(prefixes[family], members[family])]
                for family in FAMILIES}


def bracket_decompose(DV):
    """
        Projects an even field onto the four bracket families

        :param DV: apply_D of an assembled odd field
        :returns: BracketFamilies
        :raises ParityError: DV carries odd-grade content
    """
    typeChecker('bracket_decompose', DV, MultivectorField, 'field')
    if not DV.odd().is_zero():
        handler('bracket_decompose', 'odd-grade content in {} blades'.format(
            len(DV.odd().masks())))
        raise ParityError('derivative has odd-grade content; the input field '
                          'was not odd')
    masks = family_masks()
    return BracketFamilies(
        DV.restrict(masks['scalar'][0]),
        [DV.restrict(m) for m in masks['space_time']],
        DV.restrict(masks['transverse_time'][0]),
        [DV.restrict(m) for m in masks['transverse_space']])


def check_parity(V):
    """
        :raises ParityError: the assembled field has even-grade content
    """
    if not V.even().is_zero():
        raise ParityError('assembled field has even-grade content in blades '
                          '{}'.format(V.even().masks()))
    return V


def bracket_expressions(spec):
    """
        The four bracket values computed from the odd-field components by vector
            calculus, independent of the blade algebra projection

        :returns: dict family -> list of coefficient-algebra values
    """
    typeChecker('bracket_expressions', spec, OddFieldSpec, 'spec')
    I = _const(PSEUDO_I, spec.ring)
    K, U, V, W = spec.K, spec.U, spec.V, spec.W
    curl_K, curl_W = curl(K), curl(W)
    grad_U, grad_V = grad(U), grad(V)
    return {
        'scalar': [div(K) + dt3(U) + apply_transverse(V, TRANSVERSE)],
        'space_time': [I * curl_K[n] - grad_U[n] - dt3(K[n]) +
                       apply_transverse(W[n], TRANSVERSE) for n in range(3)],
        'transverse_time': [apply_transverse(U, TRANSVERSE_CONJUGATE) -
                            div(W) - dt3(V)],
        'transverse_space': [apply_transverse(K[n], TRANSVERSE_CONJUGATE) +
                             I * curl_W[n] + grad_V[n] + dt3(W[n])
                             for n in range(3)],
    }


def assemble_brackets(expressions, ring=RATIONAL):
    """
        Re-attaches the basis prefixes to bracket values
    """
    prefixes = family_prefixes(ring)
    out = MultivectorField.zero(ring)
    for family in FAMILIES:
        for prefix, value in zip(prefixes[family], expressions[family]):
            out = out + prefix * value
    return out


def bracket_checks(spec, solution=True):
    """
        Decomposes D V for a spec and reports partition completeness,
            agreement with the vector-calculus brackets, the grad_T
            pre-operated identity and (if solution is set) vanishing brackets
    """
    V = check_parity(assemble_odd(spec))
    DV = apply_D(V)
    families = bracket_decompose(DV)
    expressions = bracket_expressions(spec)
    coefficients = families.coefficients()
    checks = [measure('partition_completeness', families.total() - DV)]
    for family in FAMILIES:
        residuals = [a - b for a, b in zip(coefficients[family],
                                           expressions[family])]
        checks.append(measure('bracket_agreement.{}'.format(family),
                              residuals))
    checks.append(measure('bracket_reassembly',
                          assemble_brackets(expressions, spec.ring) - DV))
    checks.append(measure('pre_operated_brackets',
                          pre_operated_residuals(families, expressions,
                                                 spec.ring)))
    if solution:
        for family in FAMILIES:
            checks.append(measure('bracket_vanishes.{}'.format(family),
                                  expressions[family]))
    return checks


def pre_operated_residuals(families, expressions, ring=RATIONAL):
    """
        grad_T applied to gamma_t1 times the transverse families reproduces
            gamma_t3 grad_T[transverse_time] and gamma_sn grad_T[transverse_space n]
    """
    t1 = _unit(ring, 't1')
    residuals = []
    operated = apply_transverse(t1 * families.transverse_time, TRANSVERSE)
    expected = _unit(ring, 't3') * apply_transverse(
        expressions['transverse_time'][0], TRANSVERSE)
    residuals.append(operated - expected)
    for n, s in enumerate(('s1', 's2', 's3')):
        operated = apply_transverse(t1 * families.transverse_space[n],
                                    TRANSVERSE)
        expected = _unit(ring, s) * apply_transverse(
            expressions['transverse_space'][n], TRANSVERSE)
        residuals.append(operated - expected)
    return residuals


def _vector(values, ring):
    out = []
    for value in values or (None, None, None):
        if value is None:
            out.append(MultivectorField.zero(ring))
        elif isinstance(value, MultivectorField):
            out.append(value)
        else:
            if not isinstance(value, TrigPoly):
                value = TrigPoly.constant(value, ring)
            out.append(MultivectorField.scalar(value))
    return tuple(out)


def _scalar(value, ring):
    return _vector([value], ring)[0]


class MaxwellFields:
    def __init__(self, F, rho_total, J_total, u=None, k=None, A_s=None,
                 A_t=None, psi=None):
        """
            Initialization - fields and sources extracted from a spec

            :param F: three coefficient-algebra fields, E + I B plus the
                pseudo-source sector
            :param rho_total: rho + S rho'
            :param J_total: three fields, J + S J'
            :param u: grad_T grad_T* U
            :param k: three fields, grad_T grad_T* K
            :param A_s: vector potential (three fields), if known
            :param A_t: scalar potential, if known
            :param psi: gauge function, if known
        """
        ring = F[0].ring
        self.__ring = ring
        self.F = _vector(F, ring)
        self.rho_total = _scalar(rho_total, ring)
        self.J_total = _vector(J_total, ring)
        self.u = _scalar(u, ring)
        self.k = _vector(k, ring)
        self.A_s = None if A_s is None else _vector(A_s, ring)
        self.A_t = None if A_t is None else _scalar(A_t, ring)
        self.psi = None if psi is None else _scalar(psi, ring)

    @classmethod
    def from_components(cls, E=None, B=None, rho=None, J=None, E_p=None,
                        B_p=None, rho_p=None, J_p=None, ring=RATIONAL):
        """
            Builds fields directly from 3+1 quantities; primed quantities
                enter through S (F = E + I B + S(E' + I B'))
        """
        I, S = _const(PSEUDO_I, ring), _const(PSEUDO_S, ring)
        E, B = _vector(E, ring), _vector(B, ring)
        E_p, B_p = _vector(E_p, ring), _vector(B_p, ring)
        J, J_p = _vector(J, ring), _vector(J_p, ring)
        F = [e + I * b + S * (ep + I * bp)
             for e, b, ep, bp in zip(E, B, E_p, B_p)]
        rho_total = _scalar(rho, ring) + S * _scalar(rho_p, ring)
        J_total = [j + S * jp for j, jp in zip(J, J_p)]
        return cls(F, rho_total, J_total)

    @property
    def ring(self):
        return self.__ring

    def _read(self, value):
        """
            Splits a coefficient-algebra value a + I b with a, b in span{1, i}
        """
        I = _const(PSEUDO_I, self.__ring)
        return complex_part(value), -I * pseudo_part(value)

    def _read_primed(self, value):
        S = _const(PSEUDO_S, self.__ring)
        return self._read(S * value)

    @property
    def E(self):
        return tuple(self._read(f)[0] for f in self.F)

    @property
    def B(self):
        return tuple(self._read(f)[1] for f in self.F)

    @property
    def rho(self):
        return complex_part(self.rho_total)

    @property
    def J(self):
        return tuple(complex_part(j) for j in self.J_total)

    @property
    def E_p(self):
        return tuple(self._read_primed(f)[0] for f in self.F)

    @property
    def B_p(self):
        return tuple(self._read_primed(f)[1] for f in self.F)

    @property
    def rho_p(self):
        S = _const(PSEUDO_S, self.__ring)
        return S * pseudo_part(self.rho_total)

    @property
    def J_p(self):
        S = _const(PSEUDO_S, self.__ring)
        return tuple(S * pseudo_part(j) for j in self.J_total)

    def get_dict(self):
        def dump(values):
            return [str(v) for v in values]
        return {'E': dump(self.E), 'B': dump(self.B), 'rho': str(self.rho),
                'J': dump(self.J), 'E_p': dump(self.E_p),
                'B_p': dump(self.B_p), 'rho_p': str(self.rho_p),
                'J_p': dump(self.J_p)}


def extract_fields(spec, psi=None):
    """
        Extracts F = -grad_T W, the auxiliaries u, k and the total sources
            rho + S rho' = -(u - d_t3 grad_T V) and
            J + S J' = -(k + grad grad_T V)

        :param spec: OddFieldSpec
        :param psi: optional gauge function; when given (or carried by the
            spec) the potentials are filled in
        :returns: MaxwellFields
    """
    typeChecker('extract_fields', spec, OddFieldSpec, 'spec')
    F = [-apply_transverse(w, TRANSVERSE) for w in spec.W]
    u = transverse_laplacian(spec.U)
    k = [transverse_laplacian(c) for c in spec.K]
    grad_T_V = apply_transverse(spec.V, TRANSVERSE)
    rho_total = -(u - dt3(grad_T_V))
    J_total = [-(kn + g) for kn, g in zip(k, grad(grad_T_V))]
    psi = spec.psi if psi is None else psi
    A_s = A_t = None
    if psi is not None:
        psi = _scalar(psi, spec.ring)
        A_s = [kn + g for kn, g in zip(spec.K, grad(psi))]
        A_t = spec.U - dt3(psi)
    return MaxwellFields(F, rho_total, J_total, u=u, k=k, A_s=A_s, A_t=A_t,
                         psi=psi)


def _sampled(checks, residuals, points, tol):
    if points is None:
        return checks
    for name, value in residuals:
        fields = value if isinstance(value, (list, tuple)) else [value]
        worst = max(f.to_double().sampled_max_abs(points) for f in fields)
        checks.append(measure(name + '.sampled', worst, tol))
    return checks


def _maxwell_residuals(E, B, rho, J, prefix=''):
    return [
        (prefix + 'gauss', div(E) - rho),
        (prefix + 'no_monopole', div(B)),
        (prefix + 'faraday', [c + dt3(b) for c, b in zip(curl(E), B)]),
        (prefix + 'ampere', [c - dt3(e) - j for c, e, j in
                             zip(curl(B), E, J)]),
    ]


def check_maxwell(f, points=None, tol=None):
    """
        Residuals of div E - rho, div B, curl E + d_t3 B and
            curl B - d_t3 E - J

        :param f: MaxwellFields
        :param points: optional (n, 6) sample points for sampled residuals
        :returns: list of Check entries
    """
    typeChecker('check_maxwell', f, MaxwellFields, 'fields')
    residuals = _maxwell_residuals(f.E, f.B, f.rho, f.J)
    checks = [measure(name, value, tol) for name, value in residuals]
    return _sampled(checks, residuals, points, tol)


def check_continuity(f, points=None, tol=None):
    """
        Residuals of d_t3 rho + div J and of the primed counterpart
    """
    typeChecker('check_continuity', f, MaxwellFields, 'fields')
    residuals = [('continuity', dt3(f.rho) + div(f.J)),
                 ('primed_continuity', dt3(f.rho_p) + div(f.J_p))]
    checks = [measure(name, value, tol) for name, value in residuals]
    return _sampled(checks, residuals, points, tol)


def check_pseudo_duality(f, points=None, tol=None):
    """
        The pseudo-source sector: primed fields read from S F satisfy the
            same four equations with the primed sources; the primed
            divergence of B has no source term
    """
    typeChecker('check_pseudo_duality', f, MaxwellFields, 'fields')
    residuals = _maxwell_residuals(f.E_p, f.B_p, f.rho_p, f.J_p, 'primed_')
    checks = [measure(name, value, tol) for name, value in residuals]
    return _sampled(checks, residuals, points, tol)


def check_field_equations(f, tol=None):
    """
        The complete coefficient-algebra form, valid for mixed sources:
            div F = rho + S rho' and -I curl F - d_t3 F = J + S J'
    """
    typeChecker('check_field_equations', f, MaxwellFields, 'fields')
    I = _const(PSEUDO_I, f.ring)
    curl_F = curl(f.F)
    return [
        measure('field_divergence', div(f.F) - f.rho_total, tol),
        measure('field_curl', [-(I * c) - dt3(x) - j for c, x, j in
                               zip(curl_F, f.F, f.J_total)], tol),
    ]


def check_auxiliary_waves(f, tol=None):
    """
        The auxiliaries u and k satisfy the 3+1 wave equation
    """
    return [measure('auxiliary_wave.u', wave_operator(f.u), tol),
            measure('auxiliary_wave.k', [wave_operator(k) for k in f.k], tol)]


def check_harmonic_transverse(spec, f):
    """
        Records whether a spec has k != 0 while its transverse-time
            component is harmonic
    """
    harmonic = transverse_laplacian(spec.V).is_zero()
    nonzero_k = not all(k.is_zero() for k in f.k)
    return [Check.info('sourced_auxiliary', detail={
                'k_nonzero': nonzero_k, 'transverse_harmonic': harmonic})]


def solve_gauge(spec):
    """
        Solves (d_x1^2 + d_x2^2 + d_x3^2 - d_t3^2) psi = grad_T V for a
            polynomial right-hand side

        :returns: coefficient-algebra field psi
        :raises DomainError: grad_T V is not polynomial
    """
    rhs = apply_transverse(spec.V, TRANSVERSE)
    return MultivectorField({mask: solve_wave_poisson(tp) for mask, tp in
                             rhs.components.items()}, spec.ring)


def check_potentials(spec, psi=None, tol=None):
    """
        Potentials A_s = K + grad psi and A_t = U - d_t3 psi: the gauge
            equation precondition, the Lorentz condition and the field
            reconstruction I curl A_s - grad A_t - d_t3 A_s = E + I B

        :param spec: OddFieldSpec
        :param psi: gauge function (TrigPoly or field); defaults to the
            spec's psi, else the polynomial gauge solver
        :returns: list of Check entries; when psi fails the gauge equation
            the remaining entries are reported as info
    """
    typeChecker('check_potentials', spec, OddFieldSpec, 'spec')
    if psi is None:
        psi = spec.psi
    if psi is None:
        try:
            psi = solve_gauge(spec)
        except DomainError:
            handler('check_potentials', 'no polynomial gauge; using psi = 0')
            psi = MultivectorField.zero(spec.ring)
    psi = _scalar(psi, spec.ring)
    f = extract_fields(spec, psi)
    I = _const(PSEUDO_I, spec.ring)
    laplace = sum((g.differentiate(c) for g, c in
                   zip(grad(psi), ('x1', 'x2', 'x3'))),
                  MultivectorField.zero(spec.ring))
    gauge = laplace - dt3(dt3(psi)) - apply_transverse(spec.V, TRANSVERSE)
    precondition = measure('gauge_equation', gauge, tol)
    lorentz = div(f.A_s) + dt3(f.A_t)
    rebuilt = [I * c - g - dt3(a) for c, g, a in
               zip(curl(f.A_s), grad(f.A_t), f.A_s)]
    mismatch = [r - x for r, x in zip(rebuilt, f.F)]
    checks = [
        precondition,
        measure('lorentz_condition', lorentz, tol),
        measure('electric_reconstruction',
                [complex_part(m) for m in mismatch], tol),
        measure('magnetic_reconstruction',
                [pseudo_part(m) for m in mismatch], tol),
    ]
    if not precondition.passed:
        handler('check_potentials', 'psi does not solve the gauge equation; '
                'potential residuals are informational')
        for check in checks[1:]:
            check.status = 'info'
            check.detail = 'gauge equation precondition failed'
    return checks


def derivation_checks(spec, points=None, tol=None):
    """
        The full chain for a solution spec: brackets, Maxwell, continuity,
            the complete field equations, potentials and auxiliaries
    """
    checks = bracket_checks(spec)
    f = extract_fields(spec)
    checks += check_maxwell(f, points, tol)
    checks += check_continuity(f, points, tol)
    checks += check_field_equations(f, tol)
    checks += check_potentials(spec, tol=tol)
    checks += check_auxiliary_waves(f, tol)
    return checks

