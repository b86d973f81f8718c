from fractions import Fraction

import pytest

from cl33.core.config import make_rng
from cl33.core.exceptions import DomainError, ParityError, ParseError
from cl33.derivations.gauge import solve_wave_poisson, transverse_wave
from cl33.derivations.maxwell import FAMILIES, MaxwellFields, \
    bracket_checks, bracket_decompose, check_continuity, \
    check_field_equations, check_maxwell, check_partition, \
    check_potentials, check_pseudo_duality, derivation_checks, solve_gauge, \
    extract_fields
from cl33.derivations.spec import OddFieldSpec, assemble_odd, \
    parse_spec_file, primed_copy, random_spec, solution_library, \
    spec_from_potentials
from cl33.derivations.sta import box, sta_regression
from cl33.fields.calculus import apply_D
from cl33.fields.field import MultivectorField
from cl33.fields.trigpoly import LinearForm, TrigPoly

x1 = TrigPoly.variable('x1')
x2 = TrigPoly.variable('x2')
t3 = TrigPoly.variable('t3')
zero = TrigPoly.zero()
PHASE = LinearForm({'t3': 1, 'x3': -1})


def failures(checks):
    return [c.name for c in checks if not c.passed]


def test_families_partition_even_blades():
    assert check_partition()


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_bracket_identities_hold_for_random_specs(seed):
    rng = make_rng(seed)
    for _ in range(3):
        checks = bracket_checks(random_spec(rng), solution=False)
        assert not failures(checks)
        names = {c.name for c in checks}
        assert {'bracket_agreement.' + f for f in FAMILIES} <= names


@pytest.mark.parametrize('name', ['plane_wave', 'static_charge',
                                  'ramped_charge', 'pure_gauge'])
def test_solution_library_derives_maxwell(name, points):
    spec = solution_library()[name]
    checks = derivation_checks(spec, points)
    assert not failures(checks)


def test_random_spec_is_not_a_solution():
    spec = random_spec(make_rng(3), density=1.0)
    checks = bracket_checks(spec, solution=True)
    assert any(c.name.startswith('bracket_vanishes') and not c.passed
               for c in checks)


def test_plane_wave_fields():
    f = extract_fields(solution_library()['plane_wave'])
    sin = MultivectorField.scalar(TrigPoly.sin(PHASE))
    assert f.E[0] == sin
    assert f.E[1].is_zero() and f.E[2].is_zero()
    assert f.B[1] == sin
    assert f.rho.is_zero()


def test_static_charge_has_unit_density():
    f = extract_fields(solution_library()['static_charge'])
    assert f.rho == 1
    assert all(j.is_zero() for j in f.J)


def test_even_content_is_a_parity_error():
    spec = OddFieldSpec(K=[x1, None, None],
                        raw=MultivectorField({'t1t2': x1}))
    with pytest.raises(ParityError):
        bracket_checks(spec)


def test_primed_sector_satisfies_same_equations():
    primed = primed_copy(solution_library()['plane_wave'])
    f = extract_fields(primed)
    assert not failures(bracket_checks(primed))
    assert not failures(check_pseudo_duality(f))
    assert not failures(check_field_equations(f))
    assert not failures(check_continuity(f))


def test_from_components_reads_back():
    E = (x1, zero, t3)
    B = (zero, x2, zero)
    f = MaxwellFields.from_components(E=E, B=B, E_p=(zero, zero, x1))
    assert f.E[0] == MultivectorField.scalar(x1)
    assert f.E[2] == MultivectorField.scalar(t3)
    assert f.B[1] == MultivectorField.scalar(x2)
    assert f.E_p[2] == MultivectorField.scalar(x1)
    assert f.B_p[1].is_zero()


def test_check_maxwell_flags_a_violation():
    f = MaxwellFields.from_components(E=(x1, zero, zero))
    checks = {c.name: c for c in check_maxwell(f)}
    assert not checks['gauss'].passed
    assert checks['no_monopole'].passed


def test_potentials_with_wrong_gauge_are_informational():
    spec = solution_library()['pure_gauge']
    checks = {c.name: c for c in check_potentials(spec, psi=x2)}
    assert not checks['gauge_equation'].passed
    assert checks['lorentz_condition'].status == 'info'
    assert checks['electric_reconstruction'].detail == \
        'gauge equation precondition failed'


def test_gauge_solver_recovers_pure_gauge():
    spec = OddFieldSpec(K=[x1 * -2, None, None],
                        V=solution_library()['pure_gauge'].V)
    checks = {c.name: c for c in check_potentials(spec)}
    assert checks['gauge_equation'].passed
    assert checks['lorentz_condition'].passed


@pytest.mark.parametrize('rhs', [x1 * x2, t3 ** 2 * x2, x1 ** 3 + t3 * x2,
                                 TrigPoly.constant(Fraction(5, 3))])
def test_wave_poisson_solver(rhs):
    psi = solve_wave_poisson(rhs)
    laplace = psi.differentiate('x1').differentiate('x1') + \
        transverse_wave(psi)
    assert laplace == rhs


def test_wave_poisson_rejects_trig():
    with pytest.raises(DomainError):
        solve_wave_poisson(TrigPoly.cos(PHASE))


def test_spec_from_potentials_rejects_transverse_dependence():
    with pytest.raises(DomainError):
        spec_from_potentials(TrigPoly.variable('t1'), (zero, zero, zero))


def test_spec_from_potentials_requires_lorentz_gauge():
    with pytest.raises(DomainError):
        spec_from_potentials(zero, (x1, zero, zero))


SPEC_TEXT = """# plane wave along x3
K1 = cos(t3 - x3)
W1 = -1/2*t1*sin(t3 - x3)
W1.i = -1/2*t2*sin(t3 - x3)
W2.I = -1/2*t2*cos(t3 - x3)
"""


def test_parse_spec_file_components():
    spec = parse_spec_file(SPEC_TEXT)
    assert spec.K[0] == MultivectorField.scalar(TrigPoly.cos(PHASE))
    assert spec.U.is_zero()
    assert not spec.W[1].is_zero()


@pytest.mark.parametrize('text,offset', [
    ('K1 = x1\nQ = 1\n', 8),
    ('K1 = x1\nK1 = x2\n', 8),
    ('K1 = x1 +\n', 9),
    ('U.j = 1\n', 0),
    ('raw = 1\n', 0),
    ('just text\n', 0),
])
def test_parse_spec_file_errors(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_spec_file(text)
    assert exc.value.offset == offset


@pytest.mark.parametrize('a_t,a_s', [
    (x1, (zero, zero, zero)),
    (zero, (x2, zero, zero)),
    (zero, (zero, zero, TrigPoly.cos(LinearForm({'t3': 1, 'x1': -1})))),
    (x1 * t3, (zero, zero, zero)),
    (x1 * x2 * t3, (t3 ** 2, x1, zero)),
])
def test_sta_regression(a_t, a_s):
    assert not failures(sta_regression(a_t, a_s))


def test_box_rejects_transverse_time():
    with pytest.raises(DomainError):
        box(MultivectorField.scalar(TrigPoly.variable('t2')))


def test_assembled_field_is_odd():
    V = assemble_odd(random_spec(make_rng(4), density=1.0))
    assert V.even().is_zero()
    assert not V.is_zero()


def test_bracket_families_partition_the_derivative():
    DV = apply_D(assemble_odd(random_spec(make_rng(5))))
    parts = list(bracket_decompose(DV).fields().values())
    assert len(parts) == 4
    assert sum(parts[1:], parts[0]) == DV


def test_solutions_have_vanishing_brackets():
    DV = apply_D(assemble_odd(solution_library()['ramped_charge']))
    families = bracket_decompose(DV)
    assert all(f.is_zero() for f in families.fields().values())


def test_bracket_decompose_rejects_odd_content():
    with pytest.raises(ParityError):
        bracket_decompose(MultivectorField({'t1': x1}))


def test_solve_gauge_for_transverse_potential():
    psi = solve_gauge(solution_library()['pure_gauge'])
    assert psi == MultivectorField.scalar(x1 ** 2)
