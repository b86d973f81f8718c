from .spec import OddFieldSpec, assemble_odd, parse_spec_file, primed_copy, \
    random_spec, solution_library, spec_from_potentials
from .maxwell import BracketFamilies, MaxwellFields, bracket_decompose, \
    bracket_checks, check_continuity, check_field_equations, check_maxwell, \
    check_potentials, check_pseudo_duality, derivation_checks, \
    extract_fields, solve_gauge
from .sta import sta_regression
