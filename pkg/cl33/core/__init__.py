from .exceptions import *
from .blade import Blade, MetricSignature, METRIC, blade_product, \
    blade_text, grade, parse_blade
from .multivector import Multivector, geometric_product, grade_project, \
    inverse, reverse, component_along
from .constants import generator, slots, from_slots, coefficient_algebra, \
    NAMED_CONSTANTS, TRANSVERSE_I, PSEUDO_I, PSEUDO_S, PHI_S, PHI_T, PI_T
from .ring import RATIONAL, DOUBLE
from .report import Check, VerificationReport, measure, prefixed
from .axioms import axiom_suite, commutation_table
