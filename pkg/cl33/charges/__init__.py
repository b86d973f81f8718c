from .qparser import RationalFunctionSpec, parse_q
from .contour import ContourSpec, ChargeReport, argument_integral, \
    conjugate_charge, xi_integral, xi_closed_form
