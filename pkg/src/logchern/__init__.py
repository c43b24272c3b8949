"""Exact verification of Gauss–Bonnet and Poincaré–Hopf type identities for
complements of (possibly singular) divisors in complex projective space.

All arithmetic is over the rationals (:class:`fractions.Fraction`).
"""

from .chow import ChowClass, Decomposition, DivisorOnPn, chern_integral, log_chern_class
from .errors import InputError, LogChernError, PreconditionError
from .gb import groebner, mora_standard_basis, quotient_algebra
from .indices import VectorFieldPn, is_logarithmic, ph_total
from .milnor import certify_points, icis_milnor, local_milnor, milnor_total
from .polyarith import HomogPoly, Poly, parse_homog, parse_poly
from .theorems import ProblemSpec, VerificationReport, euler_complement, verify

__all__ = [
    "ChowClass", "Decomposition", "DivisorOnPn", "HomogPoly", "InputError",
    "LogChernError", "Poly", "PreconditionError", "ProblemSpec", "VectorFieldPn",
    "VerificationReport", "certify_points", "chern_integral", "euler_complement",
    "groebner", "icis_milnor", "is_logarithmic", "local_milnor", "log_chern_class",
    "milnor_total", "mora_standard_basis", "parse_homog", "parse_poly", "ph_total",
    "quotient_algebra", "verify",
]

__version__ = "0.1.0"
