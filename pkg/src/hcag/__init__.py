"""Exact divisor arithmetic on hyperelliptic curves y^2 = f(x) through
reduced Groebner bases, with genus-1 contact-curve and quasi-toric tools."""

from .coeff import FieldElem, ParamPoly
from .contact import (ContactCertificate, QuasiToricRelation, chord_divisor, homogenize_relation,
                      quasitoric_certificate, scalar_mul, torsion_order, weak_contact)
from .curve import AffinePoint, HyperCurve, PointDivisor, curve_new, involution
from .errors import HcagError
from .groebner import GroebnerBasis, buchberger, ideal_member, normal_form
from .leitenberger import (LeitenbergerRep, club_check, extract_b, ideal_power_generators,
                           verify_prop_jl)
from .mumford import (MumfordRep, cantor_compose, cantor_reduce, divisor_support, gb_add,
                      mumford_from_points, negate, zero_rep)
from .parsing import parse_field, parse_poly, parse_upoly
from .poly import LEX1, BiPoly, RemElement, UPoly, weighted2

__version__ = "0.1.0"
