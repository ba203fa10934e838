from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcag.coeff import FieldElem
from hcag.contact import (ContactCertificate, QuasiToricRelation, chord_divisor,
                          homogenize_relation, quasitoric_certificate, scalar_mul, torsion_order,
                          weak_contact)
from hcag.curve import AffinePoint, PointDivisor, curve_new, involution
from hcag.errors import (CertificateFailure, GenusUnsupported, NotTorsion,
                         PreconditionViolated)
from hcag.mumford import MumfordRep, mumford_from_points, zero_rep
from hcag.parsing import parse_upoly
from hcag.poly import RemElement, UPoly

from helpers import X, chord_tangent, e5, e7, rep_of_affine

T_PARAM = FieldElem.param("t")


def U(text, params=("t",)):
    return parse_upoly(text, params)


def point_rep(curve, x, y):
    return mumford_from_points(PointDivisor.of(curve, curve.point(x, y)))


@pytest.fixture(scope="module")
def t5():
    return point_rep(e5(), 0, (T_PARAM - 1) / 2)


@pytest.fixture(scope="module")
def t7():
    return point_rep(e7(), 0, (T_PARAM ** 3 - T_PARAM ** 2) / 2)


def _degrees(p):
    return {sum(e[:3]) for e in p.terms}


def _z_only(p, k):
    return all(e[:3] == (0, 0, k) for e in p.terms)


# -- group arithmetic ----------------------------------------------------------

def test_scalar_mul_basics(t5):
    assert scalar_mul(t5, 0) == zero_rep(t5.curve)
    assert scalar_mul(t5, 5) == zero_rep(t5.curve)
    assert scalar_mul(t5, 1) == t5


def test_doubling_matches_chord_tangent():
    c = curve_new(1, U("x^3 + 1", ()))
    P = point_rep(c, 2, 3)
    expected = chord_tangent([1, 0, 0], (Fraction(2), Fraction(3)), (Fraction(2), Fraction(3)))
    # the tangent y = 2x - 1 meets the curve again at (0, -1); the sum is its negative
    assert expected == (0, 1)
    assert scalar_mul(P, 2) == rep_of_affine(c, expected)
    assert scalar_mul(P, 2) == MumfordRep(X, UPoly.constant(1), c)


def test_torsion_orders(t5, t7):
    assert torsion_order(t5) == 5
    assert torsion_order(t7) == 7
    c = curve_new(1, U("x^3 - x", ()))
    assert torsion_order(point_rep(c, 0, 0)) == 2


def test_non_torsion_point_hits_cap():
    c = curve_new(1, U("x^3 - 2", ()))
    P = point_rep(c, 3, 5)
    assert torsion_order(P) is None
    assert torsion_order(P, max_order=3) is None


def test_genus2_rejected():
    c = curve_new(2, U("x^5 - x", ()))
    with pytest.raises(GenusUnsupported):
        torsion_order(point_rep(c, 0, 0))


# -- weak contact curves -----------------------------------------------------------

def test_weak_contact_order5(t5):
    cert = weak_contact(t5, 5)
    assert cert.r == FieldElem(-4) and cert.u == X
    assert cert.b.norm(t5.curve.f) == X ** 5 * -4
    assert cert.b.lead_wdeg(1) == 5


def test_weak_contact_order7(t7):
    cert = weak_contact(t7, 7)
    assert cert.r == FieldElem(-4) and cert.u == X
    assert cert.b.lead_wdeg(1) == 7


def test_weak_contact_wrong_order(t5):
    with pytest.raises(NotTorsion):
        weak_contact(t5, 4)


@pytest.mark.parametrize("m, n", [(1, 3), (2, -1), (Fraction(1, 2), 5)])
def test_tangent_case_order3(m, n):
    f = X ** 3 + (X * m + n) ** 2
    c = curve_new(1, f)
    T = point_rep(c, 0, n)
    cert = weak_contact(T, 3)
    assert cert.u == X
    # identity by direct expansion of the certificate
    b0, b1 = cert.b.b0, cert.b.b1
    assert b0 * b0 - b1 * b1 * f - X ** 3 * cert.r == UPoly()


# -- quasi-toric certificates ----------------------------------------------------

def test_tangent_family_mumford_u():
    # f - v^2 with v = r x - t on y^2 = x^3 + (x + t)^2, divided by x, by hand:
    # x^2 + (1 - r^2) x + 2 t (1 + r)
    c = curve_new(1, U("x^3 + (x + t)^2"))
    T = c.point(0, T_PARAM)
    for r in (0, 1, 2, Fraction(1, 2), -3):
        d = chord_divisor(c, involution(T), r)
        cert = quasitoric_certificate(d, 3)
        assert cert.u == X ** 2 + X * (1 - r * r) + T_PARAM * 2 * (1 + r)
        assert cert.r.is_constant()
        assert cert.b.lead_wdeg(1) == 6


def test_chord_divisor_on_order5(t5):
    T = AffinePoint(FieldElem(0), (T_PARAM - 1) / 2)
    d = chord_divisor(t5.curve, involution(T), 2)
    cert = quasitoric_certificate(d, 5)
    printed_u = -U("x^2 - (r^2 - (1/4)*t^2 - t + 1)*x + r*t - r + t^2/2 - t/2", ("t", "r"))
    assert -cert.u == printed_u.subs_param("r", 2)
    assert cert.b.lead_wdeg(1) == 10


def test_quasitoric_preconditions(t5):
    with pytest.raises(PreconditionViolated):
        quasitoric_certificate(t5, 4)
    # d = T itself: [1]T lies in the support of d
    with pytest.raises(PreconditionViolated):
        quasitoric_certificate(t5, 5)


def test_bad_certificate_rejected(t5):
    cert = weak_contact(t5, 5)
    with pytest.raises(CertificateFailure):
        ContactCertificate(5, cert.b, cert.u, FieldElem(4), cert.curve)
    with pytest.raises(CertificateFailure):
        ContactCertificate(5, cert.b, cert.u, FieldElem(0), cert.curve)


# -- homogenization ------------------------------------------------------------

def _chord_cert(rep, n, r):
    P = AffinePoint(FieldElem(0), rep.v.coeff(0))
    return quasitoric_certificate(chord_divisor(rep.curve, involution(P), r), n)


def test_relation_degrees_order5(t5):
    rel = homogenize_relation(_chord_cert(t5, 5, 3))
    assert rel.degree == 16 and rel.verify()
    assert _degrees(rel.h1) == {8} and _degrees(rel.h3) == {6}
    assert _degrees(rel.h2) == {3}
    assert _z_only(rel.F2, 1) and _z_only(rel.F1, 0)
    assert _degrees(rel.F3) == {4}
    assert [_degrees(s) for s in rel.summands()] == [{16}] * 3


def test_relation_degrees_order7(t7):
    rel = homogenize_relation(_chord_cert(t7, 7, 2))
    assert rel.degree == 38 and rel.verify()
    assert _degrees(rel.h1) == {19} and _degrees(rel.h3) == {16}
    assert _z_only(rel.F2, 3)


def test_degenerate_n1_relation():
    c = curve_new(1, U("x^3 + 1", ()))
    v = UPoly([1, 2])  # line through (0, 1) with slope 2
    quotient = (c.f - v * v).divexact(X)
    cert = ContactCertificate(1, RemElement(v, UPoly.constant(1)), quotient * X, FieldElem(-1), c)
    rel = homogenize_relation(cert)
    assert rel.verify() and rel.degree == 3


def test_relation_rejects_bad_identity(t5):
    rel = homogenize_relation(weak_contact(t5, 5))
    with pytest.raises(CertificateFailure):
        QuasiToricRelation(2, 5, 2, rel.F1, rel.F2, rel.F3, rel.h1 + rel.h1, rel.h2, rel.h3,
                           rel.degree)


def test_infinitely_many_relations(t5):
    slopes = [1, 2, 3, 4, 5, -1, -2, Fraction(1, 2), Fraction(-2, 3), Fraction(5, 7)]
    seen = set()
    for r in slopes:
        cert = _chord_cert(t5, 5, r)
        assert cert.b.lead_wdeg(1) == 5 * cert.u.deg()
        rel = homogenize_relation(cert)
        assert rel.verify()
        seen.add(rel.h2)
    assert len(seen) == len(slopes)


@settings(max_examples=10)
@given(st.fractions(min_value=-20, max_value=20, max_denominator=12))
def test_random_slopes_give_relations(r):
    c = e5()
    T = AffinePoint(FieldElem(0), (T_PARAM - 1) / 2)
    try:
        cert = quasitoric_certificate(chord_divisor(c, involution(T), r), 5)
    except PreconditionViolated:
        return  # the chord passes through a multiple of T for this slope
    rel = homogenize_relation(cert)
    assert rel.verify() and rel.degree == 16
