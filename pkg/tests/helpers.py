"""Strategies and independent oracles shared by the test modules."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import assume
from hypothesis import strategies as st

from hcag.coeff import FieldElem
from hcag.curve import HyperCurve, PointDivisor, involution
from hcag.errors import NotSquareFree
from hcag.mumford import MumfordRep, mumford_from_points
from hcag.parsing import parse_upoly
from hcag.poly import BiPoly, Monomial, UPoly

X = UPoly.x()

F5_TEXT = "x^3 + (1/4)*(t^2 + 4*t - 4)*x^2 + (1/2)*t*(t - 1)*x + (1/4)*(t - 1)^2"
F7_TEXT = ("x^3 + (1/4)*(t^4 - 6*t^3 + 3*t^2 + 2*t + 1)*x^2 + (1/2)*(t^5 - 2*t^4 + t^2)*x "
           "+ (1/4)*(t^6 - 2*t^5 + t^4)")


def e5():
    return HyperCurve(1, parse_upoly(F5_TEXT, ("t",)))


def e7():
    return HyperCurve(1, parse_upoly(F7_TEXT, ("t",)))


def t_param():
    return FieldElem.param("t")


def point_rep(curve, x, y):
    return mumford_from_points(PointDivisor.of(curve, curve.point(x, y)))


# -- oracles -------------------------------------------------------------------

def lagrange(xs, values):
    """Interpolating polynomial through (xs[i], values[i]) over Q."""
    out = UPoly()
    for i, xi in enumerate(xs):
        term = UPoly.constant(values[i])
        for j, xj in enumerate(xs):
            if j != i:
                term = term * (X - xj) * Fraction(1, xi - xj)
        out = out + term
    return out


def chord_tangent(f_coeffs, P, Q):
    """Group law on y^2 = x^3 + a2 x^2 + a4 x + a6 by the textbook formulas.

    Points are (x, y) tuples of Fractions or None for the identity.
    """
    a6, a4, a2 = (Fraction(c) for c in f_coeffs[:3])
    if P is None:
        return Q
    if Q is None:
        return P
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and y1 == -y2:
        return None
    if x1 == x2:
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - a2 - x1 - x2
    y3 = -(y1 + lam * (x3 - x1))
    return (x3, y3)


def as_rational(c):
    return c.constant_value()


def rep_of_affine(curve, P):
    """Mumford pair of a single affine point tuple, or the zero pair."""
    if P is None:
        return MumfordRep(UPoly.constant(1), UPoly(), curve)
    return MumfordRep(X - P[0], UPoly.constant(P[1]), curve)


def naive_expand(p, q):
    """Product of BiPolys by the schoolbook double loop."""
    out = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            k = Monomial(m1.m + m2.m, m1.n + m2.n)
            out[k] = out.get(k, FieldElem(0)) + c1 * c2
    return BiPoly(out)


# -- strategies ----------------------------------------------------------------

small_ints = st.integers(-5, 5)
nonzero_ints = st.integers(-5, 5).filter(bool)


@st.composite
def curve_with_points(draw, genus):
    """A random curve of the given genus through 2g+1 rational points."""
    k = 2 * genus + 1
    xs = draw(st.lists(small_ints, min_size=k, max_size=k, unique=True))
    ys = draw(st.lists(small_ints, min_size=k, max_size=k))
    f = X ** k + lagrange(xs, [Fraction(y * y - x ** k) for x, y in zip(xs, ys)])
    try:
        curve = HyperCurve(genus, f)
    except NotSquareFree:
        assume(False)
    return curve, [curve.point(x, y) for x, y in zip(xs, ys)]


@st.composite
def semi_reduced_divisor(draw, curve, points, max_deg):
    """Semi-reduced PointDivisor supported on the given points (or their
    conjugates), of degree <= max_deg."""
    terms = []
    total = 0
    for P in points:
        cap = 1 if P.is_weierstrass() else 2
        m = draw(st.integers(0, min(cap, max_deg - total)))
        if not m:
            continue
        if draw(st.booleans()):
            P = involution(P)
        terms.append((P, m))
        total += m
    return PointDivisor.of(curve, *terms)


@st.composite
def divisor_pair(draw, genus, max_deg=None):
    curve, pts = draw(curve_with_points(genus))
    max_deg = max_deg or genus + 1
    d1 = draw(semi_reduced_divisor(curve, pts, max_deg))
    d2 = draw(semi_reduced_divisor(curve, pts, max_deg))
    return curve, mumford_from_points(d1), mumford_from_points(d2)


@st.composite
def mumford_pair(draw, genus=None):
    """Valid (u, v, f) built directly: f = v^2 + u w, so u | v^2 - f."""
    g = genus or draw(st.sampled_from([1, 2]))
    du = draw(st.integers(1, g + 1))
    u = X ** du + UPoly(draw(st.lists(small_ints, min_size=du, max_size=du)))
    v = UPoly(draw(st.lists(small_ints, min_size=du, max_size=du)))
    dw = 2 * g + 1 - du
    w = X ** dw + UPoly(draw(st.lists(small_ints, min_size=dw, max_size=dw)))
    f = v * v + u * w
    try:
        curve = HyperCurve(g, f)
    except NotSquareFree:
        assume(False)
    return MumfordRep(u, v, curve)


@st.composite
def bipolys(draw, max_terms=3, max_deg=3, coeffs=nonzero_ints):
    n = draw(st.integers(1, max_terms))
    terms = {}
    for _ in range(n):
        m = draw(st.integers(0, max_deg))
        k = draw(st.integers(0, max_deg))
        terms[Monomial(m, k)] = draw(coeffs)
    p = BiPoly(terms)
    assume(not p.is_zero())
    return p
