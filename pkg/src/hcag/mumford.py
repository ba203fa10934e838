"""Mumford pairs (u, v): validation, interpolation from points, Cantor's
algorithm, and addition through a lex Groebner basis."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .coeff import as_field
from .curve import HyperCurve, PointDivisor, is_semi_reduced
from .errors import (CurveMismatch, DegreeViolation, DivisibilityViolation,
                     ExtractionShapeError, LiftObstruction, NotMonic, NotSemiReduced)
from .groebner import buchberger
from .poly import LEX1, BiPoly, UPoly, ugcd, uxgcd

_ONE = UPoly.constant(1)
_ZERO = UPoly()


@dataclass(frozen=True)
class MumfordRep:
    u: UPoly
    v: UPoly
    curve: HyperCurve

    def __post_init__(self):
        if not self.u.is_monic():
            raise NotMonic(f"u = {self.u} is not monic")
        if self.v.deg() >= self.u.deg():
            raise DegreeViolation(f"deg v = {self.v.deg()} >= deg u = {self.u.deg()}")
        if (self.v * self.v - self.curve.f) % self.u:
            raise DivisibilityViolation(f"u = {self.u} does not divide v^2 - f")

    def degree(self):
        return self.u.deg()

    def is_zero(self):
        return self.u.deg() == 0

    def is_reduced(self):
        return self.u.deg() <= self.curve.genus

    def __str__(self):
        return f"({self.u}, {self.v})"


def mumford_validate(u, v, curve):
    return MumfordRep(u, v, curve)


def zero_rep(curve):
    return MumfordRep(_ONE, _ZERO, curve)


def negate(a):
    """Class of iota^* d: (u, -v)."""
    return MumfordRep(a.u, -a.v, a.curve)


def _same_curve(a, b):
    if a.curve != b.curve:
        raise CurveMismatch("divisors live on different curves")


def _inv_mod(a, m):
    g, s, _ = uxgcd(a % m, m)
    if g.deg() != 0:
        raise LiftObstruction(f"{a} is not invertible modulo {m}")
    return s % m


def _lift_sqrt(f, x0, y0, e):
    """v with v(x0) = y0 and v^2 = f mod (x - x0)^e; needs y0 != 0."""
    m = (UPoly.x() - x0) ** e
    v = UPoly.constant(y0)
    prec = 1
    half = Fraction(1, 2)
    while prec < e:
        prec *= 2
        v = ((v + (f % m) * _inv_mod(v, m)) * half) % m
    if (v * v - f) % m:
        raise LiftObstruction("Newton lift did not converge")
    return v


def mumford_from_points(d):
    """Mumford pair of a semi-reduced divisor given by explicit points."""
    if not is_semi_reduced(d):
        raise NotSemiReduced("divisor is not semi-reduced")
    curve = d.curve
    f = curve.f
    V, M = _ZERO, _ONE
    for P, e in sorted(d.terms.items(), key=lambda pe: str(pe[0])):
        m = (UPoly.x() - P.x) ** e
        if P.y.is_zero():
            if e != 1:
                raise LiftObstruction("Weierstrass point with multiplicity > 1")
            vi = _ZERO
        else:
            vi = _lift_sqrt(f, P.x, P.y, e)
        # CRT step: V + M * ((vi - V) / M mod m)
        V = V + M * (((vi - V) * _inv_mod(M, m)) % m)
        M = M * m
    return MumfordRep(M, V % M, curve)


def cantor_compose(a, b):
    """Semi-reduced pair for d_a + d_b with conjugate pairs removed."""
    _same_curve(a, b)
    f = a.curve.f
    u1, v1, u2, v2 = a.u, a.v, b.u, b.v
    d0, e1, e2 = uxgcd(u1, u2)
    d, c1, c2 = uxgcd(d0, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2).divexact(d * d)
    v = (s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)).divexact(d) % u
    return MumfordRep(u, v, a.curve)


def cantor_reduce(a):
    """Unique h-reduced representative (deg u <= genus)."""
    g = a.curve.genus
    f = a.curve.f
    u, v = a.u, a.v
    while u.deg() > g:
        u = (f - v * v).divexact(u).monic()
        v = (-v) % u
    return MumfordRep(u, v % u, a.curve)


def _y_minus(v):
    return BiPoly.y() - v.to_bipoly()


def gb_add(a, b, cancel=None):
    """Add through the reduced lex basis of the product-type ideal.

    Returns (sum, u_o) where u_o collects the cancelled conjugate pairs.
    """
    _same_curve(a, b)
    f = a.curve.f
    u1, u2 = a.u.to_bipoly(), b.u.to_bipoly()
    w1, w2 = _y_minus(a.v), _y_minus(b.v)
    curve_eq = BiPoly.y() ** 2 - f.to_bipoly()
    gens = [u1 * u2, u1 * w2, u2 * w1, w1 * w2, curve_eq]
    gb = buchberger(gens, LEX1, cancel=cancel)
    if gb.is_unit():
        return zero_rep(a.curve), _ONE
    pure = [g for g in gb if g.deg_y() == 0]
    lin = [g for g in gb if g.deg_y() == 1]
    quad = [g for g in gb if g.deg_y() == 2]
    if len(pure) != 1 or len(lin) > 1 or len(quad) > 1 or len(gb) != 1 + len(lin) + len(quad):
        raise ExtractionShapeError(f"unexpected basis shape: {gb.to_strs()}")
    g1 = pure[0].as_upoly()
    if not lin:
        # everything cancelled: the basis is {u_o, y^2 - f_o}
        return zero_rep(a.curve), g1.monic()
    slices = lin[0].y_slices()
    u_o = slices[1]
    if not u_o.is_monic():
        raise ExtractionShapeError("y-coefficient of the linear element is not monic")
    u3 = g1.divexact(u_o)
    v3 = (-slices[0]).divexact(u_o) % u3
    return MumfordRep(u3, v3, a.curve), u_o


# ---------------------------------------------------------------------------
# support recovery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeDivisorList:
    entries: tuple  # (p, v mod p, multiplicity)

    def product(self):
        acc = _ONE
        for p, _, e in self.entries:
            acc = acc * p ** e
        return acc

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def squarefree_factorization(u):
    """Yun's algorithm; returns [(factor, multiplicity)] with monic factors."""
    out = []
    if u.deg() <= 0:
        return out
    u = u.monic()
    du = u.derivative()
    a = ugcd(u, du)
    b = u.divexact(a)
    c = du.divexact(a)
    d = c - b.derivative()
    i = 1
    while b.deg() > 0:
        a = ugcd(b, d)
        if a.deg() > 0:
            out.append((a, i))
        b = b.divexact(a)
        c = d.divexact(a)
        d = c - b.derivative()
        i += 1
    return out


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
    return small + large[::-1]


def _rational_roots(p):
    """Rational roots of a polynomial with constant rational coefficients."""
    cs = [c.constant_value() for c in p.coeffs]
    den = 1
    for c in cs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in cs]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return roots
    for q in _divisors(ints[-1]):
        for pn in _divisors(ints[0]):
            for r in (Fraction(pn, q), Fraction(-pn, q)):
                if r in roots:
                    continue
                acc = 0
                for c in reversed(ints):
                    acc = acc * r + c
                if acc == 0:
                    roots.append(r)
    return roots


def _split_linear(p):
    """Peel off linear factors x - r for the roots we can find."""
    if all(c.is_constant() for c in p.coeffs):
        roots = _rational_roots(p)
    else:
        roots = [Fraction(0)] if p.coeff(0).is_zero() else []
    out = []
    for r in roots:
        lin = UPoly.x() - as_field(r)
        if (p % lin).is_zero():
            out.append(lin)
            p = p.divexact(lin)
    if p.deg() > 0:
        out.append(p)
    return out


def divisor_support(a):
    """Factor u into (factor, v mod factor, multiplicity) entries.

    Square-free parts are split into linear factors wherever a rational root
    is found; anything left stays whole.
    """
    entries = []
    for part, e in squarefree_factorization(a.u):
        for p in _split_linear(part):
            entries.append((p, a.v % p, e))
    entries.sort(key=lambda t: (t[0].deg(), str(t[0])))
    return PrimeDivisorList(tuple(entries))
