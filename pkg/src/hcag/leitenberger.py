"""Leitenberger representations (u, b) from weighted-order Groebner bases."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .coeff import FieldElem, ParamPoly, param_gcd
from .errors import ClubViolated, EmptyBasis
from .groebner import GroebnerBasis, buchberger, ideal_member
from .poly import (LEX1, BiPoly, RemElement, UPoly, coprime, rem_normal_form, ugcd,
                   weighted2)


@dataclass(frozen=True)
class IdealPresentation:
    """Generators of the ideal of k*d together with y^2 - f."""

    generators: tuple
    curve: object
    source: str
    u: UPoly  # Mumford u of the divisor the ideal cuts out
    degree: int


def _curve_poly(curve):
    return BiPoly.y() ** 2 - curve.f.to_bipoly()


def ideal_power_generators(rep, k):
    """{u^k, u^(k-1)(y - v), ..., (y - v)^k, y^2 - f} for the divisor k*d."""
    if k < 1:
        raise ValueError("k must be positive")
    u = rep.u.to_bipoly()
    w = BiPoly.y() - rep.v.to_bipoly()
    upow = [BiPoly.constant(1)]
    wpow = [BiPoly.constant(1)]
    for _ in range(k):
        upow.append(upow[-1] * u)
        wpow.append(wpow[-1] * w)
    gens = [upow[k - i] * wpow[i] for i in range(k + 1)]
    gens.append(_curve_poly(rep.curve))
    return IdealPresentation(tuple(gens), rep.curve, f"{k}*{rep}", rep.u ** k, k * rep.u.deg())


def primitive_scale(p, order):
    """Scalar c making c*p integral and primitive over Z[params] with a
    positive leading coefficient (LC under ``order``, then graded lex)."""
    coeffs = list(p.terms.values())
    if not coeffs:
        return FieldElem(1)
    vars = coeffs[0].vars
    L = ParamPoly.constant(1, vars)
    for c in coeffs:
        L = (L * c.den).divexact(param_gcd(L, c.den))
    nums = {m: c.num * L.divexact(c.den) for m, c in p.terms.items()}
    G = None
    for q in nums.values():
        G = q if G is None else param_gcd(G, q)
    G = G.normalized()
    nums = {m: q.divexact(G) for m, q in nums.items()}
    den, num = 1, 0
    for q in nums.values():
        for v in q.terms.values():
            den = lcm(den, v.denominator)
            num = gcd(num, v.numerator)
    content = Fraction(num, den)
    lead = nums[p.lm(order)]
    if lead.leading()[1] < 0:
        content = -content
    return FieldElem(L) / FieldElem(G) / FieldElem(content)


@dataclass(frozen=True)
class LeitenbergerRep:
    """(u, b) with b normalized to LC_2 = 1; ``scale * b`` is the primitive
    integral form in which such elements are usually written."""

    u: UPoly
    b: RemElement
    scale: FieldElem
    genus: int
    basis: GroebnerBasis
    degree: int

    @property
    def primitive(self):
        return self.b.scale(self.scale)

    def lead_wdeg(self):
        return self.b.lead_wdeg(self.genus)


def extract_b(pres, cancel=None):
    """Minimal element of the weighted reduced basis that is nonzero on the curve."""
    g = pres.curve.genus
    order = weighted2(g)
    gb = buchberger(pres.generators, order, cancel=cancel)
    f = pres.curve.f
    cands = []
    for h in gb:
        r = rem_normal_form(h, f)
        if not r.is_zero():
            cands.append(r.to_bipoly())
    if not cands:
        raise EmptyBasis("no basis element survives modulo y^2 - f")
    best = min(cands, key=lambda h: order.key(h.lm(order)))
    best = best.monic(order)
    slices = best.y_slices()
    b = RemElement(slices[0] if slices else UPoly(), slices[1] if len(slices) > 1 else UPoly())
    scale = primitive_scale(best, order)
    return LeitenbergerRep(pres.u, b, scale, g, gb, pres.degree)


def club_check(rep):
    """True iff gcd(b0, b1) is a unit."""
    b = rep.b if isinstance(rep, LeitenbergerRep) else rep
    return coprime(b.b0, b.b1)


def wdeg_identity_check(d_deg, reduced_deg, b, genus):
    return d_deg + reduced_deg == b.lead_wdeg(genus)


def verify_prop_jl(rep, mumford):
    """<u, b, y^2 - f> equals <u, y - v, y^2 - f>."""
    if not club_check(rep):
        raise ClubViolated(f"gcd(b0, b1) = {ugcd(rep.b.b0, rep.b.b1)} is not a unit")
    curve_eq = _curve_poly(mumford.curve)
    lhs = buchberger([rep.u.to_bipoly(), rep.b.to_bipoly(), curve_eq], LEX1)
    rhs = buchberger([mumford.u.to_bipoly(), BiPoly.y() - mumford.v.to_bipoly(), curve_eq], LEX1)
    return lhs.generators == rhs.generators


def in_ideal(rep):
    """Membership of b in the ideal it was extracted from."""
    return ideal_member(rep.b.to_bipoly(), rep.basis)
