"""Hyperelliptic curves y^2 = f(x), affine points and point divisors."""
from __future__ import annotations

from dataclasses import dataclass, field

from .coeff import FieldElem, as_field
from .errors import DegreeMismatch, NotEffective, NotMonic, NotOnCurve, NotSquareFree
from .poly import UPoly, ugcd


@dataclass(frozen=True)
class HyperCurve:
    """y^2 = f(x) with f monic, square-free, of degree 2g + 1."""

    genus: int
    f: UPoly

    def __post_init__(self):
        if self.genus < 1:
            raise DegreeMismatch("genus must be positive")
        if self.f.deg() != 2 * self.genus + 1:
            raise DegreeMismatch(
                f"deg f = {self.f.deg()} but genus {self.genus} needs {2 * self.genus + 1}")
        if not self.f.is_monic():
            raise NotMonic("f must be monic")
        if ugcd(self.f, self.f.derivative()).deg() > 0:
            raise NotSquareFree("f has a repeated root")

    @property
    def params(self):
        vs = []
        for c in self.f.coeffs:
            for v in c.vars:
                if v not in vs:
                    vs.append(v)
        return tuple(vs)

    def contains(self, x, y):
        x, y = as_field(x), as_field(y)
        return y * y == self.f(x)

    def point(self, x, y):
        x, y = as_field(x), as_field(y)
        if y * y != self.f(x):
            raise NotOnCurve(f"({x}, {y}) is not on y^2 = {self.f}")
        return AffinePoint(x, y)

    def __str__(self):
        return f"y^2 = {self.f}"


def curve_new(genus, f):
    return HyperCurve(genus, f)


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElem
    y: FieldElem

    def is_weierstrass(self):
        return self.y.is_zero()

    def __str__(self):
        return f"({self.x}, {self.y})"


def involution(P):
    """(x, y) -> (x, -y)."""
    return AffinePoint(P.x, -P.y)


@dataclass(frozen=True)
class PointDivisor:
    """Finite formal sum of affine points on one curve."""

    curve: HyperCurve
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for P, m in self.terms.items():
            if not self.curve.contains(P.x, P.y):
                raise NotOnCurve(f"{P} is not on {self.curve}")
            if m:
                clean[P] = clean.get(P, 0) + int(m)
        object.__setattr__(self, "terms", {P: m for P, m in clean.items() if m})

    @classmethod
    def of(cls, curve, *points):
        """Divisor from points, or (point, multiplicity) pairs."""
        terms = {}
        for item in points:
            P, m = (item, 1) if isinstance(item, AffinePoint) else item
            terms[P] = terms.get(P, 0) + m
        return cls(curve, terms)

    def degree(self):
        return sum(self.terms.values())

    def is_effective(self):
        return all(m > 0 for m in self.terms.values())

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for P, m in other.terms.items():
            terms[P] = terms.get(P, 0) + m
        return PointDivisor(self.curve, terms)

    def pullback_involution(self):
        return PointDivisor(self.curve, {involution(P): m for P, m in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PointDivisor) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*{P}" if m != 1 else str(P) for P, m in self.terms.items())


def semi_reduced_decompose(d):
    """Split an effective d into (d_sr, d_o) with d_o = e + iota*(e)."""
    if not d.is_effective():
        raise NotEffective("divisor has negative multiplicities")
    sr, o = {}, {}
    seen = set()
    for P, m in d.terms.items():
        if P in seen:
            continue
        Q = involution(P)
        seen.add(P)
        seen.add(Q)
        if P == Q:
            pairs, rest = divmod(m, 2)
            if pairs:
                o[P] = 2 * pairs
            if rest:
                sr[P] = 1
            continue
        mq = d.terms.get(Q, 0)
        k = min(m, mq)
        if k:
            o[P] = k
            o[Q] = k
        if m - k:
            sr[P] = m - k
        if mq - k:
            sr[Q] = mq - k
    return PointDivisor(d.curve, sr), PointDivisor(d.curve, o)


def is_semi_reduced(d):
    if not d.is_effective():
        return False
    return semi_reduced_decompose(d)[1].is_zero()
