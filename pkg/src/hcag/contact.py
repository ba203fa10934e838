"""Genus-1 applications: torsion, weak contact curves and quasi-toric
relations with exact certificate checks."""
from __future__ import annotations

from dataclasses import dataclass

from .coeff import FieldElem, ParamPoly, as_field
from .errors import (CertificateFailure, ClubViolated, GenusUnsupported, NonPolynomialCoefficient,
                     NotTorsion, PreconditionViolated)
from .leitenberger import club_check, extract_b, ideal_power_generators
from .mumford import MumfordRep, cantor_compose, cantor_reduce, zero_rep
from .poly import RemElement, UPoly, coprime

DEFAULT_MAX_TORSION = 12


def _need_genus1(rep):
    if rep.curve.genus != 1:
        raise GenusUnsupported(f"genus {rep.curve.genus}: only elliptic curves are supported here")


def _add(a, b):
    return cantor_reduce(cantor_compose(a, b))


def scalar_mul(rep, k):
    """[k] applied to a reduced class, by double-and-add."""
    _need_genus1(rep)
    if k < 0:
        raise ValueError("k must be nonnegative")
    acc = zero_rep(rep.curve)
    base = cantor_reduce(rep)
    while k:
        if k & 1:
            acc = _add(acc, base)
        k >>= 1
        if k:
            base = _add(base, base)
    return acc


def torsion_order(rep, max_order=DEFAULT_MAX_TORSION):
    """Smallest n <= max_order with [n]T = 0, else None."""
    _need_genus1(rep)
    base = cantor_reduce(rep)
    acc = base
    for n in range(1, max_order + 1):
        if acc.is_zero():
            return n
        acc = _add(acc, base)
    return None


def chord_divisor(curve, P, slope):
    """Residual pair cut by the line through P with the given slope.

    The line is y = slope*(x - x_P) + y_P; the pair is (u, v) with
    f - v^2 = (x - x_P) u.
    """
    slope = as_field(slope)
    v = UPoly([-slope * P.x + P.y, slope])
    lin = UPoly.x() - P.x
    u = (curve.f - v * v).divexact(lin).monic()
    return MumfordRep(u, v % u, curve)


@dataclass(frozen=True)
class ContactCertificate:
    """b0^2 - b1^2 f = r u^n with b in primitive integral form."""

    n: int
    b: RemElement
    u: UPoly
    r: FieldElem
    curve: object

    def __post_init__(self):
        if self.r.is_zero():
            raise CertificateFailure("certificate scalar is zero")
        if self.b.norm(self.curve.f) != self.u ** self.n * self.r:
            raise CertificateFailure("b0^2 - b1^2 f != r u^n")

    def verify(self):
        return self.b.norm(self.curve.f) == self.u ** self.n * self.r


def _certificate(rep, n, cancel):
    lrep = extract_b(ideal_power_generators(rep, n), cancel=cancel)
    b = lrep.primitive
    un = rep.u ** n
    q, rem = divmod(b.norm(rep.curve.f), un)
    if rem or q.deg() != 0:
        raise CertificateFailure(f"b0^2 - b1^2 f is not a scalar multiple of u^{n}")
    if lrep.lead_wdeg() != n * rep.u.deg():
        raise CertificateFailure("weighted degree of b does not match n * deg u")
    return lrep, ContactCertificate(n, b, rep.u, q.coeff(0), rep.curve)


def weak_contact(rep, n, cancel=None):
    """Certificate for the weak n-contact curve b_{nT} of a torsion point."""
    _need_genus1(rep)
    if rep.u.deg() != 1 or torsion_order(rep, n) != n:
        raise NotTorsion(f"{rep} is not a point of order {n}")
    return _certificate(rep, n, cancel)[1]


def quasitoric_certificate(d_rep, n, cancel=None):
    """Certificate b0^2 - b1^2 f = r u^n for n*d where d reduces to a point of order n."""
    _need_genus1(d_rep)
    T = cantor_reduce(d_rep)
    if T.u.deg() != 1:
        raise PreconditionViolated("(i): d does not reduce to a single point")
    if torsion_order(T, n) != n:
        raise PreconditionViolated(f"(i): the reduced point does not have order {n}")
    kT = T
    for k in range(1, n):
        if not coprime(d_rep.u, kT.u):
            raise PreconditionViolated(f"(ii): [{k}]T lies in the support of d")
        kT = _add(kT, T)
    lrep, cert = _certificate(d_rep, n, cancel)
    if not club_check(lrep):
        raise ClubViolated("gcd(b0, b1) is not a unit")
    return cert


# ---------------------------------------------------------------------------
# homogenization
# ---------------------------------------------------------------------------

HOMOG_VARS = ("T", "X", "Z")


def _as_bivariate(p, param, extra):
    """UPoly in x over Q[params] -> {(deg_t, deg_x, other exps): Fraction}."""
    out = {}
    for n, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        if not c.den.is_constant():
            raise NonPolynomialCoefficient(f"coefficient {c} has a denominator")
        for e, a in c.num.terms.items():
            named = dict(zip(c.num.vars, e))
            key = (named.get(param, 0), n, tuple(named.get(v, 0) for v in extra))
            out[key] = out.get(key, 0) + a
    return {k: v for k, v in out.items() if v}


def _param_names(*polys):
    names = []
    for p in polys:
        for c in p.coeffs:
            for v in c.used_vars():
                if v not in names:
                    names.append(v)
    return names


def _tdeg(d):
    return max(a + n for a, n, _ in d) if d else 0


def _homog(d, degree, extra):
    vars = HOMOG_VARS + tuple(extra)
    terms = {}
    for (a, n, rest), c in d.items():
        terms[(a, n, degree - a - n) + rest] = c
    return ParamPoly._make(terms, vars)


def _zpow(k, extra):
    vars = HOMOG_VARS + tuple(extra)
    return ParamPoly._make({(0, 0, k) + (0,) * len(extra): 1}, vars)


def _degree3(p):
    """Set of (T, X, Z)-degrees of the terms of p."""
    return {sum(e[:3]) for e in p.terms}


@dataclass(frozen=True)
class QuasiToricRelation:
    """h1^2 F1 + h2^n F2 + h3^2 F3 = 0 among homogeneous forms in (T, X, Z)."""

    p: int
    q: int
    r_exp: int
    F1: ParamPoly
    F2: ParamPoly
    F3: ParamPoly
    h1: ParamPoly
    h2: ParamPoly
    h3: ParamPoly
    degree: int

    def __post_init__(self):
        parts = (self.F1, self.F2, self.F3, self.h1, self.h2, self.h3)
        if any(x.is_zero() for x in parts):
            raise CertificateFailure("a member of the sextuple is zero")
        for x in parts:
            if len(_degree3(x)) != 1:
                raise CertificateFailure(f"{x} is not homogeneous")
        for s in self.summands():
            if _degree3(s) != {self.degree}:
                raise CertificateFailure("summands have different degrees")
        if not self.residual().is_zero():
            raise CertificateFailure("quasi-toric identity fails")

    def summands(self):
        return (self.h1 ** self.p * self.F1, self.h2 ** self.q * self.F2,
                self.h3 ** self.r_exp * self.F3)

    def residual(self):
        a, b, c = self.summands()
        return a + b + c

    def verify(self):
        return self.residual().is_zero()


def homogenize_relation(cert, param="t"):
    """Homogenize b0^2 - b1^2 f - r u^n = 0 with param -> T/Z, x -> X/Z."""
    f = cert.curve.f
    r = UPoly.constant(cert.r)
    extra = [v for v in _param_names(cert.b.b0, cert.b.b1, f, cert.u, r) if v != param]
    b0 = _as_bivariate(cert.b.b0, param, extra)
    b1 = _as_bivariate(cert.b.b1, param, extra)
    fd = _as_bivariate(f, param, extra)
    ud = _as_bivariate(cert.u, param, extra)
    rd = _as_bivariate(r, param, extra)
    n = cert.n
    d0, d1, df, du, dr = (_tdeg(x) for x in (b0, b1, fd, ud, rd))
    D = max(2 * d0 if b0 else 0, 2 * d1 + df if b1 else 0, n * du + dr)
    h1 = _homog(b0, d0, extra) if b0 else None
    h3 = _homog(b1, d1, extra) if b1 else None
    h2 = _homog(ud, du, extra)
    F1 = _zpow(D - 2 * d0, extra)
    F3 = -(_zpow(D - 2 * d1 - df, extra) * _homog(fd, df, extra))
    F2 = -(_zpow(D - n * du - dr, extra) * _homog(rd, dr, extra))
    if h1 is None or h3 is None:
        raise CertificateFailure("b0 or b1 vanishes; no quasi-toric sextuple")
    return QuasiToricRelation(2, n, 2, F1, F2, F3, h1, h2, h3, D)
