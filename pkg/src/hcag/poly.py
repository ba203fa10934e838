"""Polynomials in x and y over the coefficient field, and the two term orders.

A monomial y^m x^n is the tuple ``Monomial(m, n)``.  Two orders are
supported:

* ``LEX1``: pure lex with y > x, compare m first, then n.
* ``weighted2(g)``: compare wdeg = (2g+1)m + 2n first; on a tie the monomial
  with the *smaller* x-exponent is larger.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .coeff import (FieldElem, ParamPoly, _gcd_dicts, as_field, format_monomial, format_terms,
                    param_gcd)
from .errors import DivisionByZero, ZeroDivisorPolynomial, ZeroPolynomial


class Monomial(NamedTuple):
    m: int  # exponent of y
    n: int  # exponent of x

    def divides(self, other):
        return self.m <= other.m and self.n <= other.n

    def __mul__(self, other):
        return Monomial(self.m + other.m, self.n + other.n)

    def quotient(self, other):
        return Monomial(self.m - other.m, self.n - other.n)

    def lcm(self, other):
        return Monomial(max(self.m, other.m), max(self.n, other.n))


ONE_MONO = Monomial(0, 0)


def wdeg(mono, genus):
    """Weighted degree (2g+1)m + 2n, the pole order at infinity of y^m x^n."""
    if genus < 1:
        raise ValueError("genus must be positive")
    return (2 * genus + 1) * mono[0] + 2 * mono[1]


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "lex1"
    genus: int = 1

    def __post_init__(self):
        if self.kind not in ("lex1", "w2"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "w2" and self.genus < 1:
            raise ValueError("weighted order needs genus >= 1")

    def key(self, mono):
        """Sort key: larger key means larger monomial."""
        if self.kind == "lex1":
            return (mono[0], mono[1])
        return ((2 * self.genus + 1) * mono[0] + 2 * mono[1], -mono[1])

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        return "lex1" if self.kind == "lex1" else f"w2(g={self.genus})"


LEX1 = MonomialOrder("lex1", 1)


def weighted2(genus):
    return MonomialOrder("w2", genus)


def order_compare(order, a, b):
    """-1, 0 or 1 as a <, =, > b under ``order``."""
    return order.compare(Monomial(*a), Monomial(*b))


# ---------------------------------------------------------------------------
# univariate polynomials in x
# ---------------------------------------------------------------------------

_F0 = FieldElem(0)
_F1 = FieldElem(1)


class UPoly:
    """Dense univariate polynomial in x, coefficients low-to-high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _make(cls, cs):
        cs = list(cs)
        while cs and cs[-1].is_zero():
            cs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def x(cls):
        return cls._make([_F0, _F1])

    @classmethod
    def constant(cls, c):
        return cls._make([as_field(c)])

    @classmethod
    def monomial(cls, n, c=1):
        return cls._make([_F0] * n + [as_field(c)])

    def deg(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _F0

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def monic(self):
        if not self.coeffs:
            return self
        c = self.coeffs[-1]
        if c.is_one():
            return self
        ci = c.inv()
        return UPoly._make([a * ci for a in self.coeffs[:-1]] + [_F1])

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(o):
        if isinstance(o, UPoly):
            return o
        if isinstance(o, (int, Fraction, FieldElem, ParamPoly)):
            return UPoly._make([as_field(o)])
        return None

    def __add__(self, other):
        o = UPoly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UPoly._make([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly._make([-c for c in self.coeffs])

    def __sub__(self, other):
        o = UPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = UPoly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UPoly._make([])
        if len(b) == 1:
            c = b[0]
            return UPoly._make([x * c for x in a])
        out = [_F0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return UPoly._make(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = UPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        o = UPoly._coerce(other)
        if o is None or not o.coeffs:
            raise DivisionByZero("division by the zero polynomial")
        r = list(self.coeffs)
        db = o.deg()
        inv_lc = o.coeffs[-1].inv()
        q = [_F0] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            c = r[-1] * inv_lc
            shift = len(r) - 1 - db
            q[shift] = c
            for i, b in enumerate(o.coeffs[:-1]):
                if not b.is_zero():
                    r[i + shift] = r[i + shift] - c * b
            r.pop()
            while r and r[-1].is_zero():
                r.pop()
        return UPoly._make(q), UPoly._make(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other):
        q, r = divmod(self, other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def derivative(self):
        return UPoly._make([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, a):
        a = as_field(a)
        acc = _F0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def compose(self, other):
        acc = UPoly._make([])
        for c in reversed(self.coeffs):
            acc = acc * other + UPoly._make([c])
        return acc

    def subs_param(self, name, value):
        return UPoly._make([c.subs(name, value) for c in self.coeffs])

    def __eq__(self, other):
        o = UPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_bipoly(self, y_power=0):
        return BiPoly._make({Monomial(y_power, n): c for n, c in enumerate(self.coeffs)
                             if not c.is_zero()})

    def __repr__(self):
        return f"UPoly({self})"

    def __str__(self):
        return self.to_bipoly().to_str(LEX1)


def ugcd(a, b):
    """Monic gcd over the coefficient field (0 if both are zero)."""
    if a and b and not all(c.is_constant() for c in a.coeffs + b.coeffs):
        return _param_ugcd(a, b)
    while b:
        a, b = b, a % b
    return a.monic()


def _specialize(p, point):
    cs = []
    for c in p.coeffs:
        for name, val in point.items():
            c = c.subs(name, val)
        cs.append(c)
    return UPoly._make(cs)


def coprime(a, b, tries=4):
    """True iff gcd(a, b) is a unit over the coefficient field.

    With parameters present, a few integer specializations are tried first:
    if the leading coefficients survive and the specialized gcd is 1, the
    generic gcd is 1 as well.  Otherwise fall back to the exact gcd.
    """
    if not a or not b:
        return (a or b).deg() == 0 if (a or b) else False
    names = []
    for c in a.coeffs + b.coeffs:
        for v in c.used_vars():
            if v not in names:
                names.append(v)
    for k in range(tries if names else 0):
        point = {v: 3 + 2 * k + 5 * i for i, v in enumerate(names)}
        try:
            sa, sb = _specialize(a, point), _specialize(b, point)
        except ZeroDivisionError:
            continue
        if sa.deg() != a.deg() or sb.deg() != b.deg():
            continue
        if ugcd(sa, sb).deg() == 0:
            return True
    return ugcd(a, b).deg() == 0


def _clear_dens(p, vars):
    """Integral multiple of p as a dict over (x,) + vars."""
    L = ParamPoly.constant(1, vars)
    for c in p.coeffs:
        den = c.den.with_vars(vars)
        L = (L * den).divexact(param_gcd(L, den))
    out = {}
    for n, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        q = c.num.with_vars(vars) * L.divexact(c.den.with_vars(vars))
        for e, v in q.terms.items():
            out[(n,) + e] = v
    return out


def _param_ugcd(a, b):
    # Euclid over Q(params) swells rational-function coefficients; a
    # primitive PRS over Q[x, params] with x as main variable stays small.
    vars = []
    for c in a.coeffs + b.coeffs:
        for v in c.vars:
            if v not in vars:
                vars.append(v)
    vars = tuple(vars)
    g = _gcd_dicts(_clear_dens(a, vars), _clear_dens(b, vars), len(vars) + 1)
    slices = {}
    for e, v in g.items():
        slices.setdefault(e[0], {})[e[1:]] = v
    deg = max(slices)
    cs = [FieldElem.from_poly(ParamPoly._make(slices.get(i, {}), vars)) for i in range(deg + 1)]
    return UPoly._make(cs).monic()


def uxgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g and g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = UPoly.constant(1), UPoly._make([])
    t0, t1 = UPoly._make([]), UPoly.constant(1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    c = r0.lc().inv()
    return r0 * c, s0 * c, t0 * c


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------

class BiPoly:
    """Sparse polynomial in (x, y) with FieldElem coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            mono = Monomial(*mono)
            if mono.m < 0 or mono.n < 0:
                raise ValueError("negative exponent")
            c = as_field(c)
            if not c.is_zero():
                clean[mono] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def x(cls):
        return cls._make({Monomial(0, 1): _F1})

    @classmethod
    def y(cls):
        return cls._make({Monomial(1, 0): _F1})

    @classmethod
    def constant(cls, c):
        c = as_field(c)
        return cls._make({ONE_MONO: c} if not c.is_zero() else {})

    @classmethod
    def from_rem(cls, b0, b1):
        return b0.to_bipoly() + b1.to_bipoly(1)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def deg_y(self):
        return max((m.m for m in self.terms), default=-1)

    def deg_x(self):
        return max((m.n for m in self.terms), default=-1)

    def coefficient(self, m, n):
        return self.terms.get(Monomial(m, n), _F0)

    def is_constant(self):
        return not self.terms or set(self.terms) == {ONE_MONO}

    def y_slices(self):
        """Coefficients of y^0, y^1, ... as UPolys in x."""
        d = self.deg_y()
        rows = [dict() for _ in range(d + 1)]
        for mono, c in self.terms.items():
            rows[mono.m][mono.n] = c
        out = []
        for row in rows:
            deg = max(row, default=-1)
            out.append(UPoly._make([row.get(i, _F0) for i in range(deg + 1)]))
        return out

    def as_upoly(self):
        if self.deg_y() > 0:
            raise ValueError("polynomial depends on y")
        return self.y_slices()[0] if self.terms else UPoly._make([])

    def leading(self, order):
        """(LC, LM) under ``order``."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        mono = max(self.terms, key=order.key)
        return self.terms[mono], mono

    def lm(self, order):
        return self.leading(order)[1]

    def monic(self, order):
        c, _ = self.leading(order)
        if c.is_one():
            return self
        ci = c.inv()
        return BiPoly._make({m: v * ci for m, v in self.terms.items()})

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(o):
        if isinstance(o, BiPoly):
            return o
        if isinstance(o, UPoly):
            return o.to_bipoly()
        try:
            return BiPoly.constant(o)
        except TypeError:
            return None

    def __add__(self, other):
        o = BiPoly._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[m]
                else:
                    out[m] = v
        return BiPoly._make(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._make({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = BiPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def mul_term(self, c, mono):
        if c.is_zero():
            return BiPoly._make({})
        return BiPoly._make({m * mono: v * c for m, v in self.terms.items()})

    def scale(self, c):
        c = as_field(c)
        if c.is_zero():
            return BiPoly._make({})
        return BiPoly._make({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        o = BiPoly._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for mb, cb in o.terms.items():
            for ma, ca in self.terms.items():
                k = ma * mb
                v = out.get(k)
                out[k] = ca * cb if v is None else v + ca * cb
        return BiPoly._make({m: c for m, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k):
        result = BiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def subs_param(self, name, value):
        out = {}
        for m, c in self.terms.items():
            c2 = c.subs(name, value)
            if not c2.is_zero():
                out[m] = c2
        return BiPoly._make(out)

    def __eq__(self, other):
        o = BiPoly._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        return self.to_str(LEX1)

    def to_str(self, order=LEX1):
        """Canonical text: terms descending under ``order``."""
        items = []
        for mono in sorted(self.terms, key=order.key, reverse=True):
            items.append(_format_term(self.terms[mono], mono))
        if not items:
            return "0"
        out = items[0][1] if not items[0][0] else "-" + items[0][1]
        for neg, body in items[1:]:
            out += (" - " if neg else " + ") + body
        return out


def _mono_str(mono):
    parts = []
    if mono.n:
        parts.append("x" if mono.n == 1 else f"x^{mono.n}")
    if mono.m:
        parts.append("y" if mono.m == 1 else f"y^{mono.m}")
    return "*".join(parts)


def _format_term(c, mono):
    """(negative?, body) for coefficient c times mono."""
    ms = _mono_str(mono)
    if c.is_polynomial() and len(c.num.terms) == 1:
        (e, q), = c.num.terms.items()
        neg = q < 0
        pm = format_monomial(c.num.vars, e)
        inner = format_terms([(abs(q), pm)])
        if not ms:
            return neg, inner
        if inner == "1":
            return neg, ms
        return neg, f"{inner}*{ms}"
    body = f"({c})"
    return False, (f"{body}*{ms}" if ms else body)


# ---------------------------------------------------------------------------
# orders, division, normal forms
# ---------------------------------------------------------------------------

def leading_data(p, order):
    return p.leading(order)


def divide(g, divisors, order):
    """Multivariate division: returns (quotients, remainder).

    g = sum(q_i * f_i) + r, no term of r divisible by any LM(f_i), and
    multideg(q_i f_i) <= multideg(g).
    """
    leads = []
    for f in divisors:
        if f.is_zero():
            raise ZeroDivisorPolynomial("cannot divide by the zero polynomial")
        c, m = f.leading(order)
        leads.append((c.inv(), m))
    quotients = [dict() for _ in divisors]
    rem = {}
    p = dict(g.terms)
    key = order.key
    while p:
        mono = max(p, key=key)
        c = p[mono]
        for i, (ci, lm) in enumerate(leads):
            if lm.divides(mono):
                q = mono.quotient(lm)
                qc = c * ci
                quotients[i][q] = quotients[i].get(q, _F0) + qc
                _sub_mul_into(p, qc, q, divisors[i].terms)
                break
        else:
            rem[mono] = c
            del p[mono]
    qs = [BiPoly._make({m: c for m, c in q.items() if not c.is_zero()}) for q in quotients]
    return qs, BiPoly._make(rem)


def _sub_mul_into(p, c, mono, terms):
    """p -= c * mono * terms, in place on a term dict."""
    for m, v in terms.items():
        k = Monomial(m.m + mono.m, m.n + mono.n)
        cur = p.get(k)
        if cur is None:
            p[k] = -(c * v)
        else:
            cur = cur - c * v
            if cur.is_zero():
                del p[k]
            else:
                p[k] = cur


@dataclass(frozen=True)
class RemElement:
    """b0(x) + b1(x)*y, a normal form modulo y^2 - f."""

    b0: UPoly
    b1: UPoly

    def is_zero(self):
        return self.b0.is_zero() and self.b1.is_zero()

    def to_bipoly(self):
        return BiPoly.from_rem(self.b0, self.b1)

    def scale(self, c):
        return RemElement(self.b0 * c, self.b1 * c)

    def norm(self, f):
        """b * iota(b) = b0^2 - b1^2 f."""
        return self.b0 * self.b0 - self.b1 * self.b1 * f

    def lead_wdeg(self, genus):
        """max(2 deg b0, 2 deg b1 + 2g + 1), the wdeg of LM under w2."""
        if self.is_zero():
            raise ZeroPolynomial("zero element")
        cands = []
        if self.b0:
            cands.append(2 * self.b0.deg())
        if self.b1:
            cands.append(2 * self.b1.deg() + 2 * genus + 1)
        return max(cands)

    def __str__(self):
        return self.to_bipoly().to_str(LEX1)


def rem_normal_form(g, f):
    """Reduce g modulo y^2 - f by substituting y^2 -> f."""
    if isinstance(g, UPoly):
        return RemElement(g, UPoly())
    b0 = {}
    b1 = {}
    fpow = [UPoly.constant(1)]
    for mono, c in g.terms.items():
        k = mono.m // 2
        while len(fpow) <= k:
            fpow.append(fpow[-1] * f)
        target = b1 if mono.m % 2 else b0
        for i, a in enumerate(fpow[k].coeffs):
            if a.is_zero():
                continue
            j = i + mono.n
            target[j] = target.get(j, _F0) + a * c
    def _up(d):
        deg = max(d, default=-1)
        return UPoly._make([d.get(i, _F0) for i in range(deg + 1)])
    return RemElement(_up(b0), _up(b1))
