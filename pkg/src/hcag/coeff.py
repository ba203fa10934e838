"""Exact coefficient arithmetic.

Rationals are :class:`fractions.Fraction`.  :class:`ParamPoly` is a sparse
multivariate polynomial over Q in named parameters (``t``, ``r``, ...) and
:class:`FieldElem` is a reduced fraction of two of them, i.e. an element of
Q(t1, ..., tk).  Every value is immutable and kept in a canonical form so that
structural equality coincides with mathematical equality.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import DivisionByZero

Rational = Fraction

_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dict-level helpers: polynomials as {exponent tuple: Fraction}
# ---------------------------------------------------------------------------

def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v += c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def _psub(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        if v is None:
            out[e] = -c
        else:
            v -= c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def _pscale(a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def _pmul(a, b):
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        (eb, cb), = b.items()
        return {tuple(x + y for x, y in zip(ea, eb)): ca * cb for ea, ca in a.items()}
    out = {}
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e)
            if v is None:
                out[e] = ca * cb
            else:
                v += ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
    return out


def _grlex_key(e):
    return (sum(e), e)


def _pdivexact(a, b):
    """Quotient a / b, or None when b does not divide a."""
    if not b:
        raise DivisionByZero("division by the zero polynomial")
    if not a:
        return {}
    lb = max(b, key=_grlex_key)
    cb = b[lb]
    if len(b) == 1:
        out = {}
        for e, c in a.items():
            q = tuple(x - y for x, y in zip(e, lb))
            if q and min(q) < 0:
                return None
            out[q] = c / cb
        return out
    rest = [(e, c) for e, c in b.items() if e != lb]
    r = dict(a)
    q = {}
    while r:
        lr = max(r, key=_grlex_key)
        e = tuple(x - y for x, y in zip(lr, lb))
        if e and min(e) < 0:
            return None
        c = r.pop(lr) / cb
        q[e] = c
        for eb, c2 in rest:
            k = tuple(x + y for x, y in zip(e, eb))
            v = r.get(k)
            if v is None:
                r[k] = -c * c2
            else:
                v -= c * c2
                if v:
                    r[k] = v
                else:
                    del r[k]
    return q


def _content(a):
    """Positive-or-negative rational c with a / c integral, primitive, LC > 0."""
    if not a:
        return _ONE
    den = 1
    num = 0
    for c in a.values():
        den = lcm(den, c.denominator)
        num = gcd(num, c.numerator)
    c = Fraction(num, den)
    if a[max(a, key=_grlex_key)] < 0:
        c = -c
    return c


def _normalize(a):
    c = _content(a)
    if c == 1:
        return a
    return {e: v / c for e, v in a.items()}


def _is_const(a):
    return not a or (len(a) == 1 and not any(next(iter(a))))


# -- univariate integer GCD (dense, low-to-high) ----------------------------

def _int_prim(p):
    g = 0
    for c in p:
        g = gcd(g, c)
        if g == 1:
            return p
    return [c // g for c in p] if g else p


def _int_prem(a, b):
    """Pseudo-remainder of integer lists a by b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        while a and a[-1] == 0:
            a.pop()
        a = _int_prim(a)
    return a


def _int_ugcd(a, b):
    a, b = _int_prim(a), _int_prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _int_prem(a, b)
    return a


def _to_int_dense(a, i, n):
    deg = max(e[i] for e in a)
    den = 1
    for c in a.values():
        den = lcm(den, c.denominator)
    out = [0] * (deg + 1)
    for e, c in a.items():
        out[e[i]] = int(c * den)
    return out


# -- recursive multivariate GCD --------------------------------------------

def _split(a, i):
    """View a as a polynomial in variable i: {deg: coefficient dict}."""
    out = {}
    for e, c in a.items():
        d = e[i]
        k = e[:i] + (0,) + e[i + 1:]
        out.setdefault(d, {})[k] = c
    return out


def _join(parts, i):
    out = {}
    for d, coef in parts.items():
        for e, c in coef.items():
            out[e[:i] + (d,) + e[i + 1:]] = c
    return out


def _gcd_dicts(a, b, n):
    if not a:
        return _normalize(b)
    if not b:
        return _normalize(a)
    active = [i for i in range(n)
              if any(e[i] for e in a) or any(e[i] for e in b)]
    zero = (0,) * n
    if not active:
        return {zero: _ONE}
    i = active[0]
    if len(active) == 1:
        g = _int_ugcd(_to_int_dense(a, i, n), _to_int_dense(b, i, n))
        out = {}
        for d, c in enumerate(g):
            if c:
                out[zero[:i] + (d,) + zero[i + 1:]] = Fraction(c)
        return _normalize(out)
    pa, pb = _split(a, i), _split(b, i)
    ca = _gcd_many(list(pa.values()), n)
    cb = _gcd_many(list(pb.values()), n)
    cont = _gcd_dicts(ca, cb, n)
    A = _dense_div(pa, ca)
    B = _dense_div(pb, cb)
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _dense_prem(A, B)
        A, B = B, _dense_prim(R, n)
    g = _join({d: c for d, c in enumerate(A) if c}, i)
    return _normalize(_pmul(g, cont))


def _gcd_many(polys, n):
    g = {}
    for p in polys:
        g = _gcd_dicts(g, p, n)
        if _is_const(g) and g:
            break
    return g


def _dense_div(parts, c):
    deg = max(parts)
    out = [{} for _ in range(deg + 1)]
    for d, coef in parts.items():
        out[d] = _pdivexact(coef, c)
    return out


def _dense_prem(A, B):
    A = list(A)
    db = len(B) - 1
    lb = B[-1]
    while A and len(A) - 1 >= db:
        la = A[-1]
        shift = len(A) - 1 - db
        A = [_pmul(c, lb) for c in A]
        for k, c in enumerate(B):
            A[k + shift] = _psub(A[k + shift], _pmul(la, c))
        while A and not A[-1]:
            A.pop()
    return A


def _dense_prim(A, n):
    if not A:
        return A
    c = _gcd_many([x for x in A if x], n)
    return [_pdivexact(x, c) if x else {} for x in A]


# ---------------------------------------------------------------------------
# public types
# ---------------------------------------------------------------------------

def _fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class ParamPoly:
    """Sparse polynomial over Q in the named parameters ``vars``.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    Fractions.  Polynomials over different variable tuples combine by
    embedding both into the union of their variables.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms=None, vars=()):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for variables {self.vars}")
            c = _fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _make(cls, terms, vars):
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, vars=()):
        c = _fraction(c)
        vars = tuple(vars)
        return cls._make({(0,) * len(vars): c} if c else {}, vars)

    @classmethod
    def variable(cls, name, vars=None):
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            raise ValueError(f"{name!r} not among {vars}")
        e = tuple(1 if v == name else 0 for v in vars)
        return cls._make({e: _ONE}, vars)

    # -- structure --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return _is_const(self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        if name not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def used_vars(self):
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def leading(self):
        """Leading (exponent, coefficient) under graded lex."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def with_vars(self, vars):
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = []
        for i, v in enumerate(self.vars):
            if v in vars:
                idx.append(vars.index(v))
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {v!r} is used but missing from {vars}")
            else:
                idx.append(None)
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            k = [0] * n
            for i, j in enumerate(idx):
                if j is not None:
                    k[j] = e[i]
            out[tuple(k)] = c
        return ParamPoly._make(out, vars)

    def _align(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.constant(other, self.vars)
        elif not isinstance(other, ParamPoly):
            return None
        if other.vars == self.vars:
            return self.vars, self.terms, other.terms
        vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return vars, self.with_vars(vars).terms, other.with_vars(vars).terms

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        al = self._align(other)
        if al is None:
            return NotImplemented
        vars, a, b = al
        return ParamPoly._make(_padd(a, b), vars)

    __radd__ = __add__

    def __sub__(self, other):
        al = self._align(other)
        if al is None:
            return NotImplemented
        vars, a, b = al
        return ParamPoly._make(_psub(a, b), vars)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ParamPoly._make({e: -c for e, c in self.terms.items()}, self.vars)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamPoly._make(_pscale(self.terms, Fraction(other)), self.vars)
        al = self._align(other)
        if al is None:
            return NotImplemented
        vars, a, b = al
        return ParamPoly._make(_pmul(a, b), vars)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ParamPoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divexact(self, other):
        """Exact quotient; raises ValueError when other does not divide self."""
        al = self._align(other)
        if al is None:
            raise TypeError(other)
        vars, a, b = al
        q = _pdivexact(a, b)
        if q is None:
            raise ValueError("division is not exact")
        return ParamPoly._make(q, vars)

    def divides(self, other):
        al = self._align(other)
        vars, a, b = al
        if not a:
            return not b
        return _pdivexact(b, a) is not None

    def content(self):
        """Rational c such that self / c is integral, primitive, with LC > 0."""
        return _content(self.terms)

    def normalized(self):
        return ParamPoly._make(_normalize(self.terms), self.vars)

    def subs(self, name, value):
        """Substitute a Fraction/int or ParamPoly for one variable."""
        if name not in self.vars:
            return self
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        if isinstance(value, ParamPoly):
            value = value.with_vars(rest) if set(value.vars) <= set(rest) else value
        else:
            value = ParamPoly.constant(value, rest)
        out = ParamPoly.constant(0, rest)
        powers = {}
        for e, c in self.terms.items():
            d = e[i]
            if d not in powers:
                powers[d] = value ** d
            mono = ParamPoly._make({e[:i] + e[i + 1:]: c}, rest)
            out = out + mono * powers[d]
        return out

    # -- comparison -------------------------------------------------------
    def _named(self):
        return frozenset(
            (tuple((v, k) for v, k in zip(self.vars, e) if k), c)
            for e, c in self.terms.items())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.constant(other, self.vars)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        if other.vars == self.vars:
            return self.terms == other.terms
        return self._named() == other._named()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._named())
        return self._hash

    def __repr__(self):
        return f"ParamPoly({self})"

    def __str__(self):
        return format_param_poly(self)


def param_gcd(p, q):
    """Normalized gcd (integral, primitive, positive graded-lex LC)."""
    if isinstance(p, (int, Fraction)):
        p = ParamPoly.constant(p)
    if isinstance(q, (int, Fraction)):
        q = ParamPoly.constant(q)
    vars, a, b = p._align(q)
    return ParamPoly._make(_gcd_dicts(a, b, len(vars)), vars)


# ---------------------------------------------------------------------------
# fraction field
# ---------------------------------------------------------------------------

class FieldElem:
    """Element num/den of Q(params) in canonical form.

    The denominator is integral, primitive, with positive graded-lex leading
    coefficient, and shares no factor with the numerator.  A constant
    denominator is always folded into the numerator, so polynomial values
    carry ``den == 1``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if not isinstance(num, ParamPoly):
            num = ParamPoly.constant(num)
        if not isinstance(den, ParamPoly):
            den = ParamPoly.constant(den)
        vars, a, b = num._align(den)
        a, b = _canonical(a, b, len(vars))
        self.num = ParamPoly._make(a, vars)
        self.den = ParamPoly._make(b, vars)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        x = cls.__new__(cls)
        x.num = num
        x.den = den
        x._hash = None
        return x

    @classmethod
    def param(cls, name, vars=None):
        p = ParamPoly.variable(name, vars)
        return cls._raw(p, ParamPoly.constant(1, p.vars))

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, ParamPoly.constant(1, p.vars))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_one(self):
        return self.den.is_constant() and self.num.is_constant() and self.num.constant_value() == 1

    def is_polynomial(self):
        return self.den.is_constant()

    def is_constant(self):
        return self.den.is_constant() and self.num.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return self.num.constant_value()

    def used_vars(self):
        u = set(self.num.used_vars()) | set(self.den.used_vars())
        return tuple(v for v in self.vars if v in u)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, (int, Fraction)):
            return FieldElem._raw(ParamPoly.constant(x), ParamPoly.constant(1))
        if isinstance(x, ParamPoly):
            return FieldElem.from_poly(x)
        return None

    def __add__(self, other):
        o = FieldElem._coerce(other)
        if o is None:
            return NotImplemented
        return _field_add(self, o, False)

    __radd__ = __add__

    def __sub__(self, other):
        o = FieldElem._coerce(other)
        if o is None:
            return NotImplemented
        return _field_add(self, o, True)

    def __rsub__(self, other):
        o = FieldElem._coerce(other)
        if o is None:
            return NotImplemented
        return _field_add(o, self, True)

    def __neg__(self):
        return FieldElem._raw(-self.num, self.den)

    def __mul__(self, other):
        o = FieldElem._coerce(other)
        if o is None:
            return NotImplemented
        return _field_mul(self, o)

    __rmul__ = __mul__

    def inv(self):
        if not self.num.terms:
            raise DivisionByZero("inverse of zero")
        vars, a, b = self.den._align(self.num)
        c = _content(b)
        a = _pscale(a, 1 / c)
        b = _pscale(b, 1 / c)
        if _is_const(b):
            k = next(iter(b.values()))
            return FieldElem._raw(ParamPoly._make(_pscale(a, 1 / k), vars),
                                  ParamPoly.constant(1, vars))
        return FieldElem._raw(ParamPoly._make(a, vars), ParamPoly._make(b, vars))

    def __truediv__(self, other):
        o = FieldElem._coerce(other)
        if o is None:
            return NotImplemented
        return _field_mul(self, o.inv())

    def __rtruediv__(self, other):
        o = FieldElem._coerce(other)
        if o is None:
            return NotImplemented
        return _field_mul(o, self.inv())

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("integer exponent required")
        if k < 0:
            return self.inv() ** (-k)
        return FieldElem._raw(self.num ** k, self.den ** k)

    def subs(self, name, value):
        if isinstance(value, FieldElem):
            num = _subs_field(self.num, name, value)
            den = _subs_field(self.den, name, value)
            return num / den
        return FieldElem(self.num.subs(name, value), self.den.subs(name, value))

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        o = FieldElem._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"FieldElem({self})"

    def __str__(self):
        return format_field(self)


def _subs_field(p, name, value):
    out = FieldElem(0)
    if name not in p.vars:
        return FieldElem.from_poly(p)
    i = p.vars.index(name)
    rest = p.vars[:i] + p.vars[i + 1:]
    for e, c in p.terms.items():
        mono = FieldElem.from_poly(ParamPoly._make({e[:i] + e[i + 1:]: c}, rest))
        out = out + mono * value ** e[i]
    return out


def _canonical(a, b, n):
    if not b:
        raise DivisionByZero("zero denominator")
    if not a:
        return {}, {(0,) * n: _ONE}
    if _is_const(b):
        k = next(iter(b.values()))
        return (_pscale(a, 1 / k) if k != 1 else a), {(0,) * n: _ONE}
    g = _gcd_dicts(a, b, n)
    if not _is_const(g):
        a = _pdivexact(a, g)
        b = _pdivexact(b, g)
    c = _content(b)
    if c != 1:
        a = _pscale(a, 1 / c)
        b = _pscale(b, 1 / c)
    if _is_const(b):
        return a, {(0,) * n: _ONE}
    return a, b


def _field_add(x, y, negate):
    xn, yn = x.num, y.num
    if xn.vars != yn.vars:
        vars = xn.vars + tuple(v for v in yn.vars if v not in xn.vars)
        x = FieldElem._raw(xn.with_vars(vars), x.den.with_vars(vars))
        y = FieldElem._raw(yn.with_vars(vars), y.den.with_vars(vars))
    vars = x.num.vars
    op = _psub if negate else _padd
    xd, yd = x.den.terms, y.den.terms
    if _is_const(xd) and _is_const(yd):
        out = op(x.num.terms, y.num.terms)
        return FieldElem._raw(ParamPoly._make(out, vars), x.den)
    if xd == yd:
        a, b = _canonical(op(x.num.terms, y.num.terms), xd, len(vars))
    else:
        a, b = _canonical(op(_pmul(x.num.terms, yd), _pmul(y.num.terms, xd)),
                          _pmul(xd, yd), len(vars))
    return FieldElem._raw(ParamPoly._make(a, vars), ParamPoly._make(b, vars))


def _field_mul(x, y):
    xn, yn = x.num, y.num
    if xn.vars != yn.vars:
        vars = xn.vars + tuple(v for v in yn.vars if v not in xn.vars)
        x = FieldElem._raw(xn.with_vars(vars), x.den.with_vars(vars))
        y = FieldElem._raw(yn.with_vars(vars), y.den.with_vars(vars))
    vars = x.num.vars
    n = len(vars)
    xd, yd = x.den.terms, y.den.terms
    if _is_const(xd) and _is_const(yd):
        return FieldElem._raw(ParamPoly._make(_pmul(x.num.terms, y.num.terms), vars), x.den)
    if not x.num.terms or not y.num.terms:
        return FieldElem._raw(ParamPoly._make({}, vars), ParamPoly.constant(1, vars))
    a1, b1 = x.num.terms, yd
    a2, b2 = y.num.terms, xd
    if not _is_const(b1):
        g = _gcd_dicts(a1, b1, n)
        if not _is_const(g):
            a1, b1 = _pdivexact(a1, g), _pdivexact(b1, g)
    if not _is_const(b2):
        g = _gcd_dicts(a2, b2, n)
        if not _is_const(g):
            a2, b2 = _pdivexact(a2, g), _pdivexact(b2, g)
    num = _pmul(a1, a2)
    den = _pmul(b1, b2)
    c = _content(den)
    if c != 1:
        num = _pscale(num, 1 / c)
        den = _pscale(den, 1 / c)
    if _is_const(den):
        den = {(0,) * n: _ONE}
    return FieldElem._raw(ParamPoly._make(num, vars), ParamPoly._make(den, vars))


def field_arith(op, a, b=None):
    """Dispatch helper: op in {add, sub, mul, div, neg, inv}."""
    a = FieldElem._coerce(a)
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    b = FieldElem._coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def as_field(x):
    """Coerce int / Fraction / ParamPoly / FieldElem to FieldElem."""
    y = FieldElem._coerce(x)
    if y is None:
        raise TypeError(f"cannot interpret {x!r} as a field element")
    return y


# ---------------------------------------------------------------------------
# printing (the grammar accepted by hcag.parsing)
# ---------------------------------------------------------------------------

def _fmt_rational(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"({q.numerator}/{q.denominator})"


def format_monomial(names, exps):
    parts = []
    for v, k in zip(names, exps):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_terms(items):
    """Join (Fraction coefficient, monomial string) pairs into a signed sum."""
    out = []
    for coeff, mono in items:
        neg = coeff < 0
        a = -coeff if neg else coeff
        if mono:
            body = mono if a == 1 else f"{_fmt_rational(a)}*{mono}"
        else:
            body = _fmt_rational(a)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def format_param_poly(p):
    keys = sorted(p.terms, key=_grlex_key, reverse=True)
    return format_terms((p.terms[e], format_monomial(p.vars, e)) for e in keys)


def format_field(x):
    if x.den.is_constant():
        return format_param_poly(x.num)
    return f"({format_param_poly(x.num)})/({format_param_poly(x.den)})"
