"""Buchberger's algorithm, reduced Groebner bases and ideal membership."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import Cancelled, EmptyInput, ZeroPolynomial
from .poly import BiPoly, Monomial, MonomialOrder, _sub_mul_into, divide


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: MonomialOrder
    reduced: bool = False

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_monomials(self):
        return [g.lm(self.order) for g in self.generators]

    def is_unit(self):
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def to_strs(self):
        return [g.to_str(self.order) for g in self.generators]


def s_polynomial(f, g, order):
    """(L/LT(f)) f - (L/LT(g)) g with L = lcm(LM(f), LM(g))."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of the zero polynomial")
    cf, mf = f.leading(order)
    cg, mg = g.leading(order)
    L = mf.lcm(mg)
    out = dict(f.mul_term(cf.inv(), L.quotient(mf)).terms)
    _sub_mul_into(out, cg.inv(), L.quotient(mg), g.terms)
    return BiPoly._make(out)


def _reduce(p, basis, order, full=True):
    """Normal form of p modulo ``basis`` (list of (monic poly, LM))."""
    key = order.key
    work = dict(p.terms)
    rem = {}
    while work:
        mono = max(work, key=key)
        c = work[mono]
        for g, lm in basis:
            if lm.divides(mono):
                _sub_mul_into(work, c, mono.quotient(lm), g.terms)
                break
        else:
            if not full:
                rem.update(work)
                break
            rem[mono] = c
            del work[mono]
    return BiPoly._make(rem)


def _check(cancel):
    if cancel is not None and cancel.is_set():
        raise Cancelled("Groebner basis computation cancelled")


def buchberger(gens, order, *, reduce=True, cancel=None):
    """Groebner basis of the ideal generated by ``gens`` under ``order``.

    Pairs are processed smallest-lcm first; the coprime-leading-monomial
    and chain criteria skip pairs that are known to reduce to zero.
    ``cancel`` may be any object with ``is_set()`` (e.g. threading.Event);
    it is polled between reductions.  With ``reduce`` the result is the
    unique reduced basis.
    """
    polys = [g for g in gens if not g.is_zero()]
    if not polys:
        raise EmptyInput("at least one nonzero generator is required")
    basis = []
    for g in polys:
        g = g.monic(order)
        basis.append((g, g.lm(order)))
    for g, lm in basis:
        if lm == (0, 0):
            return GroebnerBasis((BiPoly.constant(1),), order, True)

    # inter-reduce the input so the pair set starts small
    basis = _interreduce(basis, order)
    if basis[0][1] == (0, 0):
        return GroebnerBasis((BiPoly.constant(1),), order, True)

    key = order.key
    pairs = set()
    for j in range(len(basis)):
        for i in range(j):
            pairs.add((i, j))

    while pairs:
        _check(cancel)
        i, j = min(pairs, key=lambda ij: (key(basis[ij[0]][1].lcm(basis[ij[1]][1])), ij))
        pairs.discard((i, j))
        mi, mj = basis[i][1], basis[j][1]
        L = mi.lcm(mj)
        if L == mi * mj:
            continue
        if _chain_skip(i, j, L, basis, pairs):
            continue
        h = _reduce(s_polynomial(basis[i][0], basis[j][0], order), basis, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        lm = h.lm(order)
        if lm == (0, 0):
            return GroebnerBasis((BiPoly.constant(1),), order, True)
        k = len(basis)
        basis.append((h, lm))
        for i2 in range(k):
            pairs.add((i2, k))

    gb = GroebnerBasis(tuple(g for g, _ in basis), order, False)
    return reduce_basis(gb) if reduce else gb


def _chain_skip(i, j, L, basis, pairs):
    for k, (_, mk) in enumerate(basis):
        if k in (i, j) or not mk.divides(L):
            continue
        if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
            return True
    return False


def _interreduce(basis, order):
    """Autoreduce a list of (poly, LM) pairs: monic, no term of any element
    divisible by another element's LM.  On a Groebner basis this yields the
    reduced basis."""
    key = order.key
    items = sorted(basis, key=lambda gm: key(gm[1]))
    changed = True
    while changed:
        changed = False
        for idx in range(len(items)):
            g, lm = items[idx]
            others = items[:idx] + items[idx + 1:]
            r = _reduce(g, others, order)
            if r == g:
                continue
            changed = True
            if r.is_zero():
                del items[idx]
            else:
                r = r.monic(order)
                items[idx] = (r, r.lm(order))
                if items[idx][1] == (0, 0):
                    return [(BiPoly.constant(1), Monomial(0, 0))]
            items.sort(key=lambda gm: key(gm[1]))
            break
    return items


def reduce_basis(gb):
    """Unique reduced basis, sorted by ascending leading monomial."""
    order = gb.order
    items = [(g.monic(order), g.lm(order)) for g in gb.generators if not g.is_zero()]
    items = _interreduce(items, order)
    return GroebnerBasis(tuple(g for g, _ in items), order, True)


def ideal_member(g, gb):
    """True iff g reduces to zero modulo the Groebner basis."""
    if g.is_zero():
        return True
    _, r = divide(g, list(gb.generators), gb.order)
    return r.is_zero()


def normal_form(g, gb):
    basis = [(h.monic(gb.order), h.lm(gb.order)) for h in gb.generators]
    return _reduce(g, basis, gb.order)


def is_groebner(gens, order):
    """Buchberger criterion: all S-pairs reduce to zero."""
    gens = [g for g in gens if not g.is_zero()]
    basis = [(g.monic(order), g.lm(order)) for g in gens]
    for j in range(len(gens)):
        for i in range(j):
            if not _reduce(s_polynomial(gens[i], gens[j], order), basis, order).is_zero():
                return False
    return True


def same_ideal(a, b, order):
    """Equality of ideals via identical reduced bases."""
    return buchberger(a, order).generators == buchberger(b, order).generators
