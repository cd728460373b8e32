"""Buchberger's algorithm over Q and the ideal-theoretic tools built on it.

Internally polynomials are handled as ``{exponent: int}`` dicts with
primitive integer coefficients; reductions are fraction-free and divide
out the integer content as they go.  Reduced bases are handed back as
monic :class:`~milnorclass.polyring.Polynomial` objects.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .polyring import Polynomial, is_homogeneous

__all__ = [
    "MonomialOrder",
    "GREVLEX",
    "GroebnerBasis",
    "NotZeroDimensionalError",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "hilbert_numerator",
    "hilbert_dimension_degree",
    "saturate_by_poly",
    "quotient_dimension",
    "standard_monomials",
    "radical_membership",
    "ideal_membership",
]


class NotZeroDimensionalError(ValueError):
    """The quotient ring is infinite dimensional."""


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lexicographic order, optionally as an elimination order.

    With ``block = k > 0`` the first ``k`` variables form an eliminating
    block: monomials are compared by grevlex on the block first and by
    grevlex on the remaining variables to break ties.
    """

    block: int = 0

    @property
    def kind(self):
        return "elimination" if self.block else "grevlex"

    def key(self, exp):
        """Sort key: larger key means larger monomial."""
        k = self.block
        if not k:
            return (sum(exp),) + tuple(-e for e in reversed(exp))
        head, tail = exp[:k], exp[k:]
        return ((sum(head),) + tuple(-e for e in reversed(head))
                + (sum(tail),) + tuple(-e for e in reversed(tail)))


GREVLEX = MonomialOrder()


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _content(values):
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _to_int(p: Polynomial):
    """Primitive integer dict for ``p`` (positive multiple)."""
    if p.is_zero:
        return {}
    q = p.primitive()
    return {e: int(c) for e, c in q.items()}


class _Elem:
    __slots__ = ("terms", "lm", "lc", "tail")

    def __init__(self, terms, order):
        self.terms = terms
        self.lm = max(terms, key=order.key)
        self.lc = terms[self.lm]
        self.tail = [(e, c) for e, c in terms.items() if e != self.lm]


def _reduce(p, elems, order, full=True):
    """Fraction-free reduction of ``p`` by ``elems``.

    Returns ``(r, scale)`` with ``r = scale * NF(p)`` exactly, ``scale`` a
    nonzero Fraction.  With ``full=False`` only the leading term is
    reduced (top reduction) and the rest of ``p`` is left as is.
    """
    p = dict(p)
    key = order.key
    heap = [(tuple(-x for x in key(m)), m) for m in p]
    heapq.heapify(heap)
    r = {}
    scale = Fraction(1)
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, 0)
        if not c:
            continue
        g = None
        for el in elems:
            if _divides(el.lm, m):
                g = el
                break
        if g is None:
            r[m] = c
            if not full:
                # top reduction done; keep remaining terms unreduced
                r.update(p)
                p = {}
                break
            continue
        a, b = g.lc, c
        h = gcd(a, b)
        a //= h
        b //= h
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for e in p:
                p[e] *= a
            for e in r:
                r[e] *= a
            scale *= a
        shift = tuple(x - y for x, y in zip(m, g.lm))
        for e, cg in g.tail:
            e2 = tuple(x + y for x, y in zip(e, shift))
            old = p.get(e2)
            if old is None:
                p[e2] = -b * cg
                heapq.heappush(heap, (tuple(-x for x in key(e2)), e2))
            else:
                new = old - b * cg
                if new:
                    p[e2] = new
                else:
                    del p[e2]
        steps += 1
        if steps % 16 == 0 and (p or r):
            h = _content(list(p.values()) + list(r.values()))
            if h > 1:
                for e in p:
                    p[e] //= h
                for e in r:
                    r[e] //= h
                scale /= h
    if r:
        h = _content(r.values())
        if h > 1:
            for e in r:
                r[e] //= h
            scale /= h
    return r, scale


def _spoly_int(f: _Elem, g: _Elem):
    lcm = _lcm(f.lm, g.lm)
    sf = tuple(x - y for x, y in zip(lcm, f.lm))
    sg = tuple(x - y for x, y in zip(lcm, g.lm))
    h = gcd(f.lc, g.lc)
    a, b = g.lc // h, f.lc // h
    out = {}
    for e, c in f.tail:
        e2 = tuple(x + y for x, y in zip(e, sf))
        out[e2] = out.get(e2, 0) + a * c
    for e, c in g.tail:
        e2 = tuple(x + y for x, y in zip(e, sg))
        out[e2] = out.get(e2, 0) - b * c
    return {e: c for e, c in out.items() if c}


def _buchberger_int(polys, order):
    """Reduced Groebner basis as a list of primitive integer dicts."""
    store = []   # every element ever added, indexed
    basis = []   # indices of current (non-redundant) basis elements
    pairs = set()

    def lcm_of(pair):
        i, j = pair
        return _lcm(store[i].lm, store[j].lm)

    def update(hidx):
        nonlocal basis, pairs
        h = store[hidx]
        cands = [(hidx, g) for g in basis]
        # chain criterion among the new pairs
        kept = []
        for idx, (_, g) in enumerate(cands):
            lcm1 = _lcm(h.lm, store[g].lm)
            coprime = all(x == 0 or y == 0 for x, y in zip(h.lm, store[g].lm))
            redundant = False
            if not coprime:
                for jdx, (_, g2) in enumerate(cands):
                    if jdx == idx:
                        continue
                    lcm2 = _lcm(h.lm, store[g2].lm)
                    if _divides(lcm2, lcm1) and (lcm2 != lcm1 or jdx < idx):
                        redundant = True
                        break
            if not redundant:
                kept.append((g, coprime))
        # product criterion: coprime pairs reduce to zero
        new_pairs = {(min(g, hidx), max(g, hidx)) for g, coprime in kept if not coprime}
        # chain criterion for old pairs: drop (i, j) if lm(h) | lcm(i, j) strictly
        survivors = set()
        for pair in pairs:
            i, j = pair
            l_ij = lcm_of(pair)
            if (_divides(h.lm, l_ij)
                    and _lcm(store[i].lm, h.lm) != l_ij
                    and _lcm(store[j].lm, h.lm) != l_ij):
                continue
            survivors.add(pair)
        pairs = survivors | new_pairs
        basis = [g for g in basis if not _divides(h.lm, store[g].lm)] + [hidx]

    def add(terms):
        h = _content(terms.values())
        terms = {e: c // h for e, c in terms.items()}
        el = _Elem(terms, order)
        if el.lc < 0:
            el = _Elem({e: -c for e, c in terms.items()}, order)
        store.append(el)
        update(len(store) - 1)

    key = order.key
    start = [t for t in polys if t]
    start.sort(key=lambda t: key(max(t, key=key)))
    for t in start:
        r, _ = _reduce(t, [store[i] for i in basis], order)
        if r:
            add(r)
    while pairs:
        pair = min(pairs, key=lambda pr: (key(lcm_of(pr)), -pr[1], -pr[0]))
        pairs.discard(pair)
        i, j = pair
        s = _spoly_int(store[i], store[j])
        if not s:
            continue
        r, _ = _reduce(s, [store[k] for k in basis], order)
        if r:
            if _is_constant(r):
                return [{next(iter(r)): 1}]
            add(r)

    # minimal basis, then interreduce
    elems = [store[i] for i in basis]
    elems.sort(key=lambda el: key(el.lm))
    minimal = []
    for el in elems:
        if not any(_divides(o.lm, el.lm) for o in minimal):
            minimal.append(el)
    reduced = []
    for idx, el in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r, _ = _reduce(el.terms, others, order)
        if r[el.lm] < 0:
            r = {e: -c for e, c in r.items()}
        reduced.append(r)
    reduced.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    return reduced


def _is_constant(terms):
    return len(terms) == 1 and not any(next(iter(terms)))


def _to_monic(terms, nvars, order):
    if not terms:
        return Polynomial.zero(nvars)
    lm = max(terms, key=order.key)
    lc = terms[lm]
    return Polynomial._raw(nvars, {e: Fraction(c, lc) for e, c in terms.items()})


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis of an ideal in ``nvars`` variables."""

    generators: tuple
    order: MonomialOrder
    nvars: int
    _elems: list = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        elems = [_Elem(_to_int(g), self.order) for g in self.generators]
        object.__setattr__(self, "_elems", elems)

    @property
    def leading_monomials(self):
        return [el.lm for el in self._elems]

    @property
    def is_unit(self):
        return any(not any(el.lm) for el in self._elems)

    @property
    def is_zero_ideal(self):
        return not self.generators

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero


def _common_nvars(polys):
    nv = {p.nvars for p in polys}
    if len(nv) > 1:
        raise ValueError(f"mismatched nvars among generators: {sorted(nv)}")
    return nv.pop() if nv else None


def buchberger(gens, order: MonomialOrder = GREVLEX, nvars=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Uses Buchberger's algorithm with the Gebauer-Moeller form of the
    coprime and chain criteria and the normal selection strategy (pair
    with the smallest lcm first).  Zero generators are ignored; an empty
    input gives the zero ideal, for which ``nvars`` must be supplied.

    >>> x, y = Polynomial.variables(2)
    >>> [str(g) for g in buchberger([x**2, x*y])]
    ['x^2', 'x*y']
    """
    gens = list(gens)
    nv = _common_nvars(gens)
    if nv is None:
        if nvars is None:
            raise ValueError("nvars is required for an empty generator list")
        nv = nvars
    elif nvars is not None and nvars != nv:
        raise ValueError(f"generators have {nv} variables, expected {nvars}")
    ints = [_to_int(g) for g in gens if not g.is_zero]
    reduced = _buchberger_int(ints, order)
    return GroebnerBasis(tuple(_to_monic(t, nv, order) for t in reduced), order, nv)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``p`` modulo the ideal of ``gb``."""
    if p.nvars != gb.nvars:
        raise ValueError(f"mismatched nvars: {p.nvars} and {gb.nvars}")
    if p.is_zero:
        return p
    ints, factor = _to_int_exact(p)
    terms, scale = _reduce(ints, gb._elems, gb.order)
    # terms = scale * factor * NF(p)
    denom = scale * factor
    return Polynomial._raw(p.nvars, {e: Fraction(c) / denom for e, c in terms.items()})


def _to_int_exact(p):
    factor = _int_factor(p)
    return {e: int(c * factor) for e, c in p.items()}, factor


def _int_factor(p):
    """Rational ``k`` with ``k * p`` the primitive integer form of ``p``."""
    den = 1
    for c in p._terms.values():
        den = lcm(den, c.denominator)
    num = 0
    for c in p._terms.values():
        num = gcd(num, int(c * den))
    return Fraction(den, num) if num else Fraction(1)


def ideal_membership(p: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(p, gb).is_zero


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """S-polynomial ``lcm/LT(f) * f - lcm/LT(g) * g`` over Q."""
    ff = _Elem({e: c for e, c in f.items()}, order)
    gg = _Elem({e: c for e, c in g.items()}, order)
    lcm = _lcm(ff.lm, gg.lm)
    mf = tuple(x - y for x, y in zip(lcm, ff.lm))
    mg = tuple(x - y for x, y in zip(lcm, gg.lm))
    mono_f = Polynomial._raw(f.nvars, {mf: 1 / ff.lc})
    mono_g = Polynomial._raw(g.nvars, {mg: 1 / gg.lc})
    return mono_f * f - mono_g * g


# -- Hilbert series of monomial ideals ----------------------------------------

def _minimalize(monos):
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(_divides(o, m) for o in out):
            out.append(m)
    return out


def hilbert_numerator(monos, nvars):
    """Numerator ``N(t)`` of the Hilbert series ``N(t)/(1-t)^nvars`` of S/M.

    Coefficient list, lowest degree first.  Computed by the
    inclusion-exclusion recursion ``N(M + (m)) = N(M) - t^deg(m) N(M : m)``.
    """
    monos = _minimalize(monos)
    memo = {}

    def rec(gens):
        gens = tuple(sorted(gens))
        if gens in memo:
            return memo[gens]
        if not gens:
            res = {0: 1}
        elif all(sum(1 for x in m if x) <= 1 for m in gens):
            # pure powers of distinct variables: product of (1 - t^a)
            res = {0: 1}
            for m in gens:
                a = sum(m)
                nxt = {}
                for k, v in res.items():
                    nxt[k] = nxt.get(k, 0) + v
                    nxt[k + a] = nxt.get(k + a, 0) - v
                res = nxt
        else:
            # pivot on the last generator
            *rest, m = gens
            base = rec(rest)
            colon = _minimalize(tuple(max(x - y, 0) for x, y in zip(g, m)) for g in rest)
            sub = rec(colon)
            d = sum(m)
            res = dict(base)
            for k, v in sub.items():
                res[k + d] = res.get(k + d, 0) - v
        res = {k: v for k, v in res.items() if v}
        memo[gens] = res
        return res

    num = rec(monos)
    top = max(num, default=0)
    return [num.get(k, 0) for k in range(top + 1)]


def hilbert_dimension_degree(gb: GroebnerBasis):
    """Projective dimension and degree of ``V(I)`` for homogeneous ``I``.

    Returns ``(dim, deg)`` with ``dim = -1`` and ``deg = 0`` for the empty
    set (unit or irrelevant ideal).
    """
    for g in gb.generators:
        if is_homogeneous(g) is None:
            raise ValueError(f"generator is not homogeneous: {g}")
    num = hilbert_numerator(gb.leading_monomials, gb.nvars)
    krull = gb.nvars
    while krull > 0 and num and sum(num) == 0:
        # divide by (1 - t)
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        krull -= 1
    if not any(num):
        return -1, 0
    if krull == 0:
        return -1, 0
    return krull - 1, sum(num)


# -- derived ideal operations --------------------------------------------------

def saturate_by_poly(gens, h: Polynomial):
    """Generators of the saturation ``(I : h^inf)``.

    Adjoins a variable ``t`` in front, adds ``t*h - 1`` and eliminates ``t``
    with a block order.  Returns the reduced grevlex basis generators.
    """
    if h.is_zero:
        raise ValueError("cannot saturate by the zero polynomial")
    gens = [g for g in gens if not g.is_zero]
    nv = h.nvars
    if gens and _common_nvars(gens + [h]) != nv:
        raise ValueError("mismatched nvars")
    t = Polynomial.variable(0, nv + 1)
    ext = [g.extend(before=1) for g in gens] + [t * h.extend(before=1) - 1]
    gb = buchberger(ext, MonomialOrder(block=1))
    kept = [g.drop_variables(before=1) for g in gb.generators if not any(e[0] for e, _ in g.items())]
    return list(buchberger(kept, GREVLEX, nvars=nv).generators)


def standard_monomials(gb: GroebnerBasis):
    """All monomials outside the leading-term ideal (zero-dimensional only)."""
    lms = gb.leading_monomials
    nv = gb.nvars
    if gb.is_unit:
        return []
    bounds = []
    for i in range(nv):
        pure = [m[i] for m in lms if all(m[j] == 0 for j in range(nv) if j != i) and m[i] > 0]
        if not pure:
            raise NotZeroDimensionalError(
                f"ideal is not zero-dimensional: no pure power of variable {i} among leading terms")
        bounds.append(min(pure))
    out = []

    def walk(prefix):
        i = len(prefix)
        if i == nv:
            out.append(tuple(prefix))
            return
        for a in range(bounds[i]):
            cand = prefix + [a]
            # prune: a monomial divisible by a leading term stays divisible when extended
            partial_mono = tuple(cand) + (0,) * (nv - i - 1)
            if any(_divides(m, partial_mono) for m in lms):
                break
            walk(cand)

    walk([])
    return out


def quotient_dimension(gens, nvars=None) -> int:
    """Vector-space dimension of ``Q[x]/I`` for a zero-dimensional ideal.

    Counts the standard monomials of a grevlex Groebner basis; raises
    :class:`NotZeroDimensionalError` if the quotient is infinite.
    """
    gb = gens if isinstance(gens, GroebnerBasis) else buchberger(gens, GREVLEX, nvars=nvars)
    if gb.is_unit:
        return 0
    return len(standard_monomials(gb))


def radical_membership(p: Polynomial, gens) -> bool:
    """Whether ``p`` lies in the radical of ``(gens)`` (Rabinowitsch trick)."""
    gens = [g for g in gens if not g.is_zero]
    nv = p.nvars
    t = Polynomial.variable(0, nv + 1)
    ext = [g.extend(before=1) for g in gens] + [t * p.extend(before=1) - 1]
    return buchberger(ext, GREVLEX).is_unit
