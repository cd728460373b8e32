"""Exact multivariate polynomials over the rationals.

A :class:`Polynomial` is a sparse map from exponent vectors to nonzero
:class:`fractions.Fraction` coefficients.  Instances are immutable and
compare structurally, so two polynomials are equal exactly when they are
the same element of ``Q[x_0, ..., x_{nvars-1}]``.

Random draws go through :class:`SplitMix64`, a 64-bit splitmix generator,
so that every generic choice made downstream can be replayed from a seed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = [
    "AmbientSpec",
    "Polynomial",
    "SplitMix64",
    "RANDOM_RANGE",
    "partial",
    "is_homogeneous",
    "random_linear_combination",
    "random_coefficients",
    "parse_polynomial",
]

ALIASES = "xyzw"

# Symmetric coefficient range for generic draws; zero is excluded.
RANDOM_RANGE = 99991

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator (splitmix64).

    State update is ``state += 0x9E3779B97F4A7C15 (mod 2**64)``; the output
    is the state passed through the standard splitmix finalizer::

        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        z =  z ^ (z >> 31)

    all modulo ``2**64``.  The seed is reduced modulo ``2**64`` and used as
    the initial state.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def nonzero_int(self, bound: int = RANDOM_RANGE) -> int:
        """Uniform integer in ``[-bound, bound]`` minus ``{0}``.

        Uses rejection sampling on the raw 64-bit output so the draw is
        exactly uniform.
        """
        width = 2 * bound
        limit = (1 << 64) - ((1 << 64) % width)
        while True:
            r = self.next_u64()
            if r < limit:
                break
        v = r % width
        return v - bound if v < bound else v - bound + 1


def _as_rng(seed) -> SplitMix64:
    if isinstance(seed, SplitMix64):
        return seed
    return SplitMix64(seed)


def random_coefficients(count: int, seed) -> list[int]:
    """Draw ``count`` nonzero integers from ``[-99991, 99991]``."""
    rng = _as_rng(seed)
    return [rng.nonzero_int() for _ in range(count)]


@dataclass(frozen=True)
class AmbientSpec:
    """Projective space P^n together with the degree d of the hypersurface."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.n}")
        if self.d < 1:
            raise ValueError(f"degree must be >= 1, got {self.d}")

    @property
    def nvars(self) -> int:
        return self.n + 1


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    >>> x, y = Polynomial.variables(2)
    >>> (x + y) * (x - y) == x**2 - y**2
    True
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != nvars:
                    raise ValueError(
                        f"exponent {exp} has length {len(exp)}, expected {nvars}")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = _coerce(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, nvars, terms):
        # terms must already be canonical: Fraction values, no zeros
        p = cls.__new__(cls)
        object.__setattr__(p, "nvars", nvars)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # construction helpers

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars):
        c = _coerce(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, i, nvars):
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def variables(cls, nvars):
        return tuple(cls.variable(i, nvars) for i in range(nvars))

    @classmethod
    def parse(cls, text, nvars=None):
        return parse_polynomial(text, nvars)

    # inspection

    @property
    def terms(self):
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    def total_degree(self):
        """Largest total degree of a term, or ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_term(self):
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def is_integral(self):
        return all(c.denominator == 1 for c in self._terms.values())

    # arithmetic

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(
                f"mismatched nvars: {self.nvars} and {other.nvars}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Polynomial):
            c = _coerce(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw(self.nvars, {e: v * c for e, v in self._terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        return self * c

    def monic(self):
        """Divide by the coefficient of the largest exponent in grevlex order."""
        if not self._terms:
            return self
        from .groebner import GREVLEX
        lm = max(self._terms, key=GREVLEX.key)
        return self * (1 / self._terms[lm])

    def primitive(self):
        """Integer-coefficient multiple with content 1 (sign left unchanged)."""
        from math import gcd, lcm
        if not self._terms:
            return self
        den = 1
        for c in self._terms.values():
            den = lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        return Polynomial._raw(self.nvars, {e: Fraction(v // g) for e, v in ints.items()})

    def substitute(self, images):
        """Compose with polynomials: replace ``x_i`` by ``images[i]``.

        All images must share one ``nvars``; the result lives in that ring.
        """
        if len(images) != self.nvars:
            raise ValueError(f"need {self.nvars} images, got {len(images)}")
        if not images:
            return self
        target = images[0].nvars
        for q in images:
            if q.nvars != target:
                raise ValueError("images must share nvars")
        powers = [[Polynomial.constant(1, target)] for _ in images]

        def power(i, k):
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1] * images[i])
            return cache[k]

        out = Polynomial.zero(target)
        for e, c in self._terms.items():
            term = Polynomial.constant(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, point):
        """Exact value at a rational point."""
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for xi, k in zip(point, e):
                if k:
                    v *= Fraction(xi) ** k
            total += v
        return total

    def extend(self, before=0, after=0):
        """Embed into a ring with extra variables prepended/appended."""
        pre = (0,) * before
        post = (0,) * after
        return Polynomial._raw(
            self.nvars + before + after,
            {pre + e + post: c for e, c in self._terms.items()})

    def drop_variables(self, before=0, after=0):
        """Inverse of :meth:`extend`; the dropped variables must not occur."""
        out = {}
        stop = self.nvars - after
        for e, c in self._terms.items():
            if any(e[:before]) or any(e[stop:]):
                raise ValueError("polynomial involves a variable being dropped")
            out[e[before:stop]] = c
        return Polynomial._raw(self.nvars - before - after, out)

    # comparison, hashing, printing

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.nvars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self!s})"

    def __str__(self):
        if not self._terms:
            return "0"
        from .groebner import GREVLEX
        names = _variable_names(self.nvars)
        chunks = []
        for e in sorted(self._terms, key=GREVLEX.key, reverse=True):
            c = self._terms[e]
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = _fmt_coeff(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_fmt_coeff(mag)] + factors)
            chunks.append(("-" if c < 0 else "+", body))
        sign, body = chunks[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out


def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _variable_names(nvars):
    if nvars <= len(ALIASES):
        return list(ALIASES[:nvars])
    return [f"x{i}" for i in range(nvars)]


def partial(p: Polynomial, i: int) -> Polynomial:
    """Formal partial derivative with respect to ``x_i``."""
    if not 0 <= i < p.nvars:
        raise IndexError(f"variable index {i} out of range for {p.nvars} variables")
    out = {}
    for e, c in p.items():
        k = e[i]
        if k:
            e2 = e[:i] + (k - 1,) + e[i + 1:]
            out[e2] = c * k
    return Polynomial._raw(p.nvars, out)


def gradient(p: Polynomial) -> list[Polynomial]:
    return [partial(p, i) for i in range(p.nvars)]


def is_homogeneous(p: Polynomial):
    """Common total degree of all terms, or ``None``.

    The zero polynomial has no degree and returns ``None``; callers that
    need a hypersurface must reject it.
    """
    degrees = {sum(e) for e in p._terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def random_linear_combination(polys, seed) -> Polynomial:
    """Return ``sum(lam_k * polys[k])`` with seeded nonzero integer weights.

    ``seed`` is an integer or a :class:`SplitMix64` instance; passing a
    generator continues its stream, which is how callers draw several
    independent combinations from one seed.
    """
    polys = list(polys)
    if not polys:
        raise ValueError("random_linear_combination needs at least one polynomial")
    nvars = polys[0].nvars
    for q in polys:
        if q.nvars != nvars:
            raise ValueError("mismatched nvars in random_linear_combination")
    weights = random_coefficients(len(polys), seed)
    out = Polynomial.zero(nvars)
    for lam, q in zip(weights, polys):
        out = out + q * lam
    return out


# -- text grammar -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+|[xyzw])|(\^)|([-+*/()]))")


class PolynomialSyntaxError(ValueError):
    pass


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolynomialSyntaxError(f"unexpected character {text[pos:].strip()[:1]!r} at {pos}")
        num, var, caret, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", var))
        elif caret is not None:
            tokens.append(("op", "^"))
        else:
            tokens.append(("op", op))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, nvars: int | None = None) -> Polynomial:
    """Parse the polynomial text grammar.

    Variables are ``x0``..``x9``, or the aliases ``x, y, z, w`` when the ring
    has at most four variables.  ``*`` is required between factors, ``^``
    takes a nonnegative integer literal, and ``a/b`` with integer literals
    denotes a rational coefficient.  When ``nvars`` is omitted it is inferred
    from the highest variable that occurs.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial")
    names = set()
    for kind, val in tokens:
        if kind == "var":
            names.add(val)
    indexed = {v for v in names if v.startswith("x") and len(v) > 1}
    aliased = names - indexed
    if indexed and aliased - {"x"}:
        raise PolynomialSyntaxError("cannot mix x0..x9 with y/z/w aliases")
    if indexed and "x" in aliased:
        raise PolynomialSyntaxError("cannot mix x0..x9 with the alias x")

    def index_of(v):
        if v in ALIASES and not (len(v) > 1):
            return ALIASES.index(v)
        return int(v[1:])

    needed = max((index_of(v) + 1 for v in names), default=1)
    if nvars is None:
        nvars = needed
    if needed > nvars:
        raise PolynomialSyntaxError(
            f"variable index {needed - 1} out of range for {nvars} variables")
    if aliased and nvars > len(ALIASES):
        raise PolynomialSyntaxError("aliases x,y,z,w are only valid with at most 4 variables")

    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        kind, val = peek()
        if (kind, val) in (("op", "+"), ("op", "-")):
            take()
            value = term()
            if val == "-":
                value = -value
        else:
            value = term()
        while peek() in (("op", "+"), ("op", "-")):
            _, op = take()
            rhs = term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term():
        value = factor()
        while peek() in (("op", "*"), ("op", "/")):
            _, op = take()
            if op == "*":
                value = value * factor()
            else:
                kind, den = take()
                if kind != "num":
                    raise PolynomialSyntaxError("'/' must be followed by an integer literal")
                if den == 0:
                    raise PolynomialSyntaxError("division by zero")
                value = value * Fraction(1, den)
        return value

    def factor():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, k = take()
            if kind != "num":
                raise PolynomialSyntaxError("'^' must be followed by a nonnegative integer literal")
            base = base ** k
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Polynomial.constant(val, nvars)
        if kind == "var":
            return Polynomial.variable(index_of(val), nvars)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise PolynomialSyntaxError("unbalanced parenthesis")
            return inner
        if kind is None:
            raise PolynomialSyntaxError("unexpected end of input")
        raise PolynomialSyntaxError(f"unexpected token {val!r}")

    result = expr()
    if pos != len(tokens):
        raise PolynomialSyntaxError(f"unexpected token {tokens[pos][1]!r}")
    return result
