"""Intersection theory on P^n and pushforwards from a blow-up.

Classes in ``H_*(P^n)`` are stored by dimension: ``ChowClass(n, [a_0, ..., a_n])``
is ``sum a_i [P^i]``.  Since ``[P^i] = H^(n-i) ∩ [P^n]`` the same object also
serves as an element of the truncated ring ``Q[H]/(H^(n+1))``, and products
are taken in that ring.

On the blow-up ``B -> P^n`` along the singular scheme, expressions in the
exceptional class ``Y`` and the pulled-back hypersurface class ``Z`` are
:class:`BlowupSeries`.  Their pushforward uses ``Z = d*H`` (projection
formula) and ``pi_*(Y^m) = (-1)^(m-1) s_m`` where ``s_m`` is the
codimension-``m`` part of the Segre class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

__all__ = [
    "ChowClass",
    "BlowupSeries",
    "SegreData",
    "NonUnitError",
    "inverse_of_unit",
    "cap_and_integral",
    "dual",
    "pushforward_series",
    "csm_of_linear_subspace",
]


class NonUnitError(ZeroDivisionError):
    """Inverting a truncated series whose constant term is zero."""


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


class ChowClass:
    """Class ``sum a_i [P^i]`` in ``H_*(P^n)`` (exact rational coefficients)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        if n < 0:
            raise ValueError("ambient dimension must be nonnegative")
        coeffs = [Fraction(0)] * (n + 1) if coeffs is None else [_frac(c) for c in coeffs]
        if len(coeffs) != n + 1:
            raise ValueError(f"need {n + 1} coefficients for P^{n}, got {len(coeffs)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ChowClass is immutable")

    # constructors

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def from_codim(cls, n, codim_coeffs):
        """Build from ``[c_0, c_1, ...]`` meaning ``sum c_m H^m`` (truncated)."""
        out = [Fraction(0)] * (n + 1)
        for m, c in enumerate(codim_coeffs):
            if m <= n:
                out[n - m] += _frac(c)
        return cls(n, out)

    @classmethod
    def one(cls, n):
        """Fundamental class ``[P^n]``, the unit of the ring."""
        return cls.from_codim(n, [1])

    @classmethod
    def H(cls, n):
        """Hyperplane class ``[P^(n-1)]``."""
        return cls.from_codim(n, [0, 1])

    @classmethod
    def linear(cls, k, n):
        """Class ``[P^k]`` of a linear subspace."""
        if not 0 <= k <= n:
            raise ValueError(f"linear subspace dimension {k} out of range for P^{n}")
        out = [0] * (n + 1)
        out[k] = 1
        return cls(n, out)

    @classmethod
    def point(cls, n):
        return cls.linear(0, n)

    # access

    def __getitem__(self, dim):
        """Coefficient of ``[P^dim]``."""
        return self.coeffs[dim]

    def codim(self, m):
        """Coefficient of ``H^m``."""
        return self.coeffs[self.n - m] if 0 <= m <= self.n else Fraction(0)

    def codim_coeffs(self):
        return [self.coeffs[self.n - m] for m in range(self.n + 1)]

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def top_dimension(self):
        """Largest ``i`` with ``a_i != 0``, or ``None`` for the zero class."""
        for i in range(self.n, -1, -1):
            if self.coeffs[i]:
                return i
        return None

    def truncate_above(self, dim):
        """Drop all components of dimension greater than ``dim``."""
        return ChowClass(self.n, [c if i <= dim else 0 for i, c in enumerate(self.coeffs)])

    # ring structure

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"classes live in different ambient spaces: P^{self.n} and P^{other.n}")

    def __add__(self, other):
        if not isinstance(other, ChowClass):
            if isinstance(other, (int, Fraction)):
                other = ChowClass.one(self.n) * other
            else:
                return NotImplemented
        self._check(other)
        return ChowClass(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.n, [a * other for a in self.coeffs])
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check(other)
        a = self.codim_coeffs()
        b = other.codim_coeffs()
        out = [Fraction(0)] * (self.n + 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(self.n + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
        return ChowClass.from_codim(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ChowClass.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other):
        if isinstance(other, ChowClass):
            return self * other.inverse()
        return self * (Fraction(1) / _frac(other))

    def inverse(self):
        """Inverse in ``Q[H]/(H^(n+1))``; the ``[P^n]`` coefficient must be nonzero."""
        a = self.codim_coeffs()
        if not a[0]:
            raise NonUnitError(f"class {self} has zero constant term and is not invertible")
        inv = [Fraction(0)] * (self.n + 1)
        inv[0] = 1 / a[0]
        for m in range(1, self.n + 1):
            s = sum(a[j] * inv[m - j] for j in range(1, m + 1))
            inv[m] = -s / a[0]
        return ChowClass.from_codim(self.n, inv)

    # homological operations

    def integral(self):
        """Degree of the zero-dimensional part."""
        return self.coeffs[0]

    def dual(self):
        """``a_0 - a_1 + a_2 - ...``"""
        return ChowClass(self.n, [(-a if i % 2 else a) for i, a in enumerate(self.coeffs)])

    # equality, printing, serialization

    def __eq__(self, other):
        if isinstance(other, ChowClass):
            return self.n == other.n and self.coeffs == other.coeffs
        if other == 0:
            return self.is_zero
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"ChowClass({self.n}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for i in range(self.n, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            body = f"[P{i}]" if mag == 1 else f"{mag}[P{i}]"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_dict(self):
        """``{"dim": "coefficient"}`` for the nonzero components, top dimension first."""
        return {str(i): str(self.coeffs[i]) for i in range(self.n, -1, -1) if self.coeffs[i]}

    @classmethod
    def from_dict(cls, n, data):
        out = [Fraction(0)] * (n + 1)
        for k, v in data.items():
            dim = int(k)
            if not 0 <= dim <= n:
                raise ValueError(f"dimension {dim} out of range for P^{n}")
            if isinstance(v, float):
                raise ValueError("class coefficients must be exact (string or integer)")
            out[dim] = Fraction(v)
        return cls(n, out)

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, n, text):
        return cls.from_dict(n, json.loads(text))


def inverse_of_unit(x):
    return x.inverse()


def cap_and_integral(c: ChowClass):
    """Degree ``a_0`` of the point component."""
    return c.integral()


def dual(c: ChowClass) -> ChowClass:
    return c.dual()


def csm_of_linear_subspace(k: int, n: int) -> ChowClass:
    """``c_*(P^k) = (1+H)^(k+1) ∩ [P^k]`` pushed into ``H_*(P^n)``."""
    if not 0 <= k <= n:
        raise ValueError(f"linear subspace dimension {k} out of range for P^{n}")
    out = [0] * (n + 1)
    for j in range(k + 1):
        out[k - j] = comb(k + 1, j)
    return ChowClass(n, out)


class BlowupSeries:
    """Polynomial in commuting symbols ``Y`` and ``Z`` truncated at total degree ``n``.

    ``terms`` maps ``(a, b)`` to the coefficient of ``Y^a Z^b``.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            c = _frac(c)
            if c and a + b <= n:
                clean[(a, b)] = clean.get((a, b), 0) + c
                if not clean[(a, b)]:
                    del clean[(a, b)]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BlowupSeries is immutable")

    @classmethod
    def one(cls, n):
        return cls(n, {(0, 0): 1})

    @classmethod
    def Y(cls, n):
        return cls(n, {(1, 0): 1})

    @classmethod
    def Z(cls, n):
        return cls(n, {(0, 1): 1})

    def _lift(self, other):
        if isinstance(other, BlowupSeries):
            if other.n != self.n:
                raise ValueError("series truncated at different degrees")
            return other
        if isinstance(other, (int, Fraction)):
            return BlowupSeries(self.n, {(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BlowupSeries(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return BlowupSeries(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                if a1 + a2 + b1 + b2 <= self.n:
                    k = (a1 + a2, b1 + b2)
                    out[k] = out.get(k, 0) + c1 * c2
        return BlowupSeries(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = BlowupSeries.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def degree_part(self, k):
        return BlowupSeries(self.n, {ab: c for ab, c in self.terms.items() if sum(ab) == k})

    def inverse(self):
        """Truncated inverse ``1/u`` for a series with nonzero constant term."""
        c0 = self.terms.get((0, 0), Fraction(0))
        if not c0:
            raise NonUnitError("series with zero constant term is not invertible")
        # u = c0 (1 + v), 1/u = (1/c0) sum (-v)^k
        v = self * (1 / c0) - 1
        result = BlowupSeries.one(self.n)
        power = BlowupSeries.one(self.n)
        for _ in range(self.n):
            power = power * (-v)
            result = result + power
        return result * (1 / c0)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "BlowupSeries(0)"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda ab: (sum(ab), -ab[0])):
            c = self.terms[(a, b)]
            mono = "*".join([f"Y^{a}"] * bool(a) + [f"Z^{b}"] * bool(b)) or "1"
            parts.append(f"{c}*{mono}")
        return "BlowupSeries(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class SegreData:
    """Segre class ``s(Y, P^n)`` of the singular scheme.

    ``s_m`` (the codimension-``m`` component) gives the pushforward rule
    ``pi_*(Y^m) = (-1)^(m-1) s_m`` for ``m >= 1``.
    """

    segre: ChowClass

    @property
    def n(self):
        return self.segre.n

    def s(self, m):
        return self.segre.codim(m)

    @classmethod
    def empty(cls, n):
        """Segre data of the empty scheme (smooth hypersurface)."""
        return cls(ChowClass.zero(n))

    @classmethod
    def from_codim(cls, n, codim_coeffs):
        return cls(ChowClass.from_codim(n, codim_coeffs))

    def pushforward_Y_power(self, m) -> ChowClass:
        """``pi_*(Y^m)`` as a class on P^n."""
        n = self.n
        if m == 0:
            return ChowClass.one(n)
        sign = 1 if m % 2 else -1
        return ChowClass.from_codim(n, [0] * m + [sign * self.s(m)])


def pushforward_series(expr: BlowupSeries, segre: SegreData, d: int) -> ChowClass:
    """Push a series in ``Y, Z`` down to ``H_*(P^n)``.

    Each monomial ``Y^a Z^b`` maps to ``(dH)^b * pi_*(Y^a)``.
    """
    n = segre.n
    if expr.n != n:
        raise ValueError(f"series truncated at degree {expr.n}, Segre data lives on P^{n}")
    dH = ChowClass.H(n) * d
    out = ChowClass.zero(n)
    for (a, b), c in expr.terms.items():
        out = out + (dH ** b) * segre.pushforward_Y_power(a) * c
    return out
