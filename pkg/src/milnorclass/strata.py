"""Constructible functions on a finite stratification of ``Z``.

A stratification is given as data: each stratum carries its dimension,
the constant value ``mu_S`` of the constructible function ``mu`` on it and
the CSM class of its closure.  From this we compute the inclusion-exclusion
coefficients ``alpha(S)`` with ``mu = sum alpha(S) 1_closure(S)``, and
evaluate the stratified formulas for the Milnor class:

* ``sum alpha(S) (1 + dH)^(-1) ∩ c_*(closure S)``
* ``sum alpha(S) [c_*(closure S) - c_*(closure S ∩ Z')]`` for a generic
  hypersurface ``Z'`` of the same degree, known only through the classes
  of its intersections with the stratum closures.

Strata not listed (the open smooth part) are those where ``mu = 0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .chow import ChowClass, csm_of_linear_subspace

__all__ = [
    "StratificationError",
    "Stratum",
    "StratPoset",
    "ConstructibleFunction",
    "alpha",
    "reconstruct_mu",
    "incidence_matrix",
    "stratified_milnor_class",
    "sectional_milnor_class",
    "sigma_f",
    "specialization_class",
    "stratification_from_dict",
    "stratification_to_dict",
    "load_stratification",
]


class StratificationError(ValueError):
    """Malformed or inconsistent stratification data."""


@dataclass(frozen=True)
class Stratum:
    id: str
    dim: int
    mu: int
    closure_csm: ChowClass | None = None
    closure_cap_zprime_csm: ChowClass | None = None

    def __post_init__(self):
        if self.dim < 0:
            raise StratificationError(f"stratum {self.id!r} has negative dimension")
        for name in ("closure_csm", "closure_cap_zprime_csm"):
            c = getattr(self, name)
            if c is not None:
                top = c.top_dimension()
                if top is not None and top > self.dim:
                    raise StratificationError(
                        f"stratum {self.id!r}: {name} has a component in dimension {top} > {self.dim}")


@dataclass(frozen=True)
class StratPoset:
    """Strata of ``Z`` with the closure relation.

    ``contains`` holds pairs ``(big, small)`` meaning ``small ⊂ closure(big)``.
    The transitive closure is computed on construction and stored in
    :attr:`above` (``above[s]`` = all strata whose closure contains ``s``).
    """

    n: int
    d: int
    strata: tuple
    contains: tuple = ()
    above: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ids = [s.id for s in self.strata]
        if len(set(ids)) != len(ids):
            raise StratificationError("duplicate stratum ids")
        by_id = {s.id: s for s in self.strata}
        for s in self.strata:
            if s.dim > self.n - 1:
                raise StratificationError(
                    f"stratum {s.id!r} has dimension {s.dim} > n-1 = {self.n - 1}")
            for c in (s.closure_csm, s.closure_cap_zprime_csm):
                if c is not None and c.n != self.n:
                    raise StratificationError(f"stratum {s.id!r}: class not in H_*(P^{self.n})")
        direct = {i: set() for i in ids}
        for big, small in self.contains:
            if big not in by_id or small not in by_id:
                raise StratificationError(f"unknown stratum in containment ({big!r}, {small!r})")
            if big == small:
                raise StratificationError(f"stratum {big!r} cannot contain itself")
            direct[small].add(big)
        above = {}
        state = {}

        def visit(s):
            if state.get(s) == "done":
                return above[s]
            if state.get(s) == "active":
                raise StratificationError(f"cyclic containment through stratum {s!r}")
            state[s] = "active"
            acc = set()
            for b in direct[s]:
                acc.add(b)
                acc |= visit(b)
            state[s] = "done"
            above[s] = acc
            return acc

        for s in ids:
            visit(s)
        for s, bigs in above.items():
            for b in bigs:
                if by_id[b].dim <= by_id[s].dim:
                    raise StratificationError(
                        f"stratum {s!r} lies in the closure of {b!r} but dim {by_id[s].dim} >= {by_id[b].dim}")
        object.__setattr__(self, "above", {k: frozenset(v) for k, v in above.items()})

    @property
    def ids(self):
        return [s.id for s in self.strata]

    def stratum(self, sid):
        for s in self.strata:
            if s.id == sid:
                return s
        raise KeyError(sid)

    def descending(self):
        """Strata by descending dimension, ties broken by id."""
        return sorted(self.strata, key=lambda s: (-s.dim, s.id))

    def closure_members(self, sid):
        """Ids of the strata contained in ``closure(sid)``, itself included."""
        return {s for s, bigs in self.above.items() if sid in bigs} | {sid}

    def mu(self):
        return {s.id: s.mu for s in self.strata}

    def with_mu(self, values):
        """Copy with replaced ``mu`` values."""
        strata = tuple(
            Stratum(s.id, s.dim, values.get(s.id, s.mu), s.closure_csm, s.closure_cap_zprime_csm)
            for s in self.strata)
        return StratPoset(self.n, self.d, strata, self.contains)


def alpha(poset: StratPoset, values=None):
    """Coefficients with ``mu = sum alpha(S) 1_closure(S)``.

    Solves ``alpha(S) = mu_S - sum_{S ⊂ closure(S'), S' != S} alpha(S')``
    working down from the largest strata.  ``values`` overrides the
    per-stratum ``mu``.
    """
    values = poset.mu() if values is None else values
    out = {}
    for s in poset.descending():
        out[s.id] = values[s.id] - sum(out[b] for b in poset.above[s.id])
    return out


def reconstruct_mu(alphas, poset: StratPoset):
    """Evaluate ``sum alpha(S) 1_closure(S)`` on every stratum."""
    return {s.id: alphas.get(s.id, 0) + sum(alphas.get(b, 0) for b in poset.above[s.id])
            for s in poset.strata}


def incidence_matrix(poset: StratPoset):
    """``M[i][j] = 1`` iff stratum ``i`` lies in the closure of stratum ``j``.

    Rows and columns follow :meth:`StratPoset.descending`; the matrix is
    unipotent lower triangular and maps indicator coefficients to values.
    """
    order = [s.id for s in poset.descending()]
    return [[1 if (i == j or j in poset.above[i]) else 0 for j in order] for i in order]


@dataclass(frozen=True)
class ConstructibleFunction:
    """Integer-valued function on ``Z`` constant along the strata.

    ``values`` gives the value on each listed stratum and ``generic`` the
    value on the complement of all listed strata.  Equivalently
    ``generic * 1_Z + sum coeff(S) 1_closure(S)`` (see :meth:`indicator`).
    """

    poset: StratPoset
    values: dict
    generic: int = 0

    @classmethod
    def from_indicator(cls, poset, coeffs, generic=0):
        vals = reconstruct_mu(coeffs, poset)
        return cls(poset, {k: v + generic for k, v in vals.items()}, generic)

    def indicator(self):
        """``(generic, {S: coeff})`` in the basis ``1_Z, 1_closure(S)``."""
        shifted = {k: v - self.generic for k, v in self.values.items()}
        return self.generic, alpha(self.poset, shifted)

    def __call__(self, sid):
        return self.values[sid]

    def csm(self, csm_of_z: ChowClass) -> ChowClass:
        """``c_*`` of this function, given ``c_*(Z)``."""
        generic, coeffs = self.indicator()
        out = csm_of_z * generic
        for s in self.poset.strata:
            if coeffs[s.id]:
                out = out + _closure_class(s) * coeffs[s.id]
        return out


def _closure_class(s):
    if s.closure_csm is None:
        raise StratificationError(f"stratum {s.id!r} has no closure CSM class")
    return s.closure_csm


def _sign(n):
    return 1 if (n - 1) % 2 == 0 else -1


def stratified_milnor_class(poset: StratPoset) -> ChowClass:
    """``sum alpha(S) (1 + dH)^(-1) ∩ c_*(closure S)`` in ``H_*(P^n)``."""
    n = poset.n
    twist = (ChowClass.one(n) + ChowClass.H(n) * poset.d).inverse()
    out = ChowClass.zero(n)
    for sid, a in alpha(poset).items():
        if a:
            out = out + twist * _closure_class(poset.stratum(sid)) * a
    return out


def sectional_milnor_class(poset: StratPoset) -> ChowClass:
    """``sum alpha(S) [c_*(closure S) - c_*(closure S ∩ Z')]``.

    A missing ``closure_cap_zprime_csm`` means ``closure(S) ∩ Z'`` is empty.
    """
    out = ChowClass.zero(poset.n)
    for sid, a in alpha(poset).items():
        if not a:
            continue
        s = poset.stratum(sid)
        term = _closure_class(s)
        if s.closure_cap_zprime_csm is not None:
            term = term - s.closure_cap_zprime_csm
        out = out + term * a
    return out


def sigma_f(poset: StratPoset, zprime_meets) -> ConstructibleFunction:
    """Specialization of ``1`` on the family ``f - t g`` to ``t = 0``.

    ``zprime_meets`` is the set of stratum ids lying inside ``Z ∩ Z'``
    (the poset must be refined so every stratum is either inside ``Z'`` or
    disjoint from it).  The value is ``1 + (-1)^(n-1) mu`` off ``Z'`` and
    ``1`` on ``Z ∩ Z'``.
    """
    zp = set(zprime_meets)
    unknown = zp - set(poset.ids)
    if unknown:
        raise StratificationError(f"unknown strata in Z' data: {sorted(unknown)}")
    for sid in zp:
        # a closed set contains the closure of each of its strata
        missing = poset.closure_members(sid) - zp
        if missing:
            raise StratificationError(
                f"unrefined poset: stratum {sid!r} lies in Z' but {sorted(missing)} in its closure do not")
    sign = _sign(poset.n)
    values = {s.id: (1 if s.id in zp else 1 + sign * s.mu) for s in poset.strata}
    return ConstructibleFunction(poset, values, generic=1)


def specialization_class(poset: StratPoset, csm_of_z: ChowClass) -> ChowClass:
    """``c_*(Z) + (-1)^(n-1) sum alpha(S)[c_*(closure S) - c_*(closure S ∩ Z')]``.

    This is ``c_*`` of the specialized function, which must agree with the
    Fulton class of ``Z`` (the CSM class of a smooth nearby fibre).
    """
    return csm_of_z + sectional_milnor_class(poset) * _sign(poset.n)


# -- JSON ------------------------------------------------------------------

def _class_field(raw, n, dim, sid, name, allow_linear):
    if raw is None:
        return None
    if raw == "linear" and allow_linear:
        return csm_of_linear_subspace(dim, n)
    if isinstance(raw, dict):
        try:
            return ChowClass.from_dict(n, raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise StratificationError(f"stratum {sid!r}: bad {name}: {exc}") from exc
    raise StratificationError(f"stratum {sid!r}: {name} must be an object" +
                              (' or "linear"' if allow_linear else " or null"))


def stratification_from_dict(data) -> StratPoset:
    if not isinstance(data, dict):
        raise StratificationError("stratification must be a JSON object")
    for key in ("n", "d", "strata"):
        if key not in data:
            raise StratificationError(f"missing key {key!r}")
    n, d = data["n"], data["d"]
    if not isinstance(n, int) or not isinstance(d, int) or n < 1 or d < 1:
        raise StratificationError("n and d must be positive integers")
    strata = []
    for raw in data["strata"]:
        if not isinstance(raw, dict):
            raise StratificationError("each stratum must be an object")
        for key in ("id", "dim", "mu"):
            if key not in raw:
                raise StratificationError(f"stratum missing key {key!r}")
        sid, dim, mu = raw["id"], raw["dim"], raw["mu"]
        if not isinstance(sid, str) or not isinstance(dim, int) or not isinstance(mu, int):
            raise StratificationError(f"stratum {sid!r}: id must be a string, dim and mu integers")
        if not 0 <= dim <= n - 1:
            raise StratificationError(f"stratum {sid!r} has dimension {dim} outside [0, n-1 = {n - 1}]")
        strata.append(Stratum(
            sid, dim, mu,
            _class_field(raw.get("closure_csm", "linear"), n, dim, sid, "closure_csm", True),
            _class_field(raw.get("closure_cap_zprime_csm"), n, dim, sid, "closure_cap_zprime_csm", False),
        ))
    contains = data.get("contains", [])
    pairs = []
    for pair in contains:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
            raise StratificationError("contains entries must be [big, small] id pairs")
        pairs.append(tuple(pair))
    return StratPoset(n, d, tuple(strata), tuple(pairs))


def stratification_to_dict(poset: StratPoset):
    return {
        "n": poset.n,
        "d": poset.d,
        "strata": [
            {
                "id": s.id,
                "dim": s.dim,
                "mu": s.mu,
                "closure_csm": s.closure_csm.to_dict() if s.closure_csm is not None else None,
                "closure_cap_zprime_csm": (s.closure_cap_zprime_csm.to_dict()
                                           if s.closure_cap_zprime_csm is not None else None),
            }
            for s in poset.strata
        ],
        "contains": [list(p) for p in poset.contains],
    }


def load_stratification(path) -> StratPoset:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StratificationError(f"invalid JSON: {exc}") from exc
    return stratification_from_dict(data)
