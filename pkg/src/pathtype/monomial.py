"""Exact monomial and monomial-ideal arithmetic.

Variables are arbitrary sortable hashables; the rest of the package uses the
suspension vertices ``(i, j)`` so that ``X_{i,j}`` and its vertex share a key.
Ideals are stored by their minimal generating set, which is unique, so ideal
equality is plain ``==``.

:func:`irreducible_decompose` is the independent algebraic oracle: it knows
nothing about graphs or covers and decomposes by coprime splitting.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import InputError


class Monomial:
    """A monomial ``X^b`` stored as a sparse exponent map."""

    __slots__ = ("_items", "_map", "_hash")

    def __init__(self, exponents: Optional[Mapping] = None):
        items = exponents.items() if isinstance(exponents, Mapping) else (exponents or ())
        m = {}
        for var, e in items:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise InputError("exponent of %r must be a non-negative integer" % (var,))
            if e:
                m[var] = m.get(var, 0) + e
        self._map = m
        self._items = tuple(sorted(m.items()))
        self._hash = hash(self._items)

    @property
    def exponents(self) -> Dict:
        return dict(self._map)

    def items(self):
        return self._items

    def __getitem__(self, var) -> int:
        return self._map.get(var, 0)

    def support(self) -> FrozenSet:
        return frozenset(self._map)

    def degree(self) -> int:
        return sum(self._map.values())

    def is_unit(self) -> bool:
        return not self._map

    def is_pure_power(self) -> bool:
        return len(self._map) == 1

    def divides(self, other: "Monomial") -> bool:
        om = other._map
        return all(om.get(v, 0) >= e for v, e in self._items)

    def __mul__(self, other: "Monomial") -> "Monomial":
        m = dict(self._map)
        for v, e in other._items:
            m[v] = m.get(v, 0) + e
        return Monomial(m)

    def lcm(self, other: "Monomial") -> "Monomial":
        m = dict(self._map)
        for v, e in other._items:
            if e > m.get(v, 0):
                m[v] = e
        return Monomial(m)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Monomial(%r)" % (self._map,)

    def __str__(self):
        return format_monomial(self)


def _minimal(gens: Iterable[Monomial]) -> FrozenSet[Monomial]:
    # low degree first: a divisor always has degree <= its multiple
    kept: List[Monomial] = []
    for g in sorted(set(gens), key=lambda m: (m.degree(), m.items())):
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    return frozenset(kept)


class MonomialIdeal:
    """A monomial ideal given by its (unique) minimal generating set.

    The empty generating set is the zero ideal; a generator equal to ``1``
    makes it the unit ideal.
    """

    __slots__ = ("generators",)

    def __init__(self, generators: Iterable[Monomial] = ()):
        self.generators: FrozenSet[Monomial] = _minimal(generators)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return "MonomialIdeal(%s)" % format_ideal(self)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_unit() for g in self.generators)

    def variables(self) -> FrozenSet:
        return frozenset().union(*(g.support() for g in self.generators))

    def sorted_generators(self) -> List[Monomial]:
        return sort_monomials(self.generators)


def sort_monomials(monomials: Iterable[Monomial]) -> List[Monomial]:
    """Canonical order: lexicographically descending exponent vectors.

    Variables are ranked by their own sort order, so ``x1^11`` precedes
    ``x1^8*x2`` which precedes ``x1*x2^6``.
    """
    monomials = list(monomials)
    universe = sorted(frozenset().union(*(m.support() for m in monomials)))
    return sorted(monomials, key=lambda m: tuple(-m[v] for v in universe))


class IrreducibleIdeal:
    """An ideal generated by pure powers ``X_v^{powers[v]}``.

    A variable missing from ``powers`` contributes no generator (its exponent
    is infinite).  With no powers at all this is the zero ideal.
    """

    __slots__ = ("_items", "_map")

    def __init__(self, powers: Optional[Mapping] = None):
        items = powers.items() if isinstance(powers, Mapping) else (powers or ())
        m = {}
        for var, e in items:
            if isinstance(e, bool) or not isinstance(e, int) or e < 1:
                raise InputError("pure power of %r must be a positive integer" % (var,))
            m[var] = min(e, m.get(var, e))
        self._map = m
        self._items = tuple(sorted(m.items()))

    @property
    def powers(self) -> Dict:
        return dict(self._map)

    def items(self):
        return self._items

    def exponent(self, var):
        """Exponent of ``var`` or ``None`` when it is not a generator."""
        return self._map.get(var)

    def is_zero(self) -> bool:
        return not self._map

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(Monomial({v: e}) for v, e in self._items)

    def __add__(self, other: "IrreducibleIdeal") -> "IrreducibleIdeal":
        return IrreducibleIdeal(self._items + other._items)

    def contains(self, other: "IrreducibleIdeal") -> bool:
        """True iff ``other`` is a subset of ``self``."""
        return all(v in self._map and self._map[v] <= e for v, e in other._items)

    def __eq__(self, other):
        if not isinstance(other, IrreducibleIdeal):
            return NotImplemented
        return self._items == other._items

    def __lt__(self, other):
        return self._items < other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return "IrreducibleIdeal(%s)" % format_irreducible(self)


# ---------------------------------------------------------------------------
# ideal operations

def minimalize(gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(gens)


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    return any(g.divides(m) for g in I.generators)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.generators | J.generators)


def ideal_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(f.lcm(g) for f in I.generators for g in J.generators)


def intersect_all(ideals: Iterable) -> MonomialIdeal:
    """Intersection of a non-empty family (irreducible ideals accepted)."""
    result = None
    for J in ideals:
        if isinstance(J, IrreducibleIdeal):
            J = J.as_ideal()
        result = J if result is None else ideal_intersect(result, J)
    if result is None:
        raise InputError("cannot intersect an empty family of ideals")
    return result


def ideal_contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``J`` is contained in ``I`` (note the order: container first)."""
    return all(contains(I, g) for g in J.generators)


def is_artinian(I: MonomialIdeal, variables: Iterable) -> bool:
    """True iff every variable has a pure power among the generators of ``I``."""
    pure = {next(iter(g.support())) for g in I.generators if g.is_pure_power()}
    if I.is_unit():
        return True
    return all(v in pure for v in variables)


# ---------------------------------------------------------------------------
# irreducible decomposition by coprime splitting

def _dense_minimal(gens):
    kept = []
    for g in sorted(set(gens), key=sum):
        if not any(all(a <= b for a, b in zip(k, g)) for k in kept):
            kept.append(g)
    return frozenset(kept)


def _component_le(p, q):
    # pure-power ideal p is a subset of q (0 encodes a missing generator)
    return all(a == 0 or (b != 0 and b <= a) for a, b in zip(p, q))


def _prune(components):
    comps = set(components)
    return frozenset(q for q in comps
                     if not any(p != q and _component_le(p, q) for p in comps))


def _split(gens, memo):
    hit = memo.get(gens)
    if hit is not None:
        return hit
    pivot = None
    # lexicographically first generator (descending exponent order) with >= 2 variables
    for g in sorted(gens, key=lambda t: tuple(-a for a in t)):
        if sum(1 for a in g if a) >= 2:
            pivot = g
            break
    if pivot is None:
        n = len(next(iter(gens)))
        comp = [0] * n
        for g in gens:
            k = next(i for i, a in enumerate(g) if a)
            comp[k] = g[k]
        result = frozenset([tuple(comp)])
    else:
        k = next(i for i, a in enumerate(pivot) if a)
        first = tuple(a if i == k else 0 for i, a in enumerate(pivot))
        rest = tuple(0 if i == k else a for i, a in enumerate(pivot))
        result = _prune(_split(_dense_minimal(gens | {first}), memo)
                        | _split(_dense_minimal(gens | {rest}), memo))
    memo[gens] = result
    return result


def irreducible_decompose(I: MonomialIdeal) -> List[IrreducibleIdeal]:
    """The irredundant irreducible decomposition of a proper nonzero ideal.

    Any generator ``m = m1*m2`` with coprime non-unit factors gives
    ``I = (I + m1) ∩ (I + m2)``; recursing until every generator is a pure
    power leaves irreducible ideals, and discarding every component that
    contains another one makes the family irredundant.
    """
    if I.is_zero():
        raise InputError("the zero ideal has no irreducible decomposition here")
    if I.is_unit():
        raise InputError("the unit ideal is not proper")
    variables = sorted(I.variables())
    dense = frozenset(tuple(g[v] for v in variables) for g in I.generators)
    comps = _split(dense, {})
    out = [IrreducibleIdeal({v: e for v, e in zip(variables, c) if e}) for c in comps]
    return sorted(out)


# ---------------------------------------------------------------------------
# text format

def format_variable(var, names: Optional[Sequence[str]] = None) -> str:
    """``(i, j)`` prints as ``x<i+1>_<j>`` (or ``<names[i]>_<j>``), ``_0`` dropped."""
    if isinstance(var, tuple) and len(var) == 2:
        i, j = var
        base = names[i] if names is not None else "x%d" % (i + 1)
        return base if j == 0 else "%s_%d" % (base, j)
    return str(var)


def format_monomial(m: Monomial, names: Optional[Sequence[str]] = None) -> str:
    if m.is_unit():
        return "1"
    parts = []
    for v, e in m.items():
        s = format_variable(v, names)
        parts.append(s if e == 1 else "%s^%d" % (s, e))
    return "*".join(parts)


def format_ideal(I: MonomialIdeal, names: Optional[Sequence[str]] = None) -> str:
    if I.is_zero():
        return "(0)"
    return "(%s)" % ", ".join(format_monomial(g, names) for g in I.sorted_generators())


def format_irreducible(Q: IrreducibleIdeal, names: Optional[Sequence[str]] = None) -> str:
    if Q.is_zero():
        return "(0)"
    return "(%s)" % ", ".join(
        format_monomial(Monomial({v: e}), names) for v, e in Q.items())
