"""Cohen-Macaulay type of ``R'/I_r((Σ_r G)_λ)``, computed two ways.

The combinatorial route counts p-minimal covers of the suspension truncated
to level ``r - 1`` and turns each into the irreducible component
``cover_ideal + m^[a]``.  The algebraic route projects the path ideal of the
full suspension to the base ring and decomposes it with the coprime-splitting
oracle.  For an Artinian monomial quotient the type is the number of
irredundant irreducible components, so the two routes must agree whenever
the weight condition holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .covers import (WeightedCover, cover_ideal, enumerate_minimal_covers,
                     enumerate_p_minimal_covers, format_cover)
from .errors import ConsistencyError, InputError, WeightConditionError
from .graph import (SuspendedGraph, WeightedGraph, enumerate_r_paths, suspend,
                    truncate_suspension, validate_weight_condition)
from .monomial import (IrreducibleIdeal, format_irreducible, irreducible_decompose,
                       is_artinian)
from .pathideal import frobenius_power_ideal, project, weighted_path_ideal


@dataclass(frozen=True)
class Component:
    """One irreducible component together with the cover it came from."""

    ideal: IrreducibleIdeal
    cover: WeightedCover
    cover_ideal: IrreducibleIdeal


@dataclass
class TypeReport:
    type_value: int
    route_combinatorial: int
    route_algebraic: Optional[int]
    components: List[IrreducibleIdeal]
    weight_condition_ok: bool
    p_minimal_covers: List[WeightedCover] = field(default_factory=list)
    violations: list = field(default_factory=list)
    # p-minimal covers sharing an ideal, or components swallowed after adding m^[a]
    collapsed: bool = False
    routes_agree: Optional[bool] = None

    @property
    def verified(self) -> bool:
        return self.weight_condition_ok and bool(self.routes_agree)

    def to_dict(self, labels: Sequence[str]) -> dict:
        return {
            "type": self.type_value,
            "route_combinatorial": self.route_combinatorial,
            "route_algebraic": self.route_algebraic,
            "routes_agree": self.routes_agree,
            "weight_condition_ok": self.weight_condition_ok,
            "verified": self.verified,
            "collapsed": self.collapsed,
            "violations": [[labels[u], labels[v], w] for u, v, w in self.violations],
            "components": [format_irreducible(q, labels) for q in self.components],
            "p_minimal_covers": [format_cover(c, labels) for c in self.p_minimal_covers],
        }


def _prune_nested(ideals):
    distinct = sorted(set(ideals))
    return [q for q in distinct
            if not any(p != q and q.contains(p) for p in distinct)]


def _checked_suspension(g: WeightedGraph, r: int, whisker_weights, force: bool):
    if r < 1:
        raise InputError("r must be at least 1, got %r" % (r,))
    s = suspend(g, r, whisker_weights)
    ok, violations = validate_weight_condition(s)
    if not ok and not force:
        raise WeightConditionError(violations)
    if not enumerate_r_paths(s, r):
        raise InputError("the suspension has no %d-path" % r)
    return s, ok, violations


def combinatorial_components(s: SuspendedGraph):
    """p-minimal covers of the truncation and their summed components."""
    t = truncate_suspension(s)
    mpow = frobenius_power_ideal(s)
    covers = enumerate_p_minimal_covers(t, s.r)
    comps = [Component(cover_ideal(c, t) + mpow, c, cover_ideal(c, t)) for c in covers]
    return covers, comps


def algebraic_components(s: SuspendedGraph) -> List[IrreducibleIdeal]:
    I = project(weighted_path_ideal(s, s.r))
    if not is_artinian(I, [(i, 0) for i in range(s.d)]):
        raise ConsistencyError("projected path ideal is not Artinian")
    return irreducible_decompose(I)


def cm_type(g: WeightedGraph, r: int, whisker_weights=None, *,
            force: bool = False, check: bool = True) -> TypeReport:
    """Type of the r-path suspension of ``g`` with the given whisker weights.

    Refuses (``WeightConditionError``) when a base edge outweighs an adjacent
    first whisker edge, unless ``force`` is set; forced reports are never
    treated as verified.  With ``check`` the algebraic oracle also runs and a
    disagreement under the weight condition raises ``ConsistencyError``.
    """
    s, ok, violations = _checked_suspension(g, r, whisker_weights, force)
    covers, comps = combinatorial_components(s)
    components = _prune_nested(c.ideal for c in comps)
    collapsed = len(components) != len(covers)

    algebraic = None
    agree = None
    if check:
        oracle = algebraic_components(s)
        algebraic = len(oracle)
        agree = oracle == components and algebraic == len(covers)
        if ok and not agree:
            raise ConsistencyError(
                "combinatorial route gives %d components, oracle gives %d"
                % (len(components), algebraic))

    return TypeReport(
        type_value=len(components),
        route_combinatorial=len(covers),
        route_algebraic=algebraic,
        components=components,
        weight_condition_ok=ok,
        p_minimal_covers=covers,
        violations=violations,
        collapsed=collapsed,
        routes_agree=agree,
    )


def cm_type_r1_weighted(g: WeightedGraph, whisker_weights=None, *,
                        force: bool = False, check: bool = True) -> TypeReport:
    """The r = 1 case: the type counts minimal edge-weighted vertex covers of ``g``."""
    if whisker_weights is not None:
        whisker_weights = [(w,) if isinstance(w, int) else tuple(w) for w in whisker_weights]
    report = cm_type(g, 1, whisker_weights, force=force, check=check)
    n_minimal = len(enumerate_minimal_covers(g, 1))
    if report.weight_condition_ok and report.type_value != n_minimal:
        raise ConsistencyError("type %d but %d minimal edge-weighted vertex covers"
                               % (report.type_value, n_minimal))
    return report


def decomposition_report(g: WeightedGraph, r: int, whisker_weights=None, *,
                         force: bool = False) -> List[Component]:
    """Irredundant decomposition of the projected path ideal, one cover per component.

    Components are checked against the oracle; any mismatch under the weight
    condition raises ``ConsistencyError``.
    """
    s, ok, _ = _checked_suspension(g, r, whisker_weights, force)
    _, comps = combinatorial_components(s)
    kept = set(_prune_nested(c.ideal for c in comps))
    out, seen = [], set()
    for c in sorted(comps, key=lambda c: c.ideal):
        if c.ideal in kept and c.ideal not in seen:
            seen.add(c.ideal)
            out.append(c)
    if ok and [c.ideal for c in out] != algebraic_components(s):
        raise ConsistencyError("cover components differ from the oracle decomposition")
    return out

