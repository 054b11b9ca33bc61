"""Edge-weighted r-path vertex covers of a (truncated) suspension.

A cover assigns a positive weight to some vertices; it covers an r-path when
some vertex on the path carries a weight no larger than that vertex's
exponent in the path's generator.  Lowering a weight or adding a vertex only
covers more, so covers are closed upward in the order "larger support,
smaller weights", and a cover is minimal exactly when no single vertex can be
removed and no single weight raised by one.

Every function here takes the graph the covers live on, which for the type
computation is the suspension truncated to level ``r - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import ConsistencyError, InputError
from .graph import Path, Vertex, enumerate_r_paths, vertex_name
from .monomial import IrreducibleIdeal
from .pathideal import path_exponents


class WeightedCover:
    """A vertex-to-weight assignment ``{v^delta(v)}``."""

    __slots__ = ("_items", "_map")

    def __init__(self, assignment: Mapping[Vertex, int] | Iterable = ()):
        items = assignment.items() if isinstance(assignment, Mapping) else assignment
        m = {}
        for v, w in items:
            if isinstance(w, bool) or not isinstance(w, int) or w < 1:
                raise InputError("cover weight of %r must be a positive integer" % (v,))
            if v in m:
                raise InputError("vertex %r assigned twice" % (v,))
            m[tuple(v)] = w
        self._map = m
        self._items = tuple(sorted(m.items()))

    @property
    def assignment(self) -> Dict[Vertex, int]:
        return dict(self._map)

    def items(self):
        return self._items

    def domain(self):
        return frozenset(self._map)

    def bases(self):
        """The base vertices below the cover's support."""
        return frozenset(i for i, _ in self._map)

    def get(self, v, default=None):
        return self._map.get(v, default)

    def __contains__(self, v):
        return v in self._map

    def __len__(self):
        return len(self._map)

    def __eq__(self, other):
        if not isinstance(other, WeightedCover):
            return NotImplemented
        return self._items == other._items

    def __lt__(self, other):
        return self._items < other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return "WeightedCover(%r)" % (self._map,)


def format_cover(c: WeightedCover, labels: Sequence[str] | None = None) -> str:
    """Decorated-set text such as ``{v1^2, v2_1^3}``."""
    if labels is None:
        labels = ["v%d" % (i + 1) for i in range(max((i for i, _ in c.domain()), default=-1) + 1)]
    return "{%s}" % ", ".join("%s^%d" % (vertex_name(v, labels), w) for v, w in c.items())


@dataclass(frozen=True)
class _PathTable:
    paths: Tuple[Path, ...]
    exps: Tuple[Dict[Vertex, int], ...]
    # per vertex: sorted distinct exponents it takes across the paths through it
    candidates: Dict[Vertex, Tuple[int, ...]]


@lru_cache(maxsize=256)
def _path_table(s, r: int) -> _PathTable:
    paths = tuple(enumerate_r_paths(s, r))
    exps = tuple(dict(zip(p, path_exponents(p, s))) for p in paths)
    cand: Dict[Vertex, set] = {}
    for e in exps:
        for v, x in e.items():
            cand.setdefault(v, set()).add(x)
    return _PathTable(paths, exps, {v: tuple(sorted(xs)) for v, xs in cand.items()})


def h_values(s) -> Dict[Vertex, int]:
    """Largest weight among the edges at each vertex (0 for an isolated vertex)."""
    return {v: max(nbrs.values(), default=0) for v, nbrs in s.adjacency.items()}


def _covers_path(c: WeightedCover, e: Mapping[Vertex, int]) -> bool:
    return any(c.get(v, math.inf) <= x for v, x in e.items())


def is_cover(c: WeightedCover, s, r: int) -> bool:
    return all(_covers_path(c, e) for e in _path_table(s, r).exps)


def is_minimal_cover(c: WeightedCover, s, r: int) -> bool:
    if not is_cover(c, s, r):
        raise InputError("not an edge-weighted %d-path vertex cover" % r)
    m = c.assignment
    for v, w in c.items():
        rest = dict(m)
        del rest[v]
        if is_cover(WeightedCover(rest), s, r):
            return False
        rest[v] = w + 1
        if is_cover(WeightedCover(rest), s, r):
            return False
    return True


def enumerate_minimal_covers(s, r: int) -> List[WeightedCover]:
    """Every minimal edge-weighted r-path vertex cover of ``s``, sorted.

    Depth-first search over the first uncovered path: some vertex on it must
    carry a weight at most its exponent there, and only exponents that occur
    somewhere are ever minimal weights.  A branch dies as soon as a chosen
    vertex has no path left that it alone covers at exactly its weight,
    since then its weight could be raised.
    """
    table = _path_table(s, r)
    n = len(table.paths)
    full = (1 << n) - 1
    reach: Dict[Tuple[Vertex, int], int] = {}
    exact: Dict[Tuple[Vertex, int], int] = {}
    for v, cands in table.candidates.items():
        for d in cands:
            reach[v, d] = sum(1 << k for k, e in enumerate(table.exps) if e.get(v, 0) >= d)
            exact[v, d] = sum(1 << k for k, e in enumerate(table.exps) if e.get(v) == d)

    found = set()
    seen = set()

    def viable(chosen):
        for u in chosen:
            others = 0
            for x in chosen:
                if x != u:
                    others |= reach[x]
            if not exact[u] & ~others:
                return False
        return True

    def search(chosen, covered):
        key = frozenset(chosen)
        if key in seen:
            return
        seen.add(key)
        if covered == full:
            found.add(WeightedCover(chosen))
            return
        missing = ~covered & full
        k = (missing & -missing).bit_length() - 1
        used = {v for v, _ in chosen}
        for v, x in sorted(table.exps[k].items()):
            if v in used:
                continue
            for d in table.candidates[v]:
                if d > x:
                    break
                nxt = chosen + ((v, d),)
                if viable(nxt):
                    search(nxt, covered | reach[v, d])

    search((), 0)
    return sorted(found)


# ---------------------------------------------------------------------------
# gamma function and the associated irreducible ideals

def _prefix_h(s) -> Dict[Vertex, int]:
    # sum of h over the levels strictly below each vertex of its whisker
    h = h_values(s)
    out = {}
    for i in range(s.d):
        acc = 0
        j = 0
        while (i, j) in h:
            out[i, j] = acc
            acc += h[i, j]
            j += 1
    return out


def gamma(c: WeightedCover, s) -> Dict[int, float]:
    """Per base vertex below the cover, the smallest ``delta + sum of h`` below it.

    Only cover vertices whose weight does not exceed their ``h`` take part;
    a base vertex with none of those maps to ``math.inf``.  The minimum is
    always reached at the lowest such level, which is checked on the way.
    """
    h = h_values(s)
    below = _prefix_h(s)
    stray = c.domain() - h.keys()
    if stray:
        raise InputError("cover uses vertices outside the graph: %r" % sorted(stray))
    out: Dict[int, float] = {}
    for i in sorted(c.bases()):
        levels = sorted(j for (b, j) in c.domain() if b == i and c.get((b, j)) <= h[b, j])
        if not levels:
            out[i] = math.inf
            continue
        vals = [c.get((i, j)) + below[i, j] for j in levels]
        if vals[0] != min(vals):
            raise ConsistencyError("gamma minimum not at the lowest level for base %d" % i)
        out[i] = vals[0]
    return out


def cover_ideal(c: WeightedCover, s) -> IrreducibleIdeal:
    """``(X_i^{gamma(v_i)})`` over the base vertices with finite gamma."""
    return IrreducibleIdeal({(i, 0): g for i, g in gamma(c, s).items() if g != math.inf})


def p_leq(c1: WeightedCover, c2: WeightedCover, s) -> bool:
    """``c1`` lies below ``c2``: fewer bases and pointwise larger gamma.

    For minimal covers this is the same as the ideal of ``c1`` being contained
    in the ideal of ``c2``.
    """
    if not c1.bases() <= c2.bases():
        return False
    g1, g2 = gamma(c1, s), gamma(c2, s)
    return all(g1[i] >= g2[i] for i in g1)


def _levels_by_base(c: WeightedCover) -> Dict[int, Tuple[int, int]]:
    out = {}
    for (i, j), w in c.items():
        if i in out:
            raise InputError("base vertex %d carries two cover vertices" % i)
        out[i] = (j, w)
    return out


def p_criterion_leq(c1: WeightedCover, c2: WeightedCover, s) -> bool:
    """Level/weight form of :func:`p_leq` for minimal covers.

    Both covers must use the same bases, and at each base ``c1`` sits at a
    higher level, or at the same level with a weight at least as large.
    """
    l1, l2 = _levels_by_base(c1), _levels_by_base(c2)
    if l1.keys() != l2.keys():
        return False
    for i, (j1, w1) in l1.items():
        j2, w2 = l2[i]
        if not (j1 > j2 or (j1 == j2 and w1 >= w2)):
            return False
    return True


def p_minimal_filter(minimal: Sequence[WeightedCover], s) -> List[WeightedCover]:
    """Keep the covers with no other cover strictly below them in :func:`p_leq`."""
    gammas = [gamma(c, s) for c in minimal]

    def below(a, b):
        ga, gb = gammas[a], gammas[b]
        return ga.keys() <= gb.keys() and all(ga[i] >= gb[i] for i in ga)

    return [c for a, c in enumerate(minimal)
            if not any(b != a and below(b, a) and not below(a, b)
                       for b in range(len(minimal)))]


def enumerate_p_minimal_covers(s, r: int) -> List[WeightedCover]:
    """Minimal covers that have no other minimal cover strictly below them."""
    return p_minimal_filter(enumerate_minimal_covers(s, r), s)
