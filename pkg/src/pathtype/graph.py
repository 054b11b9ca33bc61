"""Edge-weighted simple graphs, r-path enumeration and r-path suspensions.

Every vertex is addressed as a pair ``(i, j)``: ``i`` is the 0-based index of
a base vertex and ``j`` its level along the whisker hanging from it.  Base
vertices sit at level 0, so a plain :class:`WeightedGraph` is literally the
0-path suspension of itself and all downstream code can treat both kinds of
graph the same way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InputError

Vertex = Tuple[int, int]
Path = Tuple[Vertex, ...]
Adjacency = Dict[Vertex, Dict[Vertex, int]]


def _check_weight(w, what):
    if isinstance(w, bool) or not isinstance(w, int) or w < 1:
        raise InputError("%s must be a positive integer, got %r" % (what, w))


@dataclass(frozen=True)
class WeightedGraph:
    """A finite simple graph with a positive integer weight on every edge.

    ``edges`` holds ``(u, v, w)`` triples of vertex indices and weight; it is
    normalized to ``u < v`` and sorted on construction.
    """

    labels: Tuple[str, ...]
    edges: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise InputError("a graph needs at least one vertex")
        if len(set(labels)) != len(labels):
            raise InputError("vertex labels must be distinct")
        seen = {}
        for e in self.edges:
            try:
                u, v, w = e
            except (TypeError, ValueError):
                raise InputError("edge %r is not a (u, v, weight) triple" % (e,))
            for x in (u, v):
                if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < len(labels):
                    raise InputError("edge %r has an invalid endpoint" % (e,))
            if u == v:
                raise InputError("self-loop at %s" % labels[u])
            _check_weight(w, "weight of edge %s%s" % (labels[u], labels[v]))
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError("parallel edge %s%s" % (labels[key[0]], labels[key[1]]))
            seen[key] = w
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", tuple(sorted(k + (w,) for k, w in seen.items())))

    @classmethod
    def path(cls, weights: Sequence[int], prefix: str = "v") -> "WeightedGraph":
        """The path P_n on ``len(weights) + 1`` vertices ``v1 .. v{n+1}``."""
        n = len(weights) + 1
        return cls(tuple("%s%d" % (prefix, i + 1) for i in range(n)),
                   tuple((i, i + 1, w) for i, w in enumerate(weights)))

    @property
    def d(self) -> int:
        return len(self.labels)

    def weight(self, u: int, v: int) -> int:
        return self.adjacency[(u, 0)][(v, 0)]

    def vertices(self) -> List[Vertex]:
        return [(i, 0) for i in range(self.d)]

    @cached_property
    def adjacency(self) -> Adjacency:
        adj: Adjacency = {(i, 0): {} for i in range(self.d)}
        for u, v, w in self.edges:
            adj[(u, 0)][(v, 0)] = w
            adj[(v, 0)][(u, 0)] = w
        return adj

    def vertex_name(self, v: Vertex) -> str:
        return vertex_name(v, self.labels)


@dataclass(frozen=True)
class SuspendedGraph:
    """An edge-weighted r-path suspension of ``base``.

    ``whiskers[i][k]`` is the weight of the whisker edge joining levels ``k``
    and ``k + 1`` above base vertex ``i``.  ``r == 0`` is allowed and denotes
    the base graph itself.
    """

    base: WeightedGraph
    r: int
    whiskers: Tuple[Tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        if isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 0:
            raise InputError("r must be a non-negative integer, got %r" % (self.r,))
        whiskers = tuple(tuple(w) for w in self.whiskers)
        if len(whiskers) != self.base.d:
            raise InputError("expected %d whiskers, got %d" % (self.base.d, len(whiskers)))
        for i, ws in enumerate(whiskers):
            if len(ws) != self.r:
                raise InputError("whisker of %s has %d weights, expected r=%d"
                                 % (self.base.labels[i], len(ws), self.r))
            for w in ws:
                _check_weight(w, "whisker weight at %s" % self.base.labels[i])
        object.__setattr__(self, "whiskers", whiskers)

    @property
    def d(self) -> int:
        return self.base.d

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.base.labels

    def vertices(self) -> List[Vertex]:
        return [(i, j) for i in range(self.d) for j in range(self.r + 1)]

    @cached_property
    def adjacency(self) -> Adjacency:
        adj: Adjacency = {v: {} for v in self.vertices()}
        for v, nbrs in self.base.adjacency.items():
            adj[v].update(nbrs)
        for i, ws in enumerate(self.whiskers):
            for k, w in enumerate(ws):
                adj[(i, k)][(i, k + 1)] = w
                adj[(i, k + 1)][(i, k)] = w
        return adj

    def edge_list(self) -> List[Tuple[Vertex, Vertex, int]]:
        return sorted((u, v, w) for u, nbrs in self.adjacency.items()
                      for v, w in nbrs.items() if u < v)

    def vertex_name(self, v: Vertex) -> str:
        return vertex_name(v, self.labels)


def vertex_name(v: Vertex, labels: Sequence[str]) -> str:
    i, j = v
    return labels[i] if j == 0 else "%s_%d" % (labels[i], j)


def enumerate_r_paths(g, r: int) -> List[Path]:
    """All simple paths with exactly ``r`` edges, one per undirected path.

    Each path is returned in the orientation that is lexicographically no
    larger than its reverse; the list itself is sorted.
    """
    if r < 1:
        raise InputError("r must be at least 1, got %r" % (r,))
    adj = g.adjacency
    out = []

    def extend(path, on_path):
        if len(path) == r + 1:
            if path[0] < path[-1]:
                out.append(tuple(path))
            return
        for nxt in sorted(adj[path[-1]]):
            if nxt not in on_path:
                path.append(nxt)
                on_path.add(nxt)
                extend(path, on_path)
                on_path.discard(nxt)
                path.pop()

    for v in sorted(adj):
        extend([v], {v})
    out.sort()
    return out


def suspend(g: WeightedGraph, r: int,
            whisker_weights: Optional[Iterable[Sequence[int]]] = None) -> SuspendedGraph:
    """Attach a weighted path of length ``r`` to every vertex of ``g``.

    ``whisker_weights`` gives ``r`` weights per base vertex, innermost edge
    first; ``None`` means every whisker edge has weight 1.
    """
    if whisker_weights is None:
        whisker_weights = [(1,) * r for _ in range(g.d)]
    return SuspendedGraph(g, r, tuple(tuple(ws) for ws in whisker_weights))


def truncate_suspension(s: SuspendedGraph) -> SuspendedGraph:
    """Drop the outermost level of every whisker (r becomes r - 1)."""
    if s.r < 1:
        raise InputError("cannot truncate a 0-path suspension")
    return SuspendedGraph(s.base, s.r - 1, tuple(ws[:-1] for ws in s.whiskers))


def validate_weight_condition(s: SuspendedGraph):
    """Check that every base edge weighs no more than both first whisker edges.

    Returns ``(ok, violations)`` where each violation is a base edge
    ``(u, v, w)`` breaking the condition at either endpoint.
    """
    if s.r == 0:
        return True, []
    violations = [(u, v, w) for u, v, w in s.base.edges
                  if w > s.whiskers[u][0] or w > s.whiskers[v][0]]
    return not violations, violations
