"""Edge-weighted r-path ideals, the projection to base variables, and the
whisker power ideal of a suspension."""

from __future__ import annotations

from typing import Sequence, Tuple

from .errors import InputError
from .graph import Path, SuspendedGraph, enumerate_r_paths
from .monomial import IrreducibleIdeal, Monomial, MonomialIdeal


def _edge_run_exponents(ws: Sequence[int]) -> Tuple[int, ...]:
    # exponents of the vertices of a path whose consecutive edges weigh ws
    if not ws:
        raise InputError("a path needs at least one edge")
    inner = tuple(max(a, b) for a, b in zip(ws, ws[1:]))
    return (ws[0],) + inner + (ws[-1],)


def path_exponents(p: Path, g) -> Tuple[int, ...]:
    """Exponent of each vertex of ``p`` in the generator it contributes.

    Endpoints take the weight of their single path edge, interior vertices the
    larger of their two path edges.
    """
    adj = g.adjacency
    if len(set(p)) != len(p):
        raise InputError("%r repeats a vertex" % (p,))
    ws = []
    for u, v in zip(p, p[1:]):
        try:
            ws.append(adj[u][v])
        except KeyError:
            raise InputError("%r is not a path: no edge %r-%r" % (p, u, v))
    return _edge_run_exponents(ws)


def path_monomial(p: Path, g) -> Monomial:
    return Monomial(zip(p, path_exponents(p, g)))


def weighted_path_ideal(g, r: int) -> MonomialIdeal:
    """The ideal generated by one monomial per r-path of ``g``."""
    return MonomialIdeal(path_monomial(p, g) for p in enumerate_r_paths(g, r))


def project(I: MonomialIdeal) -> MonomialIdeal:
    """Replace every whisker variable ``X_{i,j}`` by its base variable ``X_i``."""
    out = []
    for g in I.generators:
        m = {}
        for (i, _j), e in g.items():
            m[(i, 0)] = m.get((i, 0), 0) + e
        out.append(Monomial(m))
    return MonomialIdeal(out)


def whisker_exponent_sums(s: SuspendedGraph) -> Tuple[int, ...]:
    """Per base vertex, the exponent sum of the generator of its own whisker."""
    if s.r < 1:
        raise InputError("whisker sums need r >= 1")
    return tuple(sum(_edge_run_exponents(ws)) for ws in s.whiskers)


def frobenius_power_ideal(s: SuspendedGraph) -> IrreducibleIdeal:
    """``(X_1^{a_1}, ..., X_d^{a_d})`` with ``a_i`` the whisker exponent sums."""
    return IrreducibleIdeal({(i, 0): a for i, a in enumerate(whisker_exponent_sums(s))})
