"""Brute-force reference implementations.

Nothing here calls into the search or splitting code it is used to check;
each oracle works straight from the definitions.
"""

import itertools
import math


def edge_weight(g, u, v):
    return g.adjacency[u].get(v)


def brute_force_paths(g, r):
    """All r-paths by trying every ordered (r+1)-tuple of distinct vertices."""
    found = set()
    for seq in itertools.permutations(sorted(g.adjacency), r + 1):
        if all(edge_weight(g, a, b) is not None for a, b in zip(seq, seq[1:])):
            found.add(min(seq, seq[::-1]))
    return sorted(found)


def generator_exponents(g, seq):
    """Three-case exponent rule: end weights at the ends, max inside."""
    ws = [edge_weight(g, a, b) for a, b in zip(seq, seq[1:])]
    out = [ws[0]]
    for k in range(1, len(seq) - 1):
        out.append(max(ws[k - 1], ws[k]))
    out.append(ws[-1])
    return out


def covers_by_definition(assign, g, paths):
    for seq in paths:
        e = generator_exponents(g, seq)
        if not any(v in assign and assign[v] <= x for v, x in zip(seq, e)):
            return False
    return True


def all_assignments(vertices, max_weight):
    for ws in itertools.product(range(max_weight + 1), repeat=len(vertices)):
        yield {v: w for v, w in zip(vertices, ws) if w}


def brute_force_minimal_covers_stepwise(g, r):
    """Minimal covers via exhaustive assignment and single-step weakening."""
    paths = brute_force_paths(g, r)
    verts = sorted(g.adjacency)
    top = max((x for p in paths for x in generator_exponents(g, p)), default=1)
    out = []
    for a in all_assignments(verts, top):
        if not covers_by_definition(a, g, paths):
            continue
        minimal = True
        for v in a:
            smaller = dict(a)
            del smaller[v]
            raised = dict(a)
            raised[v] += 1
            if covers_by_definition(smaller, g, paths) or covers_by_definition(raised, g, paths):
                minimal = False
                break
        if minimal:
            out.append(a)
    return out


def brute_force_minimal_covers_pairwise(g, r, max_weight):
    """Minimal covers straight from the order: no other cover strictly below."""
    paths = brute_force_paths(g, r)
    verts = sorted(g.adjacency)
    covers = [a for a in all_assignments(verts, max_weight)
              if covers_by_definition(a, g, paths)]

    def below(b, a):
        return b != a and set(b) <= set(a) and all(b[v] >= a[v] for v in b)

    return [a for a in covers if not any(below(b, a) for b in covers)]


def minimal_vertex_covers(g):
    """Inclusion-minimal vertex covers of an unweighted graph."""
    verts = sorted(g.adjacency)
    edges = [(u, v) for u in verts for v in g.adjacency[u] if u < v]
    covers = [set(s) for k in range(len(verts) + 1)
              for s in itertools.combinations(verts, k)
              if all(u in s or v in s for u, v in edges)]
    return [c for c in covers if not any(o < c for o in covers)]


def in_ideal(gens, point, variables):
    """Membership of the monomial with exponent vector ``point``."""
    return any(all(point[k] >= g[v] for k, v in enumerate(variables)) for g in gens)


def box_points(variables, bound):
    return itertools.product(range(bound + 1), repeat=len(variables))


def pure_power_member(component, point, variables):
    return any(component.get(v) is not None and point[k] >= component[v]
               for k, v in enumerate(variables))


def gamma_by_hand(assign, g):
    """gamma straight from its defining minimum over every admissible level."""
    h = {v: max(n.values(), default=0) for v, n in g.adjacency.items()}
    out = {}
    for i in {b for b, _ in assign}:
        vals = []
        for (b, j), w in assign.items():
            if b == i and w <= h[b, j]:
                vals.append(w + sum(h[b, k] for k in range(j)))
        out[i] = min(vals) if vals else math.inf
    return out
