"""End-to-end acceptance checks, one test per criterion.

conftest.py prints a PASS/FAIL line for each of these after the run.
"""

import itertools
import re
import time

import pytest

from instances import (random_instances, sigma2_p1, sigma2_p2_weighted, sigma3_p1,
                       sigma3_p2)
from test_monomial import check_decomposition
from pathtype.cmtype import algebraic_components, cm_type, cm_type_r1_weighted
from pathtype.covers import (WeightedCover, cover_ideal, enumerate_minimal_covers,
                             enumerate_p_minimal_covers, gamma, h_values, is_cover,
                             p_criterion_leq, p_leq)
from pathtype.graph import WeightedGraph, suspend, truncate_suspension
from pathtype.monomial import (IrreducibleIdeal, Monomial, MonomialIdeal, format_ideal,
                               ideal_contains_ideal)
from pathtype.pathideal import project, weighted_path_ideal, whisker_exponent_sums

RANDOM_COUNT = 200
RANDOM_SEED = 20240601


def parse_tex_monomials(text):
    """Read ``X_{1,2}^3X_1^4, X_2`` style listings into monomials."""
    out = []
    for term in re.split(r",(?![^{]*\})", text):
        m = {}
        for a, b, e in re.findall(r"X_\{?(\d+)(?:,(\d+))?\}?(?:\^(\d+))?", term):
            key = (int(a) - 1, int(b or 0))
            m[key] = m.get(key, 0) + int(e or 1)
        out.append(Monomial(m))
    return out


def ideal(**kw):
    return IrreducibleIdeal({(int(k[1:]) - 1, 0): e for k, e in kw.items()})


@pytest.fixture(scope="module")
def random_suite():
    start = time.perf_counter()
    rows = []
    for g, r, ws in random_instances(RANDOM_COUNT, RANDOM_SEED):
        s = suspend(g, r, ws)
        rep = cm_type(g, r, ws, check=False)
        oracle = algebraic_components(s)
        rows.append((s, rep, oracle))
    return rows, time.perf_counter() - start


WORKED_IDEAL = ("X_{1,2}^3X_{1,1}^4X_1^4,X_{1,1}^4X_1^4X_2,X_1X_2^3X_{2,1}^3,X_1X_2^2X_3^2,"
               "X_{2,2}^3X_{2,1}^3X_2^3,X_{2,1}^3X_2^3X_3^2,X_2^2X_3^2X_{3,1}^2,"
               "X_{3,2}^5X_{3,1}^5X_3^2")
WORKED_PROJECTION = "X_1^{11}, X_1^8X_2, X_1X_2^6, X_1X_2^2X_3^2, X_2^9, X_2^6X_3^2, X_2^2X_3^4, X_3^{12}"


def test_c01_ideal_generation():
    I = weighted_path_ideal(sigma2_p2_weighted(), 2)
    expected = MonomialIdeal(parse_tex_monomials(WORKED_IDEAL))
    assert len(I) == 8
    assert format_ideal(I) == format_ideal(expected)


def test_c02_projection():
    # exponents in braces, e.g. X_1^{11}
    text = re.sub(r"\^\{(\d+)\}", r"^\1", WORKED_PROJECTION).replace(" ", "")
    expected = MonomialIdeal(parse_tex_monomials(text))
    got = project(weighted_path_ideal(sigma2_p2_weighted(), 2))
    assert len(got) == 8
    assert format_ideal(got) == format_ideal(expected)


def test_c03_whisker_power_exponents():
    assert whisker_exponent_sums(sigma2_p2_weighted()) == (4 + 4 + 3, 3 + 3 + 3, 2 + 5 + 5)


def test_c04_gamma_function():
    c = WeightedCover({(0, 1): 3, (0, 2): 6, (1, 0): 5, (1, 1): 3})
    assert gamma(c, sigma2_p1()) == {0: 5, 1: 6}


def test_c05_minimal_covers():
    t = sigma2_p1()
    covers = enumerate_minimal_covers(t, 3)
    ideals = {cover_ideal(c, t) for c in covers}
    assert len(covers) == 8
    assert ideals == {ideal(x1=2), ideal(x2=2), ideal(x1=7, x2=3), ideal(x1=12, x2=3),
                      ideal(x1=4, x2=7), ideal(x1=7, x2=6), ideal(x1=12, x2=6),
                      ideal(x1=4, x2=11)}


def test_c06_p_minimal_covers_and_type():
    t = sigma2_p1()
    got = enumerate_p_minimal_covers(t, 3)
    assert set(got) == {WeightedCover({(0, 0): 2}), WeightedCover({(1, 0): 2}),
                        WeightedCover({(0, 2): 5, (1, 1): 3}),
                        WeightedCover({(0, 1): 2, (1, 2): 4})}
    assert {cover_ideal(c, t) for c in got} == {ideal(x1=2), ideal(x2=2), ideal(x1=12, x2=6),
                                                ideal(x1=4, x2=11)}
    rep = cm_type(WeightedGraph.path([2]), 3, [(2, 5, 2), (3, 4, 2)])
    assert rep.type_value == 4 and rep.routes_agree


def test_c07_unweighted_r_path_case():
    s = sigma3_p2()
    t = truncate_suspension(s)
    assert len(enumerate_minimal_covers(t, 3)) == 10
    assert len(enumerate_p_minimal_covers(t, 3)) == 5
    rep = cm_type(WeightedGraph.path([1, 1]), 3)
    assert rep.type_value == 5 and rep.routes_agree
    assert set(rep.components) == {
        ideal(x1=1, x2=2, x3=3), ideal(x1=1, x2=4, x3=1), ideal(x1=2, x2=3, x3=2),
        ideal(x1=3, x2=2, x3=1), ideal(x1=4, x2=1, x3=4)}


def test_c08_r1_corollaries():
    assert cm_type_r1_weighted(WeightedGraph.path([2, 3]), [5, 3, 4]).type_value == 3
    assert cm_type_r1_weighted(WeightedGraph.path([1, 1])).type_value == 2


def test_c09_route_agreement(random_suite):
    rows, elapsed = random_suite
    assert len(rows) >= 200
    mismatches = [(s, rep.type_value, len(oracle)) for s, rep, oracle in rows
                  if rep.type_value != len(oracle) or rep.components != oracle]
    print("\n%d random instances in %.1fs, %d mismatches" % (len(rows), elapsed, len(mismatches)))
    assert not mismatches
    assert elapsed <= 300


def test_c10_oracle_soundness(random_suite):
    rows, _ = random_suite
    ideals = [project(weighted_path_ideal(s, s.r)) for s, _, _ in rows]
    for s, r in [(sigma3_p1(), 3), (sigma3_p2(), 3), (sigma2_p2_weighted(), 2)]:
        ideals.append(project(weighted_path_ideal(s, r)))
        ideals.append(project(weighted_path_ideal(truncate_suspension(s), r)))
    for I in ideals:
        check_decomposition(list(I.generators))


def containment_instances():
    yield sigma2_p1(), 3
    yield truncate_suspension(sigma2_p2_weighted()), 2
    yield truncate_suspension(suspend(WeightedGraph.path([1, 1]), 2)), 2
    budget = 0
    for g, r, ws in random_instances(400, 7, max_d=4, max_edges=5, max_r=2, max_w=3):
        t = truncate_suspension(suspend(g, r, ws))
        size = 1
        for h in h_values(t).values():
            size *= h + 1
        if size <= 50000 and budget < 60:
            budget += 1
            yield t, r


def test_c11_containment_iff_cover():
    checked = 0
    for t, r in containment_instances():
        I = project(weighted_path_ideal(t, r))
        h = h_values(t)
        verts = sorted(h)
        for ws in itertools.product(*[range(h[v] + 1) for v in verts]):
            c = WeightedCover({v: w for v, w in zip(verts, ws) if w})
            inside = ideal_contains_ideal(cover_ideal(c, t).as_ideal(), I)
            assert inside == is_cover(c, t, r), (t, r, c)
            checked += 1
    print("\n%d weight assignments checked" % checked)


def test_c12_three_way_order_agreement(random_suite):
    rows, _ = random_suite
    cases = [(sigma2_p1(), 3), (truncate_suspension(sigma3_p2()), 3),
             (truncate_suspension(sigma2_p2_weighted()), 2),
             (truncate_suspension(suspend(WeightedGraph.path([2, 3]), 1, [(5,), (3,), (4,)])), 1)]
    cases += [(truncate_suspension(s), s.r) for s, _, _ in rows]
    pairs = 0
    for t, r in cases:
        covers = enumerate_minimal_covers(t, r)
        qs = {c: cover_ideal(c, t).as_ideal() for c in covers}
        for a, b in itertools.product(covers, repeat=2):
            by_gamma = p_leq(a, b, t)
            by_level = p_criterion_leq(a, b, t)
            by_ideal = ideal_contains_ideal(qs[b], qs[a])
            assert by_gamma == by_level == by_ideal, (t, a, b)
            pairs += 1
    print("\n%d ordered pairs compared" % pairs)
