from __future__ import annotations

import random

import pytest

from conftest import hopf_sum_negative
from splicegenus.diagram import (
    DiagramError,
    find_inter_component_bigons,
    flip_crossing,
    parse_pd,
)
from splicegenus.factor import reduce_monogons
from splicegenus.generate import random_alternating_diagram
from splicegenus.pipeline import (
    PipelineError,
    add_twist_bigons,
    join_at_bigon,
    theorem_check,
    two_component_genus,
)
from splicegenus.search import u_minus
from splicegenus.splice import SpliceKind
from splicegenus.surface import adams_kindred


def pd_of(table, name):
    return parse_pd(next(r.pd for r in table if r.name == name))


def bigon_free_links(count: int):
    """Seeded random two-component diagrams without an inter-component 2-gon."""
    rng = random.Random(1)
    out = []
    while len(out) < count:
        d = random_alternating_diagram(rng.choice((6, 7, 8, 9)), rng, n_components=2)
        if not find_inter_component_bigons(d):
            out.append(d)
    return out


def inter_crossings(d):
    return [c for c in d.crossing_ids if d.passage_info[c][0][0] != d.passage_info[c][1][0]]


def test_twist_adds_two_crossings(table):
    for rec in table:
        d = parse_pd(rec.pd)
        for c in inter_crossings(d):
            for variant in ("left", "right"):
                t = add_twist_bigons(d, c, variant)
                assert t.n == d.n + 2 and t.n_components == 2
                assert find_inter_component_bigons(t)


def test_twist_keeps_chi_for_best_variant(table):
    d = pd_of(table, "7^2_6")
    base = adams_kindred(d)
    for c in inter_crossings(d):
        best = max(
            (adams_kindred(add_twist_bigons(d, c, v)) for v in ("left", "right")),
            key=lambda r: r.chi_max,
        )
        assert best.chi_max == base.chi_max
        assert best.max_circles == base.max_circles + 2


def test_twist_rejects_self_crossing(trefoil):
    with pytest.raises(DiagramError):
        add_twist_bigons(trefoil, 0)


def test_join_at_bigon_hopf(hopf):
    knot, move = join_at_bigon(hopf)
    assert move.kind is SpliceKind.S_JOIN
    assert knot.n == 1 and knot.n_components == 1 and knot.monogon_crossings


def test_join_at_bigon_5_2_1(table):
    knot, _ = join_at_bigon(pd_of(table, "5^2_1"))
    assert knot.n_components == 1
    reduced, _ = reduce_monogons(knot)
    assert u_minus(reduced)[0] == 1


def test_join_at_bigon_needs_bigon(table):
    with pytest.raises(DiagramError):
        join_at_bigon(pd_of(table, "7^2_6"))


def test_hopf_report(hopf):
    rep = two_component_genus(hopf)
    assert rep.row == (0, 1, 1, 0)
    assert rep.beta1 == 2 and rep.route == "bigon"
    assert theorem_check(rep)


def test_7_2_3_report(table):
    assert two_component_genus(pd_of(table, "7^2_3")).row == (2, 3, 2, -2)


def test_7_2_6_twist_route(table):
    rep = two_component_genus(pd_of(table, "7^2_6"))
    assert rep.row == (2, 3, 2, -2)
    assert rep.route.startswith("twist@")
    assert rep.checks["twist_keeps_chi"]


def test_table_all_checks(table):
    for rec in table:
        rep = two_component_genus(parse_pd(rec.pd), oracle=True)
        assert rep.row == rec.expected, rec.name
        assert rep.m == 0 and rep.bracket_m == 0
        assert rep.chi_max == -rep.u_minus
        assert all(rep.checks.values())


def test_synthetic_negative_factor_link():
    link = hopf_sum_negative()
    assert link.n == 9 and link.n_components == 2
    rep = two_component_genus(link, oracle=True)
    assert rep.m == 1 and rep.bracket_m == 1
    assert rep.row == (3, 4, 3, -2)
    assert rep.min_genus == rep.u_minus - 1
    assert theorem_check(rep)


def test_bigon_free_random_links():
    links = bigon_free_links(8)
    for d in links:
        rep = two_component_genus(d)
        assert rep.route.startswith("twist@")
        assert theorem_check(rep)


def test_twist_route_reaches_negative_factor():
    ms = [two_component_genus(d).m for d in bigon_free_links(15)]
    assert 1 in ms


def test_pipeline_rejects_bad_input(trefoil, hopf):
    with pytest.raises(DiagramError):
        two_component_genus(trefoil)
    with pytest.raises(DiagramError):
        two_component_genus(hopf, max_crossings=1)


def test_pipeline_rejects_non_alternating(table):
    d = pd_of(table, "5^2_1")
    with pytest.raises(DiagramError):
        two_component_genus(flip_crossing(d, 0))


def test_pipeline_error_is_runtime_error():
    assert issubclass(PipelineError, RuntimeError)
