from __future__ import annotations

import pytest

from conftest import kinks
from splicegenus.diagram import DiagramError, flip_crossing, parse_pd
from splicegenus.generate import torus_link
from splicegenus.surface import (
    ChiReport,
    adams_kindred,
    beta1_convention,
    brute_chi_max,
    clark_check,
    genus_from_chi,
    seifert_genus,
)
from splicegenus.verify import random_corpus


def pd_of(table, name):
    return parse_pd(next(r.pd for r in table if r.name == name))


def test_trefoil_chi(trefoil):
    assert adams_kindred(trefoil).chi_max == 0
    assert brute_chi_max(trefoil).chi_max == 0


def test_hopf_chi(hopf):
    assert adams_kindred(hopf).chi_max == 0


def test_7_2_5_chi(table):
    assert adams_kindred(pd_of(table, "7^2_5")).chi_max == -2


def test_brute_matches_ak_on_table(table):
    for rec in table:
        d = parse_pd(rec.pd)
        a, b = adams_kindred(d), brute_chi_max(d)
        assert a.chi_max == b.chi_max == rec.expected[3], rec.name
        assert a.exists_nonorientable_max == b.exists_nonorientable_max
        assert a.exists_orientable_max == b.exists_orientable_max


def test_single_kink():
    assert brute_chi_max(kinks(1)).chi_max == 1


def test_brute_matches_ak_on_random():
    for d in random_corpus(11, 30, 8):
        a, b = adams_kindred(d), brute_chi_max(d)
        assert a.chi_max == b.chi_max
        assert a.exists_nonorientable_max == b.exists_nonorientable_max


def test_adams_kindred_needs_alternating(trefoil):
    with pytest.raises(DiagramError):
        adams_kindred(flip_crossing(trefoil, 0))


def test_achieving_states_attain_max(fig8):
    rep = brute_chi_max(fig8)
    assert rep.chi_max == -1
    assert all(s.chi(fig8.n) == rep.chi_max for s in rep.achieving_states)
    assert rep.max_circles == 3


def test_genus_from_chi_hopf(hopf):
    gv = genus_from_chi(adams_kindred(hopf))
    assert (gv.C, gv.g, gv.min_genus, gv.g_exact) == (1, 0, 0, True)


def test_genus_from_chi_6_2_3(table):
    gv = genus_from_chi(adams_kindred(pd_of(table, "6^2_3")))
    assert gv.C == 2 and gv.min_genus == 2


def test_genus_from_chi_only_orientable_maximizers():
    rep = ChiReport(-2, (), False, True, 2, 6)
    gv = genus_from_chi(rep)
    assert (gv.C, gv.g, gv.min_genus) == (3, 1, 2)


def test_genus_from_chi_only_nonorientable_maximizers():
    rep = ChiReport(-3, (), True, False, 2, 7)
    gv = genus_from_chi(rep)
    assert gv.C == 3 and not gv.g_exact and gv.g == 2


def test_seifert_genus():
    assert seifert_genus(torus_link(3)) == 1
    assert seifert_genus(torus_link(5)) == 2
    assert seifert_genus(torus_link(2)) == 0


def test_seifert_genus_depends_on_orientation():
    # parallel vs antiparallel T(2, 4): the better orientation gives genus 0
    assert seifert_genus(torus_link(4)) == 0


@pytest.mark.parametrize(
    "C, g, ok",
    [(1, 1, True), (3, 1, True), (4, 1, False), (1, 0, True), (2, 0, False), (7, 3, True)],
)
def test_clark_check(C, g, ok):
    assert clark_check(C, g, 2) is ok


def test_beta1_convention():
    assert beta1_convention(1, 2) == 2
    assert beta1_convention(2, 2) == 3
    assert beta1_convention(5, 1) == 5
