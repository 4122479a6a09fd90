"""Acceptance criteria 1 to 8, one PASS/FAIL line each.

The lines are printed and repeated in the pytest terminal summary.
"""

from __future__ import annotations

import time

import pytest

from conftest import ACCEPTANCE_LINES, hopf_sum_negative
from splicegenus.cli import run_batch
from splicegenus.diagram import find_inter_component_bigons, parse_pd
from splicegenus.pipeline import two_component_genus, theorem_check
from splicegenus.surface import clark_check
from splicegenus.verify import (
    random_corpus,
    suite_connected_sum,
    suite_twist_chi,
    suite_oracle_chi,
    suite_oracle_u,
)

REFERENCE = {
    "2^2_1": (0, 1, 1, 0),
    "4^2_1": (0, 1, 1, 0),
    "5^2_1": (1, 2, 1, -1),
    "6^2_1": (0, 1, 1, 0),
    "6^2_2": (1, 2, 1, -1),
    "6^2_3": (2, 3, 2, -2),
    "7^2_1": (1, 2, 1, -1),
    "7^2_2": (2, 3, 2, -2),
    "7^2_3": (2, 3, 2, -2),
    "7^2_4": (1, 2, 1, -1),
    "7^2_5": (2, 3, 2, -2),
    "7^2_6": (2, 3, 2, -2),
}

STRUCTURAL = (
    "single_join",
    "u2_eq_u_plus_1",
    "witness_circle_count",
    "route_crossing_count",
    "direct_crossing_count",
    "factor_circle_sum",
    "negative_factor_shift",
)


def report(k: int, title: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def bigon_free(count: int, seed: int = 1):
    out = []
    for d in random_corpus(seed, 4000, 9, components=(2,)):
        if d.n >= 6 and not find_inter_component_bigons(d):
            out.append(d)
            if len(out) == count:
                break
    return out


@pytest.fixture(scope="module")
def table_diagrams(table):
    return [parse_pd(r.pd) for r in table]


@pytest.fixture(scope="module")
def link_corpus(table_diagrams):
    """Table links, 100 random links, bigon-free links, and the m = 1 link."""
    extra = list(random_corpus(1, 100, 9, components=(2,)))
    return table_diagrams + extra + bigon_free(8) + [hopf_sum_negative()]


@pytest.fixture(scope="module")
def link_reports(link_corpus):
    return [two_component_genus(d, strict=False) for d in link_corpus]


def test_criterion_1_table(table):
    start = time.perf_counter()
    rows = run_batch(table)
    elapsed = time.perf_counter() - start
    bad = [
        r.record.name
        for r in rows
        if r.report is None or r.report.row != REFERENCE[r.record.name]
    ]
    ok = not bad and len(rows) == 12 and elapsed < 60
    report(1, "table reproduction", ok, f"{12 - len(bad)}/12 rows, {elapsed:.1f}s")


def test_criterion_2_theorem(link_reports):
    bad = [i for i, r in enumerate(link_reports) if not theorem_check(r)]
    m_values = sorted({r.m for r in link_reports})
    report(
        2,
        "theorem identity",
        not bad and len(link_reports) >= 112,
        f"{len(link_reports) - len(bad)}/{len(link_reports)} links, m in {m_values}",
    )


def test_criterion_3_oracle_u(table_diagrams):
    res = suite_oracle_u(table_diagrams + list(random_corpus(0, 100, 7)))
    report(3, "u- search equals exhaustive oracle", res.ok, res.summary())


def test_criterion_4_oracle_chi(table_diagrams):
    res = suite_oracle_chi(table_diagrams + list(random_corpus(2, 100, 10)))
    report(4, "Adams-Kindred equals brute force", res.ok and res.passed >= 112, res.summary())


def test_criterion_5_structure(link_reports):
    bad = [
        (i, name)
        for i, r in enumerate(link_reports)
        for name in STRUCTURAL
        if not r.checks.get(name, False)
    ]
    report(
        5,
        "witness structure and counting identities",
        not bad,
        f"{len(link_reports)} runs x {len(STRUCTURAL)} checks, {len(bad)} violations",
    )


def test_criterion_6_twist_chi():
    res = suite_twist_chi(list(random_corpus(5, 50, 9, components=(2,))))
    report(6, "twist keeps chi_max, adds two crossings", res.ok and res.passed == 50, res.summary())


def test_criterion_7_clark(link_reports):
    bad = [
        i
        for i, r in enumerate(link_reports)
        if not (clark_check(r.C, r.g, 2) and r.checks["genus_consistent"])
    ]
    report(7, "C <= 2g + 1", not bad, f"{len(link_reports) - len(bad)}/{len(link_reports)} reports")


def test_criterion_8_connected_sum():
    res = suite_connected_sum(3, 20)
    report(8, "connected-sum additivity and factor recovery", res.ok and res.passed == 20, res.summary())


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
