"""Seeded cross-check suites shared by the CLI and the test suite."""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from .diagram import DiagramError, PlanarDiagram, canonical_code, parse_pd, to_pd
from .factor import split_factors
from .generate import connected_sum, random_alternating_diagram
from .pipeline import PipelineError, add_twist_bigons, two_component_genus
from .search import exhaustive_oracle, u_minus, u_minus_2
from .surface import adams_kindred, brute_chi_max

__all__ = [
    "SuiteResult",
    "random_corpus",
    "prime_knot",
    "composite_knots",
    "suite_oracle_u",
    "suite_oracle_chi",
    "suite_theorem",
    "suite_twist_chi",
    "suite_connected_sum",
    "suite_parse_failure",
]

# crossing counts for which reduced alternating diagrams exist
_SIZES = {1: (3, 4, 5, 6, 7, 8, 9, 10), 2: (2, 4, 5, 6, 7, 8, 9, 10)}


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, label: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.passed} passed, {len(self.failures)} failed"


def random_corpus(
    seed: int,
    count: int,
    max_crossings: int,
    components: tuple[int, ...] = (1, 2),
    reduced: bool = True,
) -> Iterator[PlanarDiagram]:
    """Yield ``count`` seeded random connected alternating diagrams."""
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.choice(components)
        n = rng.choice([s for s in _SIZES[k] if s <= max_crossings])
        yield random_alternating_diagram(n, rng, n_components=k, reduced=reduced)


def prime_knot(n: int, rng: random.Random) -> PlanarDiagram:
    """A random reduced prime alternating knot diagram with ``n`` crossings."""
    while True:
        d = random_alternating_diagram(n, rng, n_components=1)
        factors, nug = split_factors(d)
        if nug == 0 and len(factors) == 1:
            return d


def composite_knots(
    seed: int, count: int
) -> Iterator[tuple[PlanarDiagram, list[PlanarDiagram]]]:
    """Connected sums of 2 or 3 prime factors with 3 to 5 crossings each."""
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.choice((2, 3))
        sizes = [rng.randint(3, 5) for _ in range(k)]
        while sum(sizes) > 12:
            sizes = [rng.randint(3, 4) for _ in range(k)]
        parts = [prime_knot(n, rng) for n in sizes]
        d = parts[0]
        for p in parts[1:]:
            d = connected_sum(d, rng.choice(list(d.edges)), p, rng.choice(list(p.edges)))
        yield d, parts


def _label(d: PlanarDiagram) -> str:
    return to_pd(d)


def suite_oracle_u(diagrams: list[PlanarDiagram], cap: int = 7) -> SuiteResult:
    """Memoized search against exhaustive enumeration (both variants)."""
    res = SuiteResult("oracle-u")
    for d in diagrams:
        if d.n > cap:
            continue
        ok = u_minus(d)[0] == exhaustive_oracle(d, cap=cap)
        if ok and d.n_components == 2:
            ok = u_minus_2(d)[0] == exhaustive_oracle(d, count_join=True, cap=cap)
        res.record(ok, _label(d))
    return res


def suite_oracle_chi(diagrams: list[PlanarDiagram], cap: int = 10) -> SuiteResult:
    """Adams-Kindred maximum against the full state enumeration."""
    res = SuiteResult("oracle-chi")
    for d in diagrams:
        if d.n > cap:
            continue
        a, b = adams_kindred(d), brute_chi_max(d)
        res.record(
            a.chi_max == b.chi_max
            and a.exists_nonorientable_max == b.exists_nonorientable_max,
            _label(d),
        )
    return res


def suite_theorem(diagrams: list[PlanarDiagram], oracle: bool = False) -> SuiteResult:
    """Full pipeline with every named check, on two-component diagrams."""
    res = SuiteResult("theorem")
    for d in diagrams:
        try:
            rep = two_component_genus(d, oracle=oracle, strict=False)
        except (PipelineError, DiagramError) as exc:
            res.record(False, f"{_label(d)}: {exc}")
            continue
        bad = [k for k, v in rep.checks.items() if not v]
        res.record(not bad, f"{_label(d)}: {','.join(bad)}")
    return res


def suite_twist_chi(diagrams: list[PlanarDiagram]) -> SuiteResult:
    """The better twist variant keeps chi_max and adds two crossings."""
    res = SuiteResult("twist-chi")
    for d in diagrams:
        chi = adams_kindred(d, exact_orientability=False)
        c = next(
            x for x in d.crossing_ids if d.passage_info[x][0][0] != d.passage_info[x][1][0]
        )
        best = None
        for variant in ("left", "right"):
            t = add_twist_bigons(d, c, variant)  # type: ignore[arg-type]
            tc = adams_kindred(t, exact_orientability=False)
            if best is None or tc.chi_max > best[1].chi_max:
                best = (t, tc)
        assert best is not None
        t, tc = best
        res.record(
            tc.chi_max == chi.chi_max
            and t.n == d.n + 2
            and t.n_components == 2
            and tc.max_circles == chi.max_circles + 2,
            _label(d),
        )
    return res


def suite_connected_sum(seed: int, count: int) -> SuiteResult:
    """Additivity of u- and recovery of the factors of connected sums."""
    res = SuiteResult("connected-sum")
    for d, parts in composite_knots(seed, count):
        factors, nug = split_factors(d)
        want = Counter(canonical_code(p, over_under=False) for p in parts)
        got = Counter(canonical_code(f, over_under=False) for f in factors)
        total = sum(u_minus(p)[0] for p in parts)
        res.record(nug == 0 and want == got and u_minus(d)[0] == total, _label(d))
    return res


def suite_parse_failure(corrupt: Callable[[str], str], good: str) -> SuiteResult:
    """A corrupted PD record must be rejected by the parser."""
    res = SuiteResult("parse-failure")
    try:
        parse_pd(corrupt(good))
    except DiagramError:
        res.record(True, "")
    else:
        res.record(False, "corrupted record parsed")
    return res
