"""Genus report for two-component alternating diagrams.

The route: make sure an inter-component 2-gon exists (adding a twist if
not), join the components at it, remove 1-gons, factor the knot, and
classify each factor. Surface data comes from the original diagram. Every
identity linking the two sides is checked and a failure raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .diagram import (
    Crossing,
    DiagramError,
    PlanarDiagram,
    find_inter_component_bigons,
    is_alternating,
    realternate,
)
from .factor import FactorReport, analyze_factors
from .search import (
    DEFAULT_MAX_CROSSINGS,
    DEFAULT_ORACLE_CAP,
    WitnessSequence,
    defer_ri,
    exhaustive_oracle,
    u_minus,
    u_minus_2,
)
from .splice import SpliceKind, SpliceMove, classify_splice, corner_way, count_state_circles, smooth
from .surface import (
    DEFAULT_BRUTE_CAP,
    adams_kindred,
    brute_chi_max,
    clark_check,
    genus_from_chi,
    seifert_genus,
)

__all__ = [
    "PipelineError",
    "GenusReport",
    "add_twist_bigons",
    "join_at_bigon",
    "two_component_genus",
    "theorem_check",
]

Variant = Literal["left", "right"]


class PipelineError(RuntimeError):
    """An internal identity failed; the message names it."""


def add_twist_bigons(d: PlanarDiagram, c: int, variant: Variant = "left") -> PlanarDiagram:
    """Replace an inter-component crossing by an alternating 3-crossing twist.

    With ``left`` the twist ends are slots {0,1} and {2,3} of ``c``; with
    ``right`` they are {1,2} and {3,0}. The strands keep their connections,
    so the component count is unchanged, and the two new faces between the
    twist crossings are inter-component 2-gons. ``c`` keeps its id for the
    first twist crossing; the other two get fresh ids.

    Raises:
        DiagramError: If ``c`` is a self-crossing.
    """
    s = d.slots(c)
    (cu, _), (co, _) = d.passage_info[c]
    if cu == co:
        raise DiagramError(f"crossing {c} is a self-crossing")
    if variant == "left":
        sw, se, ne, nw = s
    elif variant == "right":
        sw, se, ne, nw = s[1], s[2], s[3], s[0]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    top = max(d.edges)
    a, b, e, f = top + 1, top + 2, top + 3, top + 4
    y, z = max(d.crossing_ids) + 1, max(d.crossing_ids) + 2
    new = [
        Crossing(c, (sw, se, a, b)),
        Crossing(y, (b, a, e, f)),
        Crossing(z, (f, e, ne, nw)),
    ]
    crossings = [x for x in d.crossings if x.id != c] + new
    ref = next(x.id for x in d.crossings if x.id != c)
    return realternate(PlanarDiagram(tuple(crossings), d.free_circles), reference=ref)


def join_at_bigon(d: PlanarDiagram) -> tuple[PlanarDiagram, SpliceMove]:
    """Smooth one crossing of an inter-component 2-gon so it becomes a circle.

    The 2-gon with the smallest crossing ids is used, at its smaller
    crossing.

    Raises:
        DiagramError: If there is no inter-component 2-gon.
    """
    bigons = find_inter_component_bigons(d)
    if not bigons:
        raise DiagramError("no inter-component 2-gon")
    face = min(bigons, key=lambda f: f.crossing_ids)
    c, i = min(face.corners)
    way = corner_way(i)
    kind = classify_splice(d, c, way)
    return smooth(d, c, way), SpliceMove(c, way, kind)


@dataclass(frozen=True)
class GenusReport:
    """Invariants of one two-component alternating diagram.

    Attributes:
        u_minus: Splice-unknotting number of the diagram.
        u_minus_2: The variant that also counts the join.
        m: Number of negative factors on the route.
        bracket_m: Correction term ``[m]``.
        chi_max: Maximal state-surface Euler characteristic.
        C: Crosscap number.
        g: Orientable genus.
        min_genus: ``min(C, 2g)``.
        factors: Factor analysis of the reduced post-join knot.
        witness: An optimal splice sequence for ``u_minus``.
        route: ``"bigon"`` or ``"twist@<crossing>/<variant>"``.
        n_crossings: Crossings of the input.
        checks: Named identities and their outcomes.
    """

    u_minus: int
    u_minus_2: int
    m: int
    bracket_m: int
    chi_max: int
    C: int
    g: int
    min_genus: int
    factors: FactorReport
    witness: WitnessSequence
    route: str
    n_crossings: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def beta1(self) -> int:
        return self.C + 1

    @property
    def row(self) -> tuple[int, int, int, int]:
        return (self.u_minus, self.u_minus_2, self.C, self.chi_max)


def _witness_circles(base: PlanarDiagram, wit: WitnessSequence) -> bool:
    return count_state_circles(base, wit.state(flip_ri=True)) == wit.n_ri + 1


def two_component_genus(
    d: PlanarDiagram,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    oracle: bool = False,
    strict: bool = True,
) -> GenusReport:
    """Run the full route on a connected alternating two-component diagram.

    Args:
        d: The diagram.
        max_crossings: Cap on the input crossing count.
        oracle: Also compare against the brute-force oracles when in range.
        strict: Raise :class:`PipelineError` on the first failed check.

    Raises:
        DiagramError: Wrong component count, disconnected, or non-alternating.
        PipelineError: A check failed while ``strict``.
    """
    if d.n_components != 2:
        raise DiagramError(f"expected 2 components, got {d.n_components}")
    if not d.is_connected:
        raise DiagramError("disconnected diagram")
    if not is_alternating(d):
        raise DiagramError("diagram is not alternating")
    if d.n > max_crossings:
        raise DiagramError(f"{d.n} crossings exceed the cap of {max_crossings}")
    checks: dict[str, bool] = {}

    chi = adams_kindred(d)
    route_d = d
    route = "bigon"
    if not find_inter_component_bigons(d):
        best = None
        for c in d.crossing_ids:
            (cu, _), (co, _) = d.passage_info[c]
            if cu == co:
                continue
            for variant in ("left", "right"):
                cand = add_twist_bigons(d, c, variant)  # type: ignore[arg-type]
                val = adams_kindred(cand, exact_orientability=False).chi_max
                if best is None or val > best[0]:
                    best = (val, c, variant, cand)
        assert best is not None
        val, c, variant, route_d = best
        route = f"twist@{c}/{variant}"
        checks["twist_keeps_chi"] = val == chi.chi_max
        checks["twist_adds_two_crossings"] = route_d.n == d.n + 2

    knot, join = join_at_bigon(route_d)
    checks["join_is_s_join"] = join.kind is SpliceKind.S_JOIN and knot.n_components == 1
    knot_chi = adams_kindred(knot, exact_orientability=False)
    route_chi = adams_kindred(route_d, exact_orientability=False)
    checks["bigon_join_keeps_max_circles"] = knot_chi.max_circles == route_chi.max_circles

    fr = analyze_factors(knot, max_crossings=max_crossings)
    u_route = fr.u_minus_total

    u, wit = u_minus(d, max_crossings=max_crossings)
    u2, wit2 = u_minus_2(d, max_crossings=max_crossings)
    checks["u2_eq_u_plus_1"] = u2 == u + 1
    checks["single_join"] = wit.n_join == 1 and wit2.n_join == 1
    checks["route_u_eq_direct_u"] = u == u_route
    deferred = defer_ri(d, wit)
    checks["ri_deferral"] = deferred.counts == wit.counts

    gv = genus_from_chi(chi)
    g = seifert_genus(d)
    checks["genus_consistent"] = g == gv.g if gv.g_exact else g >= gv.g
    C = gv.C
    min_genus = min(C, 2 * g)
    checks["min_genus_eq_minus_chi"] = min_genus == gv.min_genus == -chi.chi_max
    checks["clark"] = clark_check(C, g, 2)

    # counting identities
    reduced = fr.reduced
    red_max = (
        brute_chi_max(reduced).max_circles if reduced.n <= DEFAULT_BRUTE_CAP
        else adams_kindred(reduced, exact_orientability=False).max_circles
    )
    su_reduced = reduced.n - u_route + 1
    ell = len(fr.factors)
    checks["witness_circle_count"] = _witness_circles(d, wit) and all(_witness_circles(f.diagram, f.witness) for f in fr.factors)
    ri_total = fr.ri_reduction_count + fr.nugatory_count + sum(f.witness.n_ri for f in fr.factors)
    checks["route_crossing_count"] = route_d.n == ri_total + u_route + 1
    checks["direct_crossing_count"] = d.n == wit.n_ri + u + 1
    checks["factor_circle_sum"] = red_max == (
        sum(f.max_circles for f in fr.factors) - (ell - 1) + fr.nugatory_count
    )
    checks["negative_factor_shift"] = red_max == su_reduced + fr.bracket_m
    if ell == 1 and fr.m == 0:
        checks["prime_nonnegative_su"] = red_max == su_reduced

    if oracle:
        if d.n <= DEFAULT_ORACLE_CAP:
            checks["oracle_u"] = exhaustive_oracle(d) == u
            checks["oracle_u2"] = exhaustive_oracle(d, count_join=True) == u2
        if d.n <= DEFAULT_BRUTE_CAP:
            checks["oracle_chi"] = brute_chi_max(d).chi_max == chi.chi_max

    report = GenusReport(
        u_minus=u,
        u_minus_2=u2,
        m=fr.m,
        bracket_m=fr.bracket_m,
        chi_max=chi.chi_max,
        C=C,
        g=g,
        min_genus=min_genus,
        factors=fr,
        witness=wit,
        route=route,
        n_crossings=d.n,
        checks=checks,
    )
    checks["theorem"] = theorem_check(report)
    if strict:
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            raise PipelineError("failed checks: " + ", ".join(failed))
    return report


def theorem_check(report: GenusReport) -> bool:
    """``min(C, 2g) = u- - [m] = u2- - 1 - [m]`` and ``chi = -min(C, 2g)``."""
    r = report
    return (
        r.min_genus == r.u_minus - r.bracket_m == r.u_minus_2 - 1 - r.bracket_m
        and r.chi_max == -r.min_genus
    )
