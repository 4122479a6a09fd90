"""Maximal Euler characteristic of state surfaces, crosscap number, genus."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagram import DiagramError, PlanarDiagram, is_alternating
from .splice import (
    WAY_PAIRS,
    State,
    Way,
    corner_way,
    seifert_states,
    smooth,
)

__all__ = [
    "DEFAULT_BRUTE_CAP",
    "ChiReport",
    "GenusValues",
    "adams_kindred",
    "brute_chi_max",
    "max_circle_states",
    "genus_from_chi",
    "seifert_genus",
    "clark_check",
    "beta1_convention",
]

DEFAULT_BRUTE_CAP = 14


@dataclass(frozen=True)
class ChiReport:
    """Maximal state-surface Euler characteristic of a diagram.

    Attributes:
        chi_max: Largest ``|S| - n`` found.
        achieving_states: States attaining ``chi_max``.
        exists_nonorientable_max: Some state attaining ``chi_max`` is not a
            Seifert state.
        exists_orientable_max: Some Seifert state attains ``chi_max``.
        n_components: Component count of the diagram.
        n_crossings: Crossing count of the diagram.
    """

    chi_max: int
    achieving_states: tuple[State, ...]
    exists_nonorientable_max: bool
    exists_orientable_max: bool
    n_components: int
    n_crossings: int

    @property
    def max_circles(self) -> int:
        return self.chi_max + self.n_crossings


def _require_alternating(d: PlanarDiagram) -> None:
    if not d.is_connected:
        raise DiagramError("disconnected diagram")
    if not is_alternating(d):
        raise DiagramError("diagram is not alternating")


def _circle_counter(d: PlanarDiagram):
    """Return ``count(bits)`` for states encoded as bit masks (1 = way B)."""
    labels = {e: i for i, e in enumerate(d.edges)}
    ids = d.crossing_ids
    joins = []
    for cid in ids:
        s = d.slots(cid)
        joins.append(
            tuple(
                tuple((labels[s[i]], labels[s[j]]) for i, j in WAY_PAIRS[w])
                for w in (Way.A, Way.B)
            )
        )
    size = len(labels)
    free = d.free_circles

    def count(bits: int) -> int:
        parent = list(range(size))
        comps = size
        for k, opts in enumerate(joins):
            for a, b in opts[(bits >> k) & 1]:
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    comps -= 1
        return comps + free

    return ids, count


def max_circle_states(d: PlanarDiagram, cap: int = DEFAULT_BRUTE_CAP) -> tuple[int, list[State]]:
    """All states of maximal circle count, by enumeration of 2^n states."""
    if d.n > cap:
        raise DiagramError(f"{d.n} crossings exceed the brute-force cap of {cap}")
    ids, count = _circle_counter(d)
    best = -1
    winners: list[int] = []
    for bits in range(1 << len(ids)):
        k = count(bits)
        if k > best:
            best, winners = k, [bits]
        elif k == best:
            winners.append(bits)
    states = [
        State(
            tuple((cid, Way.B if (bits >> i) & 1 else Way.A) for i, cid in enumerate(ids)),
            best,
        )
        for bits in winners
    ]
    return best, states


def _nonorientable(d: PlanarDiagram, states: list[State]) -> bool:
    seif = {s.ways for s in seifert_states(d)}
    return any(s.ways not in seif for s in states)


def _orientable(d: PlanarDiagram, best: int) -> bool:
    return max(s.circles for s in seifert_states(d)) == best


def brute_chi_max(d: PlanarDiagram, cap: int = DEFAULT_BRUTE_CAP) -> ChiReport:
    """Exact maximum of ``|S| - n`` over every state.

    Raises:
        DiagramError: Above ``cap``.
    """
    best, states = max_circle_states(d, cap)
    return ChiReport(
        best - d.n,
        tuple(states),
        _nonorientable(d, states),
        _orientable(d, best),
        d.n_components,
        d.n,
    )


def _pick_face(d: PlanarDiagram):
    faces = [f for f in d.all_faces]
    m = min(f.degree for f in faces)
    return min((f for f in faces if f.degree == m), key=lambda f: f.crossing_ids)


def adams_kindred(d: PlanarDiagram, exact_orientability: bool = True) -> ChiReport:
    """Adams-Kindred smallest-face branching for alternating diagrams.

    Repeatedly take a face of least degree in the partly smoothed diagram
    (ties go to the smallest incident crossing ids). A 1-gon or 2-gon is
    closed into a circle by smoothing one crossing so the face's corner
    survives. A 3-gon branches: all three corners kept, or all three
    smoothed the opposite way. Terminal states of most circles are kept.

    Args:
        d: A connected alternating diagram.
        exact_orientability: When every terminal maximizer is a Seifert
            state, settle ``exists_nonorientable_max`` by enumerating all
            maximizing states, since the branching may miss some. This
            is exact up to the brute-force cap.

    Raises:
        DiagramError: For disconnected or non-alternating input.
    """
    _require_alternating(d)
    terminals: dict[tuple, State] = {}
    stack: list[tuple[PlanarDiagram, dict[int, Way]]] = [(d, {})]
    while stack:
        cur, ways = stack.pop()
        if not cur.crossings:
            st = State.of(d, ways)
            terminals[st.ways] = st
            continue
        face = _pick_face(cur)
        if face.degree <= 2:
            c, i = min(face.corners)
            stack.append((smooth(cur, c, corner_way(i)), {**ways, c: corner_way(i)}))
        elif face.degree == 3:
            for flip in (True, False):
                nxt, nw = cur, dict(ways)
                for c, i in face.corners:
                    w = corner_way(i) if not flip else corner_way(i).other
                    if c in nw:
                        continue
                    nxt = smooth(nxt, c, w)
                    nw[c] = w
                stack.append((nxt, nw))
        else:
            # cannot happen on a plane 4-valent graph; enumerate as a fallback
            rest = cur.crossing_ids
            for combo in itertools.product((Way.A, Way.B), repeat=len(rest)):
                st = State.of(d, {**ways, **dict(zip(rest, combo))})
                terminals[st.ways] = st
    best = max(s.circles for s in terminals.values())
    winners = [s for s in terminals.values() if s.circles == best]
    winners.sort(key=lambda s: s.ways)
    nonor = _nonorientable(d, winners)
    if not nonor and exact_orientability and d.n <= DEFAULT_BRUTE_CAP:
        _, every = max_circle_states(d)
        nonor = _nonorientable(d, every)
    return ChiReport(
        best - d.n, tuple(winners), nonor, _orientable(d, best), d.n_components, d.n
    )


@dataclass(frozen=True)
class GenusValues:
    """Crosscap number and genus derived from a ChiReport.

    Attributes:
        C: Crosscap number.
        g: Orientable genus, or a lower bound when ``g_exact`` is False.
        min_genus: ``2 - components - chi_max``, equal to ``min(C, 2g)``.
        g_exact: Whether ``g`` is exact.
    """

    C: int
    g: int
    min_genus: int
    g_exact: bool


def genus_from_chi(report: ChiReport) -> GenusValues:
    """Derive C and g from the maximal Euler characteristic.

    If a non-orientable state attains the maximum, ``C = min_genus``. The
    genus is then exact only if an orientable maximizer exists too;
    otherwise it is reported as the bound ``ceil(min_genus / 2)``. If every
    maximizer is orientable, ``2g = min_genus`` and ``C = min_genus + 1``.
    """
    k = report.n_components
    min_genus = 2 - k - report.chi_max
    if report.exists_nonorientable_max:
        if report.exists_orientable_max:
            return GenusValues(min_genus, min_genus // 2, min_genus, True)
        return GenusValues(min_genus, -(-min_genus // 2), min_genus, False)
    return GenusValues(min_genus + 1, min_genus // 2, min_genus, True)


def seifert_genus(d: PlanarDiagram) -> int:
    """Genus of the best Seifert surface over all orientations.

    For a reduced alternating diagram this is the orientable genus of the
    link (minimal over orientations).
    """
    best = max(s.circles for s in seifert_states(d))
    chi = best - d.n
    return (2 - d.n_components - chi) // 2


def clark_check(C: int, g: int, n_components: int = 2) -> bool:
    """The Clark-type inequality ``C <= 2g + 1``."""
    return C <= 2 * g + 1


def beta1_convention(C: int, n_components: int) -> int:
    """Crosscap number in the first-Betti-number convention."""
    return C + n_components - 1
