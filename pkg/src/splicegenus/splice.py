"""Smoothings, the splice taxonomy, and state circle counts."""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum

from .diagram import Crossing, DiagramError, PlanarDiagram

__all__ = [
    "Way",
    "SpliceKind",
    "SpliceMove",
    "State",
    "WAY_PAIRS",
    "smooth",
    "classify_splice",
    "seifert_way",
    "available_moves",
    "count_state_circles",
    "seifert_state",
    "seifert_states",
    "is_orientable_state_surface",
    "corner_way",
]


class Way(str, Enum):
    """Smoothing direction: A joins slots (0,1)(2,3), B joins (0,3)(1,2)."""

    A = "A"
    B = "B"

    @property
    def other(self) -> Way:
        return Way.B if self is Way.A else Way.A

    def __str__(self) -> str:
        return self.value


WAY_PAIRS: dict[Way, tuple[tuple[int, int], tuple[int, int]]] = {
    Way.A: ((0, 1), (2, 3)),
    Way.B: ((0, 3), (1, 2)),
}


class SpliceKind(str, Enum):
    S_MINUS = "S-"
    S_JOIN = "S-join"
    T_SPLIT = "T-split"
    RI_MINUS = "RI-"

    def __str__(self) -> str:
        return self.value


SEARCH_KINDS = frozenset({SpliceKind.S_MINUS, SpliceKind.S_JOIN, SpliceKind.RI_MINUS})


@dataclass(frozen=True, order=True)
class SpliceMove:
    crossing: int
    way: Way
    kind: SpliceKind

    def __str__(self) -> str:
        return f"{self.kind}@{self.crossing}{self.way}"


@dataclass(frozen=True)
class State:
    """A smoothing of every crossing of a base diagram.

    Attributes:
        ways: Sorted ``(crossing id, way)`` pairs.
        circles: Number of state circles, free circles included.
    """

    ways: tuple[tuple[int, Way], ...]
    circles: int

    @classmethod
    def of(cls, d: PlanarDiagram, ways: Mapping[int, Way]) -> State:
        return cls(tuple(sorted(ways.items())), count_state_circles(d, ways))

    def as_dict(self) -> dict[int, Way]:
        return dict(self.ways)

    def chi(self, n: int) -> int:
        return self.circles - n


def corner_way(corner: int) -> Way:
    """The way that keeps corner ``corner`` (between slots i, i+1) open."""
    return Way.A if corner % 2 == 0 else Way.B


def smooth(d: PlanarDiagram, cid: int, way: Way) -> PlanarDiagram:
    """Smooth crossing ``cid``; a loop closed off becomes a free circle.

    Raises:
        DiagramError: For an unknown crossing.
    """
    s = d.slots(cid)
    parent: dict[int, int] = {e: e for e in s}

    def find(a: int) -> int:
        while parent[a] != a:
            a = parent[a]
        return a

    for i, j in WAY_PAIRS[Way(way)]:
        a, b = find(s[i]), find(s[j])
        if a != b:
            parent[max(a, b)] = min(a, b)
    rename = {e: find(e) for e in s}
    rest = [x for x in d.crossings if x.id != cid]
    used = {e for x in rest for e in x.slots if e in rename}
    closed = len({rename[e] for e in s}) - len({rename[e] for e in used})
    return PlanarDiagram(
        tuple(
            Crossing(x.id, tuple(rename.get(e, e) for e in x.slots))  # type: ignore[arg-type]
            for x in rest
        ),
        d.free_circles + closed,
        d.has_over_under,
    )


def seifert_way(under_arrival: int, over_arrival: int) -> Way:
    """Orientation-consistent way given the arrival slots of both strands."""
    pair = {under_arrival % 4, (over_arrival + 2) % 4}
    return Way.A if pair in ({0, 1}, {2, 3}) else Way.B


def classify_splice(d: PlanarDiagram, cid: int, way: Way) -> SpliceKind:
    """Classify a smoothing by its effect on the component count.

    Inter-component crossings give S-join either way. At a self-crossing
    the orientation-consistent way splits (T-split); the other way keeps the
    component count and is RI- at a 1-gon crossing, S- otherwise.
    """
    d.slots(cid)
    (cu, au), (co, ao) = d.passage_info[cid]
    if cu != co:
        return SpliceKind.S_JOIN
    if Way(way) is seifert_way(au, ao):
        return SpliceKind.T_SPLIT
    if cid in d.monogon_crossings:
        return SpliceKind.RI_MINUS
    return SpliceKind.S_MINUS


def available_moves(d: PlanarDiagram, search: bool = False) -> list[SpliceMove]:
    """All classified moves, sorted; ``search`` drops T-split moves."""
    out = []
    for cid in d.crossing_ids:
        for way in (Way.A, Way.B):
            kind = classify_splice(d, cid, way)
            if search and kind is SpliceKind.T_SPLIT:
                continue
            out.append(SpliceMove(cid, way, kind))
    return out


def count_state_circles(d: PlanarDiagram, ways: Mapping[int, Way] | State) -> int:
    """Count the circles of a full state by union-find over edge labels.

    Raises:
        DiagramError: If some crossing has no way assigned.
    """
    if isinstance(ways, State):
        ways = ways.as_dict()
    parent = {e: e for e in d.edges}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in d.crossings:
        try:
            w = Way(ways[x.id])
        except KeyError:
            raise DiagramError(f"partial assignment: crossing {x.id} unset") from None
        for i, j in WAY_PAIRS[w]:
            a, b = find(x.slots[i]), find(x.slots[j])
            if a != b:
                parent[a] = b
    return len({find(e) for e in parent}) + d.free_circles


def seifert_state(d: PlanarDiagram, orientation: Sequence[int]) -> State:
    """The Seifert state for per-component directions ``orientation`` (±1).

    Directions are relative to the canonical traversal of each component.
    """
    if len(orientation) < len(d.traversals):
        raise DiagramError("orientation must cover every component")
    ways = {}
    for cid, ((cu, au), (co, ao)) in d.passage_info.items():
        if orientation[cu] < 0:
            au += 2
        if orientation[co] < 0:
            ao += 2
        ways[cid] = seifert_way(au, ao)
    return State.of(d, ways)


def seifert_states(d: PlanarDiagram) -> list[State]:
    """Seifert states for all orientations up to global reversal."""
    k = len(d.traversals)
    if k == 0:
        return [State((), d.free_circles)]
    out = []
    for rest in itertools.product((1, -1), repeat=k - 1):
        out.append(seifert_state(d, (1, *rest)))
    return out


def is_orientable_state_surface(d: PlanarDiagram, state: Mapping[int, Way] | State) -> bool:
    """True iff the state is the Seifert state of some orientation."""
    if isinstance(state, State):
        state = state.as_dict()
    ways = tuple(sorted((c, Way(w)) for c, w in state.items()))
    if len(ways) != d.n:
        raise DiagramError("partial assignment")
    return any(s.ways == ways for s in seifert_states(d))
