"""Splice-unknotting numbers by uniform-cost search, plus a brute-force oracle."""

from __future__ import annotations

import heapq
import itertools
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

from .diagram import DiagramError, PlanarDiagram, canonical_code
from .splice import (
    WAY_PAIRS,
    SpliceKind,
    SpliceMove,
    Way,
    available_moves,
    classify_splice,
    seifert_way,
    smooth,
)

__all__ = [
    "DEFAULT_MAX_CROSSINGS",
    "DEFAULT_ORACLE_CAP",
    "SearchError",
    "WitnessSequence",
    "u_minus",
    "u_minus_2",
    "exhaustive_oracle",
    "replay",
    "defer_ri",
]

DEFAULT_MAX_CROSSINGS = 12
DEFAULT_ORACLE_CAP = 7


class SearchError(ValueError):
    """Raised when a diagram is outside the search's domain."""


@dataclass(frozen=True)
class WitnessSequence:
    """A splice sequence from a diagram to the crossingless circle.

    Attributes:
        moves: The moves in order.
        diagrams: The start diagram followed by the result of each move.
    """

    moves: tuple[SpliceMove, ...]
    diagrams: tuple[PlanarDiagram, ...] = field(repr=False)

    @property
    def counts(self) -> Counter[SpliceKind]:
        return Counter(m.kind for m in self.moves)

    @property
    def n_s_minus(self) -> int:
        return self.counts[SpliceKind.S_MINUS]

    @property
    def n_join(self) -> int:
        return self.counts[SpliceKind.S_JOIN]

    @property
    def n_ri(self) -> int:
        return self.counts[SpliceKind.RI_MINUS]

    @property
    def terminal(self) -> PlanarDiagram:
        return self.diagrams[-1]

    def state(self, flip_ri: bool = True) -> dict[int, Way]:
        """The base-diagram state recorded by the moves.

        With ``flip_ri`` each RI- is replaced by its loop-detaching way, the
        T-split that pairs with it.
        """
        out = {}
        for m in self.moves:
            w = m.way
            if flip_ri and m.kind is SpliceKind.RI_MINUS:
                w = w.other
            out[m.crossing] = w
        return out


def _check_domain(d: PlanarDiagram, max_crossings: int) -> None:
    if d.n > max_crossings:
        raise SearchError(f"{d.n} crossings exceed the cap of {max_crossings}")
    if not d.is_connected:
        raise SearchError("disconnected diagram")
    if d.n_components > 2:
        raise SearchError(f"{d.n_components} components; at most 2 supported")


def _is_goal(d: PlanarDiagram) -> bool:
    return d.n == 0 and d.free_circles == 1


def _search(
    d: PlanarDiagram, join_cost: int, max_crossings: int
) -> tuple[int, WitnessSequence]:
    _check_domain(d, max_crossings)
    start = canonical_code(d, over_under=False)
    dist = {start: 0}
    rep = {start: d}
    parent: dict[str, tuple[str, SpliceMove]] = {}
    tick = itertools.count()
    heap = [(0, next(tick), start)]
    done = set()
    while heap:
        cost, _, code = heapq.heappop(heap)
        if code in done:
            continue
        done.add(code)
        cur = rep[code]
        if _is_goal(cur):
            moves = []
            diagrams = [cur]
            while code != start:
                code, mv = parent[code]
                moves.append(mv)
                diagrams.append(rep[code])
            return cost, WitnessSequence(tuple(reversed(moves)), tuple(reversed(diagrams)))
        for mv in available_moves(cur, search=True):
            step = 1 if mv.kind is SpliceKind.S_MINUS else 0
            if mv.kind is SpliceKind.S_JOIN:
                step = join_cost
            nxt = smooth(cur, mv.crossing, mv.way)
            ncode = canonical_code(nxt, over_under=False)
            if ncode in done:
                continue
            if ncode not in dist or cost + step < dist[ncode]:
                dist[ncode] = cost + step
                rep[ncode] = nxt
                parent[ncode] = (code, mv)
                heapq.heappush(heap, (cost + step, next(tick), ncode))
    raise SearchError("no admissible splice sequence reaches the circle")


def u_minus(
    d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> tuple[int, WitnessSequence]:
    """Minimal number of S- splices over {S-, S-join, RI-} sequences.

    Args:
        d: A connected diagram with one or two components.
        max_crossings: Hard cap on the crossing count.

    Returns:
        The value and a witness realizing it.

    Raises:
        SearchError: Outside the domain or above the cap.
    """
    return _search(d, 0, max_crossings)


def u_minus_2(
    d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> tuple[int, WitnessSequence]:
    """Like :func:`u_minus` but S-join splices also cost 1."""
    if d.n_components != 2:
        raise SearchError("u_minus_2 needs a two-component diagram")
    return _search(d, 1, max_crossings)


def exhaustive_oracle(
    d: PlanarDiagram, count_join: bool = False, cap: int = DEFAULT_ORACLE_CAP
) -> int:
    """Minimum over every admissible sequence, by plain depth-first search.

    This works on the base diagram directly: a partial smoothing is a dict
    of chosen ways and curves are re-traced from scratch at every node. It
    shares no code with the memoized search beyond the way definitions.

    Raises:
        SearchError: Above ``cap`` or outside the domain.
    """
    _check_domain(d, cap)
    opp = d.opposite
    base_free = d.free_circles

    def trace(ways: dict[int, Way]):
        # Walk curves between unsmoothed crossings; smoothed ones are bypassed.
        partner = {}
        for c, w in ways.items():
            for i, j in WAY_PAIRS[w]:
                partner[(c, i)] = (c, j)
                partner[(c, j)] = (c, i)

        def run(exit_):
            # follow from an exit endpoint to the next unsmoothed arrival
            p = opp[exit_]
            while p in partner:
                p = opp[partner[p]]
            return p

        live = [c for c in d.crossing_ids if c not in ways]
        seen_arrivals = set()
        curves = []
        for c in live:
            for s in range(4):
                if (c, s) in seen_arrivals:
                    continue
                seq = []
                a = (c, s)
                while a not in seen_arrivals:
                    seen_arrivals.add(a)
                    seq.append(a)
                    a = run((a[0], (a[1] + 2) % 4))
                curves.append(seq)
        loops = 0
        if not live:
            # every endpoint is now paired; count the closed loops
            seen_ends = set()
            for c in ways:
                for s in range(4):
                    if (c, s) in seen_ends:
                        continue
                    loops += 1
                    p = (c, s)
                    while p not in seen_ends:
                        seen_ends.add(p)
                        q = opp[p]
                        seen_ends.add(q)
                        p = partner[q]
        return live, curves, loops, run

    def best(ways: dict[int, Way]) -> int:
        live, curves, loops, run = trace(ways)
        if not live:
            return 0 if loops + base_free == 1 else _INF
        where = {}
        for k, seq in enumerate(curves):
            for a in seq:
                where[a] = k
        result = _INF
        for c in live:
            # directed curve through the under arrival at slot 0
            k = where[(c, 0)]
            ao = next((t for t in (1, 3) if where[(c, t)] == k), None)
            loop = any(
                run((c, (s + 2) % 4))[0] == c
                and (run((c, (s + 2) % 4))[1] - (s + 2)) % 4 in (1, 3)
                for s in range(4)
            )
            for w in (Way.A, Way.B):
                if ao is None:
                    cost = 1 if count_join else 0
                else:
                    if w is seifert_way(0, ao):
                        continue
                    cost = 0 if loop else 1
                sub = best({**ways, c: w})
                if cost + sub < result:
                    result = cost + sub
        return result

    value = best({})
    if value >= _INF:
        raise SearchError("no admissible splice sequence reaches the circle")
    return value


_INF = 10**9


def replay(d: PlanarDiagram, moves: Sequence[SpliceMove]) -> WitnessSequence:
    """Re-apply moves, re-deriving each kind from the current diagram.

    Raises:
        SearchError: If a move is a T-split or its kind has changed.
    """
    cur = d
    diagrams = [cur]
    out = []
    for mv in moves:
        kind = classify_splice(cur, mv.crossing, mv.way)
        if kind is SpliceKind.T_SPLIT:
            raise SearchError(f"move {mv} is a T-split here")
        if kind is not mv.kind:
            raise SearchError(f"move {mv} replays as {kind}")
        cur = smooth(cur, mv.crossing, mv.way)
        out.append(mv)
        diagrams.append(cur)
    return WitnessSequence(tuple(out), tuple(diagrams))


def defer_ri(d: PlanarDiagram, witness: WitnessSequence) -> WitnessSequence:
    """Reorder a witness so every RI- comes last, and replay it."""
    first = [m for m in witness.moves if m.kind is not SpliceKind.RI_MINUS]
    last = [m for m in witness.moves if m.kind is SpliceKind.RI_MINUS]
    out = replay(d, first + last)
    if not _is_goal(out.terminal):
        raise DiagramError("reordered witness does not end at the circle")
    return out
