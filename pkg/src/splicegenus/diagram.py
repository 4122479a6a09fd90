"""Planar link diagrams: parsing, faces, components, and canonical codes.

A diagram is a 4-valent plane graph. Each crossing lists the edge labels at
its four slots in counterclockwise order; slots 0 and 2 carry the
under-strand and slots 1 and 3 the over-strand. Crossingless circles are
tracked by a counter rather than as graph vertices.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "DiagramError",
    "Crossing",
    "Face",
    "PlanarDiagram",
    "parse_pd",
    "components",
    "faces",
    "is_alternating",
    "find_inter_component_bigons",
    "find_monogons",
    "canonical_code",
    "to_pd",
    "realternate",
    "reflect",
    "flip_crossing",
    "relabel",
]

Endpoint = tuple[int, int]


class DiagramError(ValueError):
    """Raised for malformed, non-planar, or unsupported diagrams."""


@dataclass(frozen=True)
class Crossing:
    """A crossing with edge labels at slots 0..3 in counterclockwise order."""

    id: int
    slots: tuple[int, int, int, int]


@dataclass(frozen=True)
class Face:
    """A face of a connected diagram.

    Attributes:
        corners: Cyclic sequence of ``(crossing id, i)`` incidences, where
            corner ``i`` lies between slots ``i`` and ``i + 1``.
        edges: Edge labels on the boundary, in traversal order.
    """

    corners: tuple[Endpoint, ...]
    edges: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.corners)

    @property
    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(sorted({c for c, _ in self.corners}))


@dataclass(frozen=True)
class PlanarDiagram:
    """An immutable link diagram.

    Attributes:
        crossings: Crossings in a fixed order; ids are stable under smoothing.
        free_circles: Number of crossingless circle components.
        has_over_under: False for bare projections.
    """

    crossings: tuple[Crossing, ...]
    free_circles: int = 0
    has_over_under: bool = True

    def __post_init__(self) -> None:
        if self.free_circles < 0:
            raise DiagramError("negative free circle count")
        counts: dict[int, int] = {}
        ids: set[int] = set()
        for x in self.crossings:
            if len(x.slots) != 4:
                raise DiagramError("malformed tuple")
            if x.id in ids:
                raise DiagramError(f"duplicate crossing id {x.id}")
            ids.add(x.id)
            for label in x.slots:
                counts[label] = counts.get(label, 0) + 1
        bad = sorted(label for label, k in counts.items() if k != 2)
        if bad:
            raise DiagramError(f"edge label {bad[0]} does not appear exactly twice")

    @property
    def n(self) -> int:
        """Number of crossings."""
        return len(self.crossings)

    @cached_property
    def _slots(self) -> dict[int, tuple[int, int, int, int]]:
        return {x.id: x.slots for x in self.crossings}

    def slots(self, cid: int) -> tuple[int, int, int, int]:
        """Return the edge labels at the slots of crossing ``cid``."""
        try:
            return self._slots[cid]
        except KeyError:
            raise DiagramError(f"unknown crossing {cid}") from None

    @property
    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self._slots))

    @cached_property
    def edges(self) -> dict[int, tuple[Endpoint, Endpoint]]:
        """Map each edge label to its two ``(crossing id, slot)`` endpoints."""
        ends: dict[int, list[Endpoint]] = {}
        for x in self.crossings:
            for s, label in enumerate(x.slots):
                ends.setdefault(label, []).append((x.id, s))
        return {label: (e[0], e[1]) for label, e in sorted(ends.items())}

    @cached_property
    def opposite(self) -> dict[Endpoint, Endpoint]:
        """Map each endpoint to the other endpoint of its edge."""
        out: dict[Endpoint, Endpoint] = {}
        for p, q in self.edges.values():
            out[p] = q
            out[q] = p
        return out

    @cached_property
    def traversals(self) -> tuple[tuple[Endpoint, ...], ...]:
        """Strand traversals, one per component that meets a crossing.

        Each traversal lists the ``(crossing id, arrival slot)`` passages in
        order. Components are ordered by smallest edge label, and each
        traversal starts by running along that edge from its first endpoint.
        """
        seen: set[int] = set()
        out = []
        for label, (p, q) in self.edges.items():
            if label in seen:
                continue
            passages = []
            arrive = q
            while True:
                c, s = arrive
                seen.add(self._slots[c][s])
                passages.append(arrive)
                exit_ = (c, (s + 2) % 4)
                arrive = self.opposite[exit_]
                if arrive == q:
                    break
            out.append(tuple(passages))
        return tuple(out)

    @cached_property
    def component_of(self) -> dict[int, int]:
        """Map each edge label to its component id."""
        out: dict[int, int] = {}
        for k, passages in enumerate(self.traversals):
            for c, s in passages:
                out[self._slots[c][s]] = k
        return out

    @cached_property
    def passage_info(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        """Per crossing: ``((component, arrival slot) for under, same for over)``."""
        info: dict[int, dict[int, tuple[int, int]]] = {}
        for k, passages in enumerate(self.traversals):
            for c, s in passages:
                info.setdefault(c, {})[s % 2] = (k, s)
        return {c: (d[0], d[1]) for c, d in info.items()}

    @property
    def n_components(self) -> int:
        return len(self.traversals) + self.free_circles

    @cached_property
    def pieces(self) -> tuple[tuple[int, ...], ...]:
        """Crossing ids of each connected piece of the underlying graph."""
        parent = {c: c for c in self._slots}

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (c1, _), (c2, _) in self.edges.values():
            r1, r2 = find(c1), find(c2)
            if r1 != r2:
                parent[max(r1, r2)] = min(r1, r2)
        groups: dict[int, list[int]] = {}
        for c in sorted(self._slots):
            groups.setdefault(find(c), []).append(c)
        return tuple(tuple(g) for g in sorted(groups.values()))

    @property
    def is_connected(self) -> bool:
        """True for a single piece with no free circles, or a lone circle."""
        if not self.crossings:
            return self.free_circles <= 1
        return len(self.pieces) == 1 and self.free_circles == 0

    @cached_property
    def all_faces(self) -> tuple[Face, ...]:
        """Faces of every connected piece, each piece traversed separately."""
        visited: set[Endpoint] = set()
        out = []
        for c in sorted(self._slots):
            for s in range(4):
                if (c, s) in visited:
                    continue
                corners = []
                edges = []
                cur = (c, s)
                while cur not in visited:
                    visited.add(cur)
                    corners.append(cur)
                    # leave through slot i+1 of the corner, arrive at the next one
                    out_slot = (cur[0], (cur[1] + 1) % 4)
                    edges.append(self._slots[cur[0]][out_slot[1]])
                    cur = self.opposite[out_slot]
                out.append(Face(tuple(corners), tuple(edges)))
        return tuple(out)

    @cached_property
    def monogon_crossings(self) -> frozenset[int]:
        out = set()
        for (c1, s1), (c2, s2) in self.edges.values():
            if c1 == c2 and (s1 - s2) % 4 in (1, 3):
                out.add(c1)
        return frozenset(out)

    def check_planar(self) -> None:
        """Raise unless every piece satisfies V - E + F = 2."""
        face_count: dict[int, int] = {}
        piece_of = {c: k for k, piece in enumerate(self.pieces) for c in piece}
        for f in self.all_faces:
            k = piece_of[f.corners[0][0]]
            face_count[k] = face_count.get(k, 0) + 1
        for k, piece in enumerate(self.pieces):
            v = len(piece)
            if v - 2 * v + face_count.get(k, 0) != 2:
                raise DiagramError("non-planar diagram: Euler check failed")


_TOKEN = re.compile(r"X\[([^\]]*)\]")
_CIRCLES = re.compile(r"circles\s*=\s*(\d+)")
_FLAG = "unoriented-projection"


def parse_pd(text: str, has_over_under: bool | None = None) -> PlanarDiagram:
    """Parse PD text into a validated diagram.

    Args:
        text: Tokens ``X[a,b,c,d]``, optionally wrapped in ``PD[...]``, with an
            optional ``circles=k`` header and ``unoriented-projection`` flag.
        has_over_under: Overrides the flag when given.

    Returns:
        The diagram. Crossing ids are the token positions 0, 1, ...

    Raises:
        DiagramError: On malformed tokens, bad edge multiplicities, or a
            failed planarity check.
    """
    free = 0
    m = _CIRCLES.search(text)
    if m:
        free = int(m.group(1))
    over_under = _FLAG not in text if has_over_under is None else has_over_under
    rest = _CIRCLES.sub(" ", text).replace(_FLAG, " ")
    crossings = []
    for k, tok in enumerate(_TOKEN.finditer(rest)):
        parts = [p.strip() for p in tok.group(1).split(",")]
        if len(parts) != 4 or not all(p.isdigit() and int(p) > 0 for p in parts):
            raise DiagramError(f"malformed tuple: X[{tok.group(1)}]")
        crossings.append(Crossing(k, tuple(int(p) for p in parts)))  # type: ignore[arg-type]
    leftover = _TOKEN.sub(" ", rest)
    leftover = re.sub(r"PD\[|\]|,|\s", "", leftover)
    if leftover:
        raise DiagramError(f"malformed tuple or stray text: {leftover[:20]!r}")
    d = PlanarDiagram(tuple(crossings), free, over_under)
    d.check_planar()
    return d


def components(d: PlanarDiagram) -> tuple[int, dict[int, int]]:
    """Return the component count (free circles included) and edge labeling."""
    return d.n_components, dict(d.component_of)


def faces(d: PlanarDiagram) -> list[Face]:
    """Return the faces of a connected diagram.

    Raises:
        DiagramError: If the diagram is disconnected.
    """
    if not d.is_connected:
        raise DiagramError("disconnected diagram")
    return list(d.all_faces)


def is_alternating(d: PlanarDiagram) -> bool:
    """True iff every edge runs from an under-slot to an over-slot."""
    if not d.has_over_under:
        raise DiagramError("diagram has no over/under data")
    return all((s1 - s2) % 2 == 1 for (_, s1), (_, s2) in d.edges.values())


def find_inter_component_bigons(d: PlanarDiagram) -> list[Face]:
    """Return the 2-gons whose two edges lie on distinct components."""
    comp = d.component_of
    return [
        f
        for f in d.all_faces
        if f.degree == 2 and comp[f.edges[0]] != comp[f.edges[1]]
    ]


def find_monogons(d: PlanarDiagram) -> list[int]:
    """Return the sorted ids of crossings incident to a 1-gon."""
    return sorted(d.monogon_crossings)


def _bfs_code(
    d: PlanarDiagram,
    root: int,
    start: int,
    step: int,
    over_under: bool,
    best: list[int] | None,
) -> list[int] | None:
    """Breadth-first relabeling code, or None once it exceeds ``best``."""
    num = {root: 0}
    entry = {root: start}
    order = [root]
    out: list[int] = []
    opp = d.opposite
    tied = best is not None
    i = 0

    def push(v: int) -> bool:
        nonlocal tied
        if tied:
            b = best[len(out)]  # type: ignore[index]
            if v > b:
                return False
            if v < b:
                tied = False
        out.append(v)
        return True

    while i < len(order):
        c = order[i]
        i += 1
        e = entry[c]
        if over_under and not push(e % 2):
            return None
        for k in range(4):
            c2, s2 = opp[(c, (e + step * k) % 4)]
            if c2 not in num:
                num[c2] = len(order)
                order.append(c2)
                entry[c2] = s2
            if not push(num[c2]) or not push(((s2 - entry[c2]) * step) % 4):
                return None
    return out


def canonical_code(d: PlanarDiagram, over_under: bool | None = None) -> str:
    """Return a string invariant under relabeling and reflection.

    Each connected piece is coded as the lexicographic minimum, over every
    root crossing, root slot and rotation sense, of a breadth-first
    relabeling. Piece codes are sorted and the free circle count appended.

    Args:
        d: The diagram.
        over_under: Include crossing information. Defaults to
            ``d.has_over_under``.
    """
    if over_under is None:
        over_under = d.has_over_under
    codes = []
    for piece in d.pieces:
        best: list[int] | None = None
        for root in piece:
            for start in range(4):
                for step in (1, -1):
                    code = _bfs_code(d, root, start, step, over_under, best)
                    if code is not None:
                        best = code
        codes.append(tuple(best))  # type: ignore[arg-type]
    codes.sort(key=lambda t: (len(t), t))
    body = ";".join(".".join(map(str, t)) for t in codes)
    tag = "u" if over_under else "p"
    return f"{tag}{d.n}:{body}|o{d.free_circles}"


def to_pd(d: PlanarDiagram) -> str:
    """Render an oriented PD string with edges numbered along components.

    Each crossing is rotated so slot 0 is the incoming under-strand.
    """
    label: dict[int, int] = {}
    nxt = 1
    for passages in d.traversals:
        for c, s in passages:
            label[d.slots(c)[s]] = nxt
            nxt += 1
    under_in = {c: u[1] for c, (u, _) in d.passage_info.items()}
    toks = []
    for x in d.crossings:
        r = under_in[x.id]
        rot = [label[x.slots[(r + k) % 4]] for k in range(4)]
        toks.append("X[" + ",".join(map(str, rot)) + "]")
    head = []
    if d.free_circles:
        head.append(f"circles={d.free_circles}")
    if not d.has_over_under:
        head.append(_FLAG)
    return " ".join(head + toks)


def relabel(d: PlanarDiagram, mapping: Mapping[int, int]) -> PlanarDiagram:
    """Rename edge labels through ``mapping`` (missing labels are kept)."""
    return PlanarDiagram(
        tuple(
            Crossing(x.id, tuple(mapping.get(e, e) for e in x.slots))  # type: ignore[arg-type]
            for x in d.crossings
        ),
        d.free_circles,
        d.has_over_under,
    )


def reflect(d: PlanarDiagram) -> PlanarDiagram:
    """Mirror the plane: reverse every rotation, keeping slot 0 under."""
    return PlanarDiagram(
        tuple(
            Crossing(x.id, (x.slots[0], x.slots[3], x.slots[2], x.slots[1]))
            for x in d.crossings
        ),
        d.free_circles,
        d.has_over_under,
    )


def flip_crossing(d: PlanarDiagram, cid: int) -> PlanarDiagram:
    """Swap over and under at one crossing."""
    d.slots(cid)
    return PlanarDiagram(
        tuple(
            Crossing(x.id, x.slots[1:] + x.slots[:1]) if x.id == cid else x  # type: ignore[arg-type]
            for x in d.crossings
        ),
        d.free_circles,
        d.has_over_under,
    )


def realternate(d: PlanarDiagram, reference: int | None = None) -> PlanarDiagram:
    """Assign over/under so the diagram alternates.

    The crossing ``reference`` (default: smallest id) keeps its under pair;
    every other crossing is fixed by propagation along edges, and rotated by
    one slot where needed so that slots 0 and 2 stay under.

    Raises:
        DiagramError: If propagation is inconsistent (cannot happen for a
            planar diagram).
    """
    if not d.crossings:
        return PlanarDiagram((), d.free_circles, True)
    flip: dict[int, int] = {}
    ids = d.crossing_ids
    starts = list(ids)
    if reference is not None:
        starts.remove(reference)
        starts.insert(0, reference)
    for root in starts:
        if root in flip:
            continue
        flip[root] = 0
        stack = [root]
        while stack:
            c = stack.pop()
            for s in range(4):
                c2, s2 = d.opposite[(c, s)]
                under_here = (s % 2) == flip[c]
                # the far end must be over if this end is under
                want = (s2 % 2) if not under_here else 1 - (s2 % 2)
                if c2 in flip:
                    if flip[c2] != want:
                        raise DiagramError("cannot alternate this projection")
                else:
                    flip[c2] = want
                    stack.append(c2)
    return PlanarDiagram(
        tuple(
            Crossing(x.id, x.slots[1:] + x.slots[:1]) if flip[x.id] else x  # type: ignore[arg-type]
            for x in d.crossings
        ),
        d.free_circles,
        True,
    )


def diagram_from_crossings(
    crossings: Iterable[tuple[int, int, int, int]], free_circles: int = 0
) -> PlanarDiagram:
    """Build a diagram with ids 0, 1, ... from raw slot tuples."""
    return PlanarDiagram(
        tuple(Crossing(k, tuple(t)) for k, t in enumerate(crossings)),  # type: ignore[arg-type]
        free_circles,
    )
