"""Diagram constructions: medial graphs of plane maps and connected sums.

The medial diagram of a connected plane map has one crossing per map edge.
Giving every crossing the same checkerboard type makes it alternating, and a
map without loops or bridges yields a reduced diagram.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .diagram import Crossing, DiagramError, PlanarDiagram, realternate

__all__ = [
    "PlaneMap",
    "random_plane_map",
    "random_alternating_diagram",
    "connected_sum",
    "torus_link",
]

Dart = tuple[int, int]


@dataclass
class PlaneMap:
    """A connected plane multigraph given by a rotation system.

    Attributes:
        edges: ``edges[e] = (u, v)``; dart ``(e, 0)`` leaves ``u`` and dart
            ``(e, 1)`` leaves ``v``.
        rotation: Counterclockwise dart order around each vertex.
    """

    edges: list[tuple[int, int]] = field(default_factory=list)
    rotation: list[list[Dart]] = field(default_factory=list)

    @classmethod
    def single_edge(cls) -> PlaneMap:
        return cls([(0, 1)], [[(0, 0)], [(0, 1)]])

    def tail(self, d: Dart) -> int:
        return self.edges[d[0]][d[1]]

    def _pos(self, d: Dart) -> int:
        return self.rotation[self.tail(d)].index(d)

    def succ(self, d: Dart) -> Dart:
        rot = self.rotation[self.tail(d)]
        return rot[(rot.index(d) + 1) % len(rot)]

    def pred(self, d: Dart) -> Dart:
        rot = self.rotation[self.tail(d)]
        return rot[(rot.index(d) - 1) % len(rot)]

    def add_parallel(self, e: int) -> int:
        """Add an edge parallel to ``e`` on its counterclockwise side."""
        u, v = self.edges[e]
        new = len(self.edges)
        self.edges.append((u, v))
        ru = self.rotation[u]
        ru.insert(ru.index((e, 0)) + 1, (new, 0))
        rv = self.rotation[v]
        rv.insert(rv.index((e, 1)), (new, 1))
        return new

    def subdivide(self, e: int) -> int:
        """Split ``e = (u, v)`` into ``(u, w)`` and a new edge ``(w, v)``."""
        u, v = self.edges[e]
        w = len(self.rotation)
        new = len(self.edges)
        self.edges[e] = (u, w)
        self.edges.append((w, v))
        rv = self.rotation[v]
        rv[rv.index((e, 1))] = (new, 1)
        self.rotation.append([(e, 1), (new, 0)])
        return new

    def add_chord(self, a: Dart, b: Dart) -> int:
        """Join the corners after darts ``a`` and ``b``; they must share a face."""
        u, v = self.tail(a), self.tail(b)
        new = len(self.edges)
        self.edges.append((u, v))
        ru = self.rotation[u]
        ru.insert(ru.index(a) + 1, (new, 0))
        rv = self.rotation[v]
        rv.insert(rv.index(b) + 1, (new, 1))
        return new

    def faces(self) -> list[list[Dart]]:
        """Face cycles as dart lists; a face continues with succ(reverse(d))."""
        seen: set[Dart] = set()
        out = []
        for e in range(len(self.edges)):
            for side in (0, 1):
                d = (e, side)
                if d in seen:
                    continue
                cyc = []
                while d not in seen:
                    seen.add(d)
                    cyc.append(d)
                    d = self.succ((d[0], 1 - d[1]))
                out.append(cyc)
        return out

    def has_bridge(self) -> bool:
        face_of = {}
        for k, cyc in enumerate(self.faces()):
            for d in cyc:
                face_of[d] = k
        return any(face_of[(e, 0)] == face_of[(e, 1)] for e in range(len(self.edges)))

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def medial(self) -> PlanarDiagram:
        """The alternating medial diagram, crossing ``e`` for map edge ``e``.

        Corners are labelled by the dart that opens them (the corner after
        ``a`` at its tail). For edge ``e`` from ``u`` to ``v`` the slots are
        NE, NW, SW, SE around the edge midpoint.
        """
        label = {}
        for rot in self.rotation:
            for a in rot:
                label[a] = len(label) + 1
        crossings = []
        for e in range(len(self.edges)):
            d, d2 = (e, 0), (e, 1)
            slots = (label[self.pred(d2)], label[d], label[self.pred(d)], label[d2])
            crossings.append(Crossing(e, slots))
        diagram = PlanarDiagram(tuple(crossings))
        return realternate(diagram)


def random_plane_map(n_edges: int, n_vertices: int, rng: random.Random) -> PlaneMap:
    """A random connected loopless plane map: a random tree plus chords."""
    if not 2 <= n_vertices <= n_edges + 1:
        raise ValueError("need 2 <= vertices <= edges + 1")
    pm = PlaneMap.single_edge()
    for _ in range(n_vertices - 2):
        e = rng.randrange(len(pm.edges))
        if rng.random() < 0.5:
            pm.subdivide(e)
        else:
            # hang a leaf at a random corner
            v = rng.randrange(len(pm.rotation))
            rot = pm.rotation[v]
            w = len(pm.rotation)
            new = len(pm.edges)
            pm.edges.append((v, w))
            rot.insert(rng.randrange(len(rot) + 1), (new, 0))
            pm.rotation.append([(new, 1)])
    while len(pm.edges) < n_edges:
        cyc = rng.choice(pm.faces())
        corners = [(d[0], 1 - d[1]) for d in cyc]
        pairs = [
            (a, b)
            for i, a in enumerate(corners)
            for b in corners[i + 1 :]
            if pm.tail(a) != pm.tail(b)
        ]
        if not pairs:
            continue
        a, b = rng.choice(pairs)
        pm.add_chord(a, b)
    return pm


def random_alternating_diagram(
    n_crossings: int,
    rng: random.Random,
    n_components: int | None = None,
    reduced: bool = True,
    max_tries: int = 10_000,
) -> PlanarDiagram:
    """A random connected alternating diagram with ``n_crossings`` crossings.

    Args:
        n_crossings: Crossing count, at least 1.
        rng: Source of randomness.
        n_components: Required component count, or None for any.
        reduced: Reject maps with bridges, so no nugatory crossings.
        max_tries: Give up after this many rejected samples.

    Raises:
        DiagramError: If no sample is accepted within ``max_tries``.
    """
    top = max(2, (n_crossings + 2) // 2)
    for _ in range(max_tries):
        pm = random_plane_map(n_crossings, rng.randint(2, top), rng)
        if reduced and pm.has_bridge():
            continue
        d = pm.medial()
        if n_components is not None and d.n_components != n_components:
            continue
        if rng.random() < 0.5:
            d = _mirror_crossings(d)
        return d
    raise DiagramError("no diagram found within the sampling budget")


def _mirror_crossings(d: PlanarDiagram) -> PlanarDiagram:
    return PlanarDiagram(
        tuple(Crossing(x.id, x.slots[1:] + x.slots[:1]) for x in d.crossings),  # type: ignore[arg-type]
        d.free_circles,
        d.has_over_under,
    )


def torus_link(n: int) -> PlanarDiagram:
    """The standard alternating diagram of the (2, n) torus link."""
    pm = PlaneMap.single_edge()
    for _ in range(n - 1):
        pm.add_parallel(0)
    return pm.medial()


def connected_sum(
    d1: PlanarDiagram, e1: int, d2: PlanarDiagram, e2: int
) -> PlanarDiagram:
    """Cut edge ``e1`` of ``d1`` and ``e2`` of ``d2`` and rejoin across.

    Crossings of ``d2`` get ids after those of ``d1`` and its labels are
    shifted. The result is re-alternated from the first crossing of ``d1``.
    """
    if not d1.crossings or not d2.crossings:
        raise DiagramError("connected sum needs crossings on both sides")
    off_id = max(d1.crossing_ids) + 1
    off_lab = max(d1.edges) + 1
    top = off_lab + max(d2.edges) + 1
    (p1, q1), (p2, q2) = d1.edges[e1], d2.edges[e2]
    # p1 keeps label e1 and meets q2; q1 gets a fresh label and meets p2
    fresh = top
    crossings = []
    for x in d1.crossings:
        slots = list(x.slots)
        if (x.id, q1[1]) == q1 and slots[q1[1]] == e1:
            slots[q1[1]] = fresh
        crossings.append(Crossing(x.id, tuple(slots)))  # type: ignore[arg-type]
    for x in d2.crossings:
        slots = [e + off_lab for e in x.slots]
        for s in range(4):
            if x.slots[s] == e2:
                slots[s] = fresh if (x.id, s) == p2 else e1
        crossings.append(Crossing(x.id + off_id, tuple(slots)))  # type: ignore[arg-type]
    d = PlanarDiagram(tuple(crossings))
    return realternate(d, reference=d1.crossing_ids[0])
