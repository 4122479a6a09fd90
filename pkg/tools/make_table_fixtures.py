"""Build the bundled two-component link table from Tait graphs.

Each diagram is the alternating medial diagram of an explicit plane map:
torus links from parallel edges, two-bridge links from series-parallel
ladders, Montesinos links from theta-type graphs, and the polyhedral link
from the tetrahedron with one doubled edge. Determinants (spanning-tree
counts of the Tait graph) are printed as an identification aid.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import networkx as nx

from splicegenus.diagram import canonical_code, parse_pd, find_inter_component_bigons, find_monogons, to_pd
from splicegenus.generate import PlaneMap, torus_link
from splicegenus.splice import Way, smooth
from splicegenus.surface import brute_chi_max

OUT = Path(__file__).resolve().parents[1] / "src" / "splicegenus" / "data" / "rolfsen_2comp.jsonl"


def determinant(d) -> int:
    """Spanning trees of the Tait graph on one colour class of faces."""
    face_of = {}
    for k, f in enumerate(d.all_faces):
        for c in f.corners:
            face_of[c] = k
    adj: dict[int, list[int]] = {}
    for c in d.crossing_ids:
        for i in range(4):
            a, b = face_of[(c, i)], face_of[(c, (i + 1) % 4)]
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    colour = {0: 0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b not in colour:
                colour[b] = 1 - colour[a]
                stack.append(b)
    g = nx.MultiGraph()
    g.add_nodes_from(k for k, v in colour.items() if v == 0)
    for c in d.crossing_ids:
        i = 0 if colour[face_of[(c, 0)]] == 0 else 1
        g.add_edge(face_of[(c, i)], face_of[(c, i + 2)])
    return round(nx.number_of_spanning_trees(g))


def rational(terms: list[int]):
    """Ladder for the continued fraction ``terms``; the marker edge is smoothed."""
    pm = PlaneMap.single_edge()
    marker = pm.add_parallel(0)
    for _ in range(terms[0] - 1):
        pm.subdivide(marker)
    for k, a in enumerate(terms[1:], start=1):
        for _ in range(a):
            if k % 2:
                pm.add_parallel(marker)
            else:
                pm.subdivide(marker)
    med = pm.medial()
    for way in (Way.A, Way.B):
        d = smooth(med, marker, way)
        if not find_monogons(d):
            return d, pm
    raise RuntimeError("no reduced closure")


def theta(branches: list[str]):
    """Branches between two poles: ``"p3"`` a 3-edge path, ``"t"`` path2 with a
    parallel edge, ``"d"`` an edge followed by a doubled edge."""
    pm = PlaneMap.single_edge()
    es = [0] + [pm.add_parallel(0) for _ in branches[1:]]
    for e, b in zip(es, branches):
        if b.startswith("p"):
            for _ in range(int(b[1:]) - 1):
                pm.subdivide(e)
        elif b == "t":
            pm.subdivide(e)
            pm.add_parallel(e)
        elif b == "d":
            f = pm.subdivide(e)
            pm.add_parallel(f)
    return pm.medial(), pm


def k4_doubled():
    pm = PlaneMap(
        [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
        [
            [(0, 0), (3, 0), (2, 1)],
            [(1, 0), (4, 0), (0, 1)],
            [(2, 0), (5, 0), (1, 1)],
            [(3, 1), (4, 1), (5, 1)],
        ],
    )
    pm.add_parallel(0)
    return pm.medial(), pm


def torus(n):
    pm = PlaneMap.single_edge()
    for _ in range(n - 1):
        pm.add_parallel(0)
    return torus_link(n), pm


EXPECTED = {
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

BUILD = {
    "2^2_1": lambda: torus(2),
    "4^2_1": lambda: torus(4),
    "5^2_1": lambda: rational([2, 1, 2]),
    "6^2_1": lambda: torus(6),
    "6^2_2": lambda: rational([3, 3]),
    "6^2_3": lambda: rational([2, 2, 2]),
    "7^2_1": lambda: rational([4, 1, 2]),
    "7^2_2": lambda: rational([2, 3, 2]),
    "7^2_3": lambda: rational([3, 1, 1, 2]),
    "7^2_4": lambda: theta(["p3", "p2", "p2"]),
    "7^2_5": lambda: theta(["d", "p2", "p2"]),
    "7^2_6": k4_doubled,
}


def main() -> int:
    rows = []
    for name, build in BUILD.items():
        d, _ = build()
        chi = brute_chi_max(d).chi_max
        bigons = len(find_inter_component_bigons(d))
        print(
            f"{name}: n={d.n} comps={d.n_components} det={determinant(d)} "
            f"chi={chi} inter-bigons={bigons}",
            file=sys.stderr,
        )
        rows.append({"name": name, "pd": to_pd(d), "expected": list(EXPECTED[name])})
    codes = {canonical_code(parse_pd(r["pd"])) for r in rows}
    assert len(codes) == len(rows), "duplicate diagrams"
    if "--write" in sys.argv:
        OUT.write_text("".join(json.dumps(r) + "\n" for r in rows))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
