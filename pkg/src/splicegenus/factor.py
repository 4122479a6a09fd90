"""Monogon reduction, prime factors of knot diagrams, and negative factors."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Crossing, DiagramError, PlanarDiagram, is_alternating
from .search import DEFAULT_MAX_CROSSINGS, WitnessSequence, u_minus
from .splice import SpliceKind, Way, classify_splice, smooth
from .surface import ChiReport, brute_chi_max

__all__ = [
    "FactorError",
    "FactorInfo",
    "FactorReport",
    "reduce_monogons",
    "prime_factors",
    "split_factors",
    "is_negative_factor",
    "bracket_m",
    "analyze_factors",
]


class FactorError(ValueError):
    """Raised when factor-level consistency checks fail."""


def reduce_monogons(d: PlanarDiagram) -> tuple[PlanarDiagram, int]:
    """Apply RI- at 1-gon crossings (smallest id first) until none remain."""
    if d.n_components != 1:
        raise DiagramError("reduce_monogons needs a knot diagram")
    count = 0
    while d.monogon_crossings:
        c = min(d.monogon_crossings)
        way = next(
            w for w in (Way.A, Way.B) if classify_splice(d, c, w) is SpliceKind.RI_MINUS
        )
        d = smooth(d, c, way)
        count += 1
    return d, count


def _closed_interval(word: list[int]) -> tuple[int, int] | None:
    """Shortest cyclic interval ``(start, length)`` closed under pairing.

    Lengths range over ``2 .. len(word) - 2``; ties go to the smallest start.
    """
    size = len(word)
    best = None
    for i in range(size):
        open_ = set()
        for length in range(1, size - 1):
            c = word[(i + length - 1) % size]
            if c in open_:
                open_.remove(c)
            else:
                open_.add(c)
            if length >= 2 and not open_:
                if best is None or length < best[1]:
                    best = (i, length)
                break
    return best


def _cut(d: PlanarDiagram, inside: set[int], e_in: int, e_out: int):
    def part(keep):
        return tuple(
            Crossing(x.id, tuple(e_in if e == e_out else e for e in x.slots))  # type: ignore[arg-type]
            for x in d.crossings
            if keep(x.id)
        )

    a = PlanarDiagram(part(lambda c: c in inside), 0, d.has_over_under)
    b = PlanarDiagram(part(lambda c: c not in inside), 0, d.has_over_under)
    return a, b


def _shares_face(d: PlanarDiagram, e1: int, e2: int) -> bool:
    return any(e1 in f.edges and e2 in f.edges for f in d.all_faces)


def split_factors(d: PlanarDiagram) -> tuple[list[PlanarDiagram], int]:
    """Split a knot diagram along 2-edge cuts until every piece is prime.

    Returns:
        The prime factors with at least two crossings, ordered by smallest
        crossing id, and the number of one-crossing (nugatory) pieces.
    """
    if d.n_components != 1 or not d.is_connected:
        raise DiagramError("prime factorization needs a connected knot diagram")
    if not d.crossings:
        return [], 0
    (passages,) = d.traversals
    word = [c for c, _ in passages]
    hit = _closed_interval(word)
    if hit is None:
        if d.n == 1:
            return [], 1
        return [d], 0
    i, length = hit
    size = len(word)
    inside = {word[(i + k) % size] for k in range(length)}
    first = passages[i]
    last = passages[(i + length - 1) % size]
    e_in = d.slots(first[0])[first[1]]
    e_out = d.slots(last[0])[(last[1] + 2) % 4]
    if not _shares_face(d, e_in, e_out):
        raise FactorError("cut edges do not bound a common face")
    factors: list[PlanarDiagram] = []
    nugatory = 0
    for piece in _cut(d, inside, e_in, e_out):
        f, k = split_factors(piece)
        factors.extend(f)
        nugatory += k
    factors.sort(key=lambda f: min(f.crossing_ids))
    return factors, nugatory


def prime_factors(d: PlanarDiagram) -> list[PlanarDiagram]:
    """Prime factors of a reduced knot diagram, by smallest crossing id."""
    if d.monogon_crossings:
        raise DiagramError("diagram is not reduced")
    return split_factors(d)[0]


def is_negative_factor(
    factor: PlanarDiagram,
    u_value: int | None = None,
    chi: ChiReport | None = None,
) -> bool:
    """True iff no non-orientable state attains the maximal Euler characteristic.

    The answer is cross-checked against ``u- = 2 - chi`` (negative) versus
    ``u- = 1 - chi`` (not negative).

    Raises:
        FactorError: If the two criteria disagree ("criterion mismatch").
    """
    if not is_alternating(factor):
        raise DiagramError("factor is not alternating")
    if chi is None:
        chi = brute_chi_max(factor)
    if u_value is None:
        u_value = u_minus(factor)[0]
    negative = not chi.exists_nonorientable_max
    expected = (2 if negative else 1) - chi.chi_max
    if u_value != expected:
        raise FactorError(
            f"criterion mismatch: u-={u_value}, chi={chi.chi_max}, negative={negative}"
        )
    return negative


def bracket_m(m: int) -> int:
    """The correction term: ``m`` for ``m`` in {0, 1}, else ``m - 1``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return m if m <= 1 else m - 1


@dataclass(frozen=True)
class FactorInfo:
    diagram: PlanarDiagram
    u_minus: int
    chi_max: int
    max_circles: int
    is_negative: bool
    witness: WitnessSequence

    @property
    def b_value(self) -> int:
        """``u- - 1`` for a negative factor, else ``u-``."""
        return self.u_minus - (1 if self.is_negative else 0)


@dataclass(frozen=True)
class FactorReport:
    """Prime factors of the reduced post-join knot diagram.

    Attributes:
        factors: Per-factor data, ordered by smallest crossing id.
        m: Number of negative factors.
        bracket_m: The correction ``[m]``.
        ri_reduction_count: RI- moves used to reach the reduced diagram.
        nugatory_count: One-crossing pieces dropped during splitting.
        reduced: The reduced diagram that was factored.
    """

    factors: tuple[FactorInfo, ...]
    m: int
    bracket_m: int
    ri_reduction_count: int
    nugatory_count: int
    reduced: PlanarDiagram

    @property
    def u_minus_total(self) -> int:
        return sum(f.u_minus for f in self.factors)


def analyze_factors(
    knot: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> FactorReport:
    """Reduce, factor, and classify every factor of a knot diagram."""
    reduced, ri = reduce_monogons(knot)
    pieces, nugatory = split_factors(reduced)
    infos = []
    for f in pieces:
        val, wit = u_minus(f, max_crossings=max_crossings)
        chi = brute_chi_max(f)
        neg = is_negative_factor(f, val, chi)
        infos.append(FactorInfo(f, val, chi.chi_max, chi.max_circles, neg, wit))
    m = sum(f.is_negative for f in infos)
    return FactorReport(tuple(infos), m, bracket_m(m), ri, nugatory, reduced)
