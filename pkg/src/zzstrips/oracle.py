"""Brute-force ground truth on the explicit benzenoid graph.

Everything here works edge-by-edge on the realized graph and knows
nothing about posets: perfect matchings by exhaustive branching, proper
sextets by direct pattern matching on hexagons, Clar covers by choosing
vertex-disjoint aromatic hexagons and matching the rest. The three ZZ
routes (cover histogram, sextet histogram, poset engine) must agree,
and the sextet pattern's orientation is deliberately falsifiable: the
mirrored pattern must break that agreement somewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dib_poset import Dib
from .errors import GuardExceeded
from .kekule_bijection import KekuleAssignment
from .order_polynomials import ZzPolynomial, binom
from .strip_geometry import BenzenoidGraph, Edge

MAX_ORACLE_VERTICES = 60

Matching = frozenset  # of Edge


@dataclass(frozen=True)
class ExplicitClarCover:
    """Aromatic hexagons (by index into graph.hexagons) plus a perfect
    matching of the remaining vertices."""

    hexagons: tuple[int, ...]
    matching: Matching

    @property
    def order(self) -> int:
        return len(self.hexagons)


def _check_guard(graph: BenzenoidGraph, max_vertices: int | None) -> None:
    limit = MAX_ORACLE_VERTICES if max_vertices is None else max_vertices
    if graph.num_vertices > limit:
        raise GuardExceeded(
            f"{graph.num_vertices} vertices exceed the oracle guard {limit}"
        )


def enumerate_perfect_matchings(
    graph: BenzenoidGraph, max_vertices: int | None = None
) -> list[Matching]:
    """All perfect matchings, by branching on the lowest uncovered vertex."""
    _check_guard(graph, max_vertices)
    return _matchings_avoiding(graph, frozenset())


def _matchings_avoiding(graph: BenzenoidGraph, removed: frozenset[int]) -> list[Matching]:
    order = [v for v in range(graph.num_vertices) if v not in removed]
    covered = set(removed)
    chosen: list[Edge] = []
    out: list[Matching] = []

    def branch() -> None:
        v = next((u for u in order if u not in covered), None)
        if v is None:
            out.append(frozenset(chosen))
            return
        for u in graph.adjacency[v]:
            if u in covered:
                continue
            edge = (v, u) if v < u else (u, v)
            covered.add(v)
            covered.add(u)
            chosen.append(edge)
            branch()
            chosen.pop()
            covered.remove(v)
            covered.remove(u)

    branch()
    return out


def _sextet_pattern(hexagon, mirrored: bool) -> tuple[Edge, Edge, Edge]:
    nw, left, sw, se, right, ne = hexagon.edges
    if mirrored:
        return (left, ne, se)
    return (right, nw, sw)


def count_proper_sextets(
    graph: BenzenoidGraph, matching: Matching, mirrored: bool = False
) -> int:
    """Hexagons covered by the right vertical bond plus the two left
    slants (the mirrored pattern exists only to prove tests can catch an
    orientation bug)."""
    count = 0
    for hexagon in graph.hexagons:
        if all(edge in matching for edge in _sextet_pattern(hexagon, mirrored)):
            count += 1
    return count


def _hexagon_conflicts(graph: BenzenoidGraph) -> list[set[int]]:
    vertex_sets = [set(h.vertices) for h in graph.hexagons]
    conflicts: list[set[int]] = [set() for _ in graph.hexagons]
    for i in range(len(vertex_sets)):
        for j in range(i + 1, len(vertex_sets)):
            if vertex_sets[i] & vertex_sets[j]:
                conflicts[i].add(j)
                conflicts[j].add(i)
    return conflicts


def enumerate_clar_covers(
    graph: BenzenoidGraph, max_vertices: int | None = None
) -> list[ExplicitClarCover]:
    """Every Clar cover: each vertex-disjoint hexagon set, completed by
    every perfect matching of what remains."""
    _check_guard(graph, max_vertices)
    conflicts = _hexagon_conflicts(graph)
    count = len(graph.hexagons)
    covers: list[ExplicitClarCover] = []
    chosen: list[int] = []

    def complete() -> None:
        removed = frozenset(v for i in chosen for v in graph.hexagons[i].vertices)
        for matching in _matchings_avoiding(graph, removed):
            covers.append(ExplicitClarCover(tuple(chosen), matching))

    def pick(start: int, blocked: set[int]) -> None:
        complete()
        for i in range(start, count):
            if i in blocked:
                continue
            chosen.append(i)
            pick(i + 1, blocked | conflicts[i])
            chosen.pop()

    pick(0, set())
    return covers


def zz_from_covers(covers: list[ExplicitClarCover]) -> ZzPolynomial:
    """Cover-order histogram read off directly."""
    if not covers:
        return ZzPolynomial.zero()
    top = max(c.order for c in covers)
    counts = [0] * (top + 1)
    for cover in covers:
        counts[cover.order] += 1
    return ZzPolynomial.from_coeffs(counts)


def zz_from_matchings(
    graph: BenzenoidGraph,
    matchings: list[Matching] | None = None,
    mirrored: bool = False,
) -> ZzPolynomial:
    """Proper-sextet histogram a(k), expanded through (x + 1)^k."""
    if matchings is None:
        matchings = enumerate_perfect_matchings(graph)
    if not matchings:
        return ZzPolynomial.zero()
    sextets = [count_proper_sextets(graph, m, mirrored=mirrored) for m in matchings]
    top = max(sextets)
    a = [0] * (top + 1)
    for s in sextets:
        a[s] += 1
    coeffs = [0] * (top + 1)
    for k, a_k in enumerate(a):
        for i in range(k + 1):
            coeffs[i] += a_k * binom(k, i)
    return ZzPolynomial.from_coeffs(coeffs)


def extract_ki(graph: BenzenoidGraph, matching: Matching) -> KekuleAssignment:
    """Read the double interface bonds of a matching into (k, j) -> pos
    form, numbering within each interface from the left."""
    profile = graph.profile
    elements: list[Dib] = []
    positions: list[int] = []
    for k in range(1, profile.m + 1):
        doubles = [
            p
            for p, bond in enumerate(graph.interface_bonds[k - 1], start=1)
            if bond in matching
        ]
        if len(doubles) != profile.order(k):
            raise ValueError(
                f"interface {k} holds {len(doubles)} double bonds, "
                f"expected {profile.order(k)}"
            )
        for j, p in enumerate(doubles, start=1):
            elements.append(Dib(k, j))
            positions.append(p)
    pairs = sorted(zip(elements, positions))
    return KekuleAssignment(
        tuple(e for e, _ in pairs), tuple(p for _, p in pairs)
    )
