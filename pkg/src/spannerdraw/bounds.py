"""Executable bound arguments and spanning-ratio-1 recognizers.

The annulus census makes the degree/edge-length-ratio lower-bound argument
checkable on concrete drawings: if any annulus around a vertex holds more than
48*s^2 neighbors, the drawing's spanning ratio must exceed s. The recognizers
decide which graphs admit drawings of spanning ratio exactly 1 (any drawing:
Hamiltonian path; planar drawing: five explicit graph classes).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .drawing import Drawing, Point
from .exact import Interval, sqrt_interval
from .geometry import dist_sq, on_segment_closed
from .graph import Graph, hamiltonian_path, hamiltonian_path_exists
from .metrics import DEFAULT_REL_TOL, is_planar_drawing, spanning_ratio

# Explicit packing constant from the annulus argument: each annulus around a
# vertex of a drawing with spanning ratio at most s holds at most this many
# neighbors per unit of s^2.
ANNULUS_PACKING_CONSTANT = 48


@dataclass(frozen=True)
class AnnulusCensus:
    """Neighbor counts of one vertex, binned by distance annuli.

    Distances are normalized by the shortest edge incident to the center;
    annulus i collects normalized distances in (2**(i-1), 2**i], with exact
    boundary values assigned to the lower annulus (so a normalized distance of
    exactly 1 lands in annulus 1).
    """

    center: int
    shortest_incident_edge_len: Interval
    counts: dict[int, int]
    inside_unit: int


def annulus_census(d: Drawing, center: int) -> AnnulusCensus:
    g = d.graph
    if g.degree(center) == 0:
        raise ValueError("annulus census needs a vertex of degree >= 1")
    p = d.coords[center]
    min_sq = min(dist_sq(p, d.coords[u]) for u in g.adj[center])
    counts: dict[int, int] = {}
    inside_unit = 0
    for u in g.adj[center]:
        r_sq = dist_sq(p, d.coords[u]) / min_sq  # exact rational, no sqrt needed
        if r_sq < 1:
            inside_unit += 1
            continue
        i = 1
        bound = Fraction(4)
        while r_sq > bound:
            bound *= 4
            i += 1
        counts[i] = counts.get(i, 0) + 1
    return AnnulusCensus(center, sqrt_interval(min_sq), counts, inside_unit)


@dataclass(frozen=True)
class AnnulusViolation:
    vertex: int
    annulus: int
    count: int


@dataclass(frozen=True)
class AnnulusCheckResult:
    s: Fraction
    threshold: Fraction  # 48 * s**2
    violations: tuple[AnnulusViolation, ...]
    spanning_ratio: Optional[Interval]  # certified only when violations exist
    verdict: str  # "Consistent" or "InconsistentWithTheorem"


def annulus_bound_check(d: Drawing, s: Fraction) -> AnnulusCheckResult:
    """Check every vertex's annulus counts against 48*s^2 and, when a count is
    exceeded, certify that the spanning ratio indeed exceeds s.

    A verdict of "InconsistentWithTheorem" can only arise from an
    implementation bug, never from a valid drawing.
    """
    s = Fraction(s)
    if s < 1:
        raise ValueError("s must be at least 1")
    threshold = ANNULUS_PACKING_CONSTANT * s * s
    violations = []
    for v in range(d.graph.n):
        if d.graph.degree(v) == 0:
            continue
        census = annulus_census(d, v)
        for i, count in sorted(census.counts.items()):
            if count > threshold:
                violations.append(AnnulusViolation(v, i, count))
    if not violations:
        return AnnulusCheckResult(s, threshold, (), None, "Consistent")
    # A violation implies spanning ratio > s; certify by tightening the
    # enclosure until it separates from s.
    rel_tol = Fraction(1, 10**6)
    sr = spanning_ratio(d, rel_tol)
    for _ in range(8):
        if sr.lo > s or sr.hi <= s:
            break
        rel_tol /= 10**3
        sr = spanning_ratio(d, rel_tol)
    verdict = "Consistent" if sr.lo > s else "InconsistentWithTheorem"
    return AnnulusCheckResult(s, threshold, tuple(violations), sr, verdict)


def star_elr_lower_bound(degree: int, s: Fraction) -> Fraction:
    """Exact edge-length-ratio lower bound 2**floor((degree-1)/(48*s^2)) for a
    star of the given degree drawn with spanning ratio at most s."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    s = Fraction(s)
    if s < 1:
        raise ValueError("s must be at least 1")
    denom = ANNULUS_PACKING_CONSTANT * s * s
    k = int(Fraction(degree - 1) / denom)  # floor for nonnegative values
    return Fraction(2) ** k


def recognize_sr1(g: Graph) -> bool:
    """True iff g admits a straight-line drawing with spanning ratio exactly 1,
    i.e. iff g has a Hamiltonian path."""
    return hamiltonian_path_exists(g)


def sr1_witness(g: Graph) -> Optional[Drawing]:
    """A collinear drawing of spanning ratio exactly 1, when one exists:
    Hamiltonian path laid out at (0,0), (1,0), (2,0), ..."""
    path = hamiltonian_path(g)
    if path is None:
        return None
    coords: list[tuple[int, int]] = [(0, 0)] * g.n
    for i, v in enumerate(path):
        coords[v] = (i, 0)
    return Drawing.of(g, coords)


def _path_order(g: Graph) -> Optional[list[int]]:
    """Vertices of g in path order if g is a path graph (n >= 1), else None."""
    n = g.n
    if n == 1:
        return [0]
    if g.m != n - 1 or g.max_degree() > 2:
        return None
    ends = [v for v in range(n) if g.degree(v) == 1]
    if len(ends) != 2:
        return None
    order = [min(ends)]
    prev = -1
    while len(order) < n:
        nxt = [w for w in g.adj[order[-1]] if w != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def _fan_decomposition(g: Graph, apex_count: int) -> Optional[tuple[list[int], list[int]]]:
    """If g is a path plus `apex_count` vertices each adjacent to every other
    vertex except possibly each other, return (apexes, path order)."""
    n = g.n
    if n < apex_count + 1:
        return None
    full = [v for v in range(n) if g.degree(v) >= n - apex_count]
    # Apexes must be adjacent to all path vertices; their degree is n-1 or
    # n-apex_count depending on apex-apex edges, both >= n - apex_count.
    if len(full) < apex_count:
        return None
    for apexes in itertools.combinations(full, apex_count):
        rest = [v for v in range(n) if v not in apexes]
        if any(not all(g.has_edge(a, v) for v in rest) for a in apexes):
            continue
        sub = g.induced(rest)
        order = _path_order(sub)
        if order is not None:
            return list(apexes), [rest[i] for i in order]
    return None


def _is_octahedron(g: Graph) -> bool:
    """True iff g is the complete tripartite graph K_{2,2,2}: 6 vertices,
    4-regular, with the non-edges forming a perfect matching."""
    if g.n != 6 or any(g.degree(v) != 4 for v in range(6)):
        return False
    non_neighbors = [set(range(6)) - set(g.adj[v]) - {v} for v in range(6)]
    return all(len(s) == 1 for s in non_neighbors) and all(
        v in non_neighbors[next(iter(non_neighbors[v]))] for v in range(6)
    )


def recognize_planar_sr1(g: Graph) -> bool:
    """True iff g admits a planar straight-line drawing with spanning ratio
    exactly 1. The admissible graphs are: paths; a path plus one universal
    apex (fan); a path plus two apexes each adjacent to every path vertex,
    with or without the apex-apex edge (double fans); and the octahedron."""
    return planar_sr1_witness(g) is not None


def planar_sr1_witness(g: Graph) -> Optional[Drawing]:
    """An exact planar drawing of spanning ratio 1, when one exists."""
    n = g.n
    if n == 0:
        return None
    order = _path_order(g)
    if order is not None:
        coords: list[Point] = [None] * n  # type: ignore[list-item]
        for i, v in enumerate(order):
            coords[v] = (Fraction(i), Fraction(0))
        return Drawing(g, tuple(coords))

    fan = _fan_decomposition(g, 1)
    if fan is not None and g.m == (n - 2) + (n - 1):
        (apex,), path = fan
        coords = [None] * n  # type: ignore[list-item]
        coords[apex] = (Fraction(0), Fraction(1))
        for i, v in enumerate(path):
            coords[v] = (Fraction(i), Fraction(0))
        return Drawing(g, tuple(coords))

    fan2 = _fan_decomposition(g, 2)
    if fan2 is not None:
        (a, b), path = fan2
        apex_edge = g.has_edge(a, b)
        expected_m = (n - 3) + 2 * (n - 2) + (1 if apex_edge else 0)
        if g.m == expected_m and len(path) >= 1:
            coords = [None] * n  # type: ignore[list-item]
            if apex_edge:
                # Apexes flank the start of the path; their connecting segment
                # avoids every path vertex.
                coords[a] = (Fraction(0), Fraction(1))
                coords[b] = (Fraction(0), Fraction(-1))
                for i, v in enumerate(path):
                    coords[v] = (Fraction(i + 1), Fraction(0))
            else:
                # Non-adjacent apexes sit on opposite sides of one path vertex
                # so their segment is covered by a two-edge chain through it.
                coords[a] = (Fraction(-1), Fraction(0))
                coords[b] = (Fraction(1), Fraction(0))
                for i, v in enumerate(path):
                    coords[v] = (Fraction(0), Fraction(i))
            return Drawing(g, tuple(coords))

    if _is_octahedron(g):
        # Three concurrent-in-pairs lines with three points each; every
        # non-adjacent pair is separated by the midpoint of its line.
        non_edges = sorted(
            (u, v) for u in range(6) for v in range(u + 1, 6) if not g.has_edge(u, v)
        )
        blocked_pairs = [
            ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(3))),
            ((Fraction(1), Fraction(2)), (Fraction(3), Fraction(2))),
            ((Fraction(0), Fraction(0)), (Fraction(2), Fraction(2))),
        ]
        coords = [None] * 6  # type: ignore[list-item]
        for (u, v), (pu, pv) in zip(non_edges, blocked_pairs):
            coords[u] = pu
            coords[v] = pv
        return Drawing(g, tuple(coords))

    return None


def is_sr1_drawing(d: Drawing) -> bool:
    """Exact check that a drawing has spanning ratio exactly 1.

    Every vertex pair must be joined by a chain of edges whose vertices lie on
    the connecting segment in order (so the path length telescopes to the
    Euclidean distance). No square roots are needed.
    """
    g = d.graph
    n = g.n
    pts = d.coords
    if len(set(pts)) != n:
        return False
    for u in range(n):
        for v in range(u + 1, n):
            a, b = pts[u], pts[v]
            on_seg = [w for w in range(n) if on_segment_closed(a, b, pts[w])]
            on_seg.sort(key=lambda w: dist_sq(a, pts[w]))
            assert on_seg[0] == u and on_seg[-1] == v
            reachable = {u}
            for w in on_seg[1:]:
                if any(g.has_edge(x, w) for x in reachable):
                    reachable.add(w)
            if v not in reachable:
                return False
    return True
