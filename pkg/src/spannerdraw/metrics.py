"""Certified metric evaluation and exact geometric verdicts for drawings.

Spanning and edge-length ratios involve square roots, so they are reported as
certified rational enclosures: every edge length is bracketed between two
dyadic rationals (integers at scale 2**bits), shortest paths are computed once
with all-lower and once with all-upper brackets, and the working precision is
doubled until the enclosure is relatively tight. Planarity, properness, and
collinearity are decided exactly in rational arithmetic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .drawing import Drawing
from .errors import DisconnectedDrawingError, NoEdgesError
from .exact import Interval, isqrt_scaled
from .geometry import (
    any_three_collinear,
    dist_sq,
    in_segment_interior,
    segments_cross_improperly,
)
from .graph import is_connected

DEFAULT_REL_TOL = Fraction(1, 10**9)
INFINITE_RATIO = Interval(Fraction(10**30), Fraction(10**30))
_START_BITS = 64
_MAX_BITS = 16384


def has_coincident_vertices(d: Drawing) -> bool:
    return len(set(d.coords)) < d.graph.n


@dataclass(frozen=True)
class MetricReport:
    spanning_ratio: Optional[Interval]
    edge_length_ratio: Optional[Interval]
    width: Fraction
    height: Fraction
    planar: bool
    proper: bool
    no_three_collinear: bool
    min_pairwise_distance_sq: Optional[Fraction]
    spanning_ratio_infinite: bool = False


def _edge_weight_brackets(d: Drawing, bits: int) -> dict[tuple[int, int], tuple[int, int]]:
    """Integer brackets at scale 2**bits for every edge length."""
    out = {}
    for u, v in d.graph.edges():
        q = dist_sq(d.coords[u], d.coords[v])
        lo, hi = isqrt_scaled(q.numerator, q.denominator, bits)
        out[(u, v)] = (lo, hi)
    return out


def _sssp(d: Drawing, source: int, weights: dict[tuple[int, int], int]) -> list[int]:
    """Single-source shortest paths with nonnegative integer weights (Dijkstra)."""
    n = d.graph.n
    INF = -1
    dist = [INF] * n
    dist[source] = 0
    heap = [(0, source)]
    while heap:
        du, u = heapq.heappop(heap)
        if dist[u] != du:
            continue
        for v in d.graph.adj[u]:
            w = weights[(u, v) if u < v else (v, u)]
            nd = du + w
            if dist[v] == INF or nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def _sssp_tree(d: Drawing, source: int, weights: dict[tuple[int, int], int]) -> list[int]:
    """Path lengths from source when the graph is a tree (plain DFS accumulation)."""
    n = d.graph.n
    dist = [-1] * n
    dist[source] = 0
    stack = [source]
    while stack:
        u = stack.pop()
        for v in d.graph.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + weights[(u, v) if u < v else (v, u)]
                stack.append(v)
    return dist


def spanning_ratio(d: Drawing, rel_tol: Fraction = DEFAULT_REL_TOL) -> Interval:
    """Certified enclosure of max over pairs of (graph distance / Euclidean distance).

    Coincident vertices make the ratio infinite; an enclosure at the infinity
    sentinel INFINITE_RATIO is returned in that case.
    """
    g = d.graph
    if g.n < 2:
        raise ValueError("spanning ratio needs at least 2 vertices")
    if not is_connected(g):
        raise DisconnectedDrawingError("spanning ratio undefined: graph disconnected")
    if has_coincident_vertices(d):
        return INFINITE_RATIO

    is_tree = g.m == g.n - 1
    sssp = _sssp_tree if is_tree else _sssp
    bits = _START_BITS
    while True:
        weights = _edge_weight_brackets(d, bits)
        lo_w = {e: w[0] for e, w in weights.items()}
        hi_w = {e: w[1] for e, w in weights.items()}
        ok = all(w > 0 for w in lo_w.values())
        if ok:
            best_lo = (0, 1)  # ratio lower bound as num/den over scaled ints
            best_hi = (0, 1)
            failed = False
            for u in range(g.n):
                dist_lo = sssp(d, u, lo_w)
                dist_hi = sssp(d, u, hi_w)
                for v in range(u + 1, g.n):
                    q = dist_sq(d.coords[u], d.coords[v])
                    e_lo, e_hi = isqrt_scaled(q.numerator, q.denominator, bits)
                    if e_lo == 0:
                        failed = True
                        break
                    # ratio in [dist_lo/e_hi, dist_hi/e_lo]; scales cancel
                    if dist_lo[v] * best_lo[1] > best_lo[0] * e_hi:
                        best_lo = (dist_lo[v], e_hi)
                    if dist_hi[v] * best_hi[1] > best_hi[0] * e_lo:
                        best_hi = (dist_hi[v], e_lo)
                if failed:
                    break
            if not failed:
                lo = max(Fraction(*best_lo), Fraction(1))
                hi = max(Fraction(*best_hi), lo)
                if hi / lo - 1 <= rel_tol:
                    return Interval(lo, hi)
        bits *= 2
        if bits > _MAX_BITS:
            raise RuntimeError("precision escalation exhausted in spanning_ratio")


def spanning_ratio_bruteforce(d: Drawing, rel_tol: Fraction = DEFAULT_REL_TOL) -> Interval:
    """Independent oracle: Floyd–Warshall all-pairs at doubled starting precision."""
    g = d.graph
    if g.n < 2:
        raise ValueError("spanning ratio needs at least 2 vertices")
    if not is_connected(g):
        raise DisconnectedDrawingError("spanning ratio undefined: graph disconnected")
    if has_coincident_vertices(d):
        return INFINITE_RATIO
    n = g.n
    bits = 2 * _START_BITS
    while True:
        weights = _edge_weight_brackets(d, bits)
        BIG = 1 << (4 * bits + 2 * n.bit_length() + 64)
        dlo = [[BIG] * n for _ in range(n)]
        dhi = [[BIG] * n for _ in range(n)]
        for i in range(n):
            dlo[i][i] = dhi[i][i] = 0
        for (u, v), (wl, wh) in weights.items():
            dlo[u][v] = dlo[v][u] = wl
            dhi[u][v] = dhi[v][u] = wh
        for k in range(n):
            dlk = dlo[k]
            dhk = dhi[k]
            for i in range(n):
                dli = dlo[i]
                dhi_i = dhi[i]
                lik = dli[k]
                hik = dhi_i[k]
                for j in range(n):
                    if lik + dlk[j] < dli[j]:
                        dli[j] = lik + dlk[j]
                    if hik + dhk[j] < dhi_i[j]:
                        dhi_i[j] = hik + dhk[j]
        best_lo = (0, 1)
        best_hi = (0, 1)
        failed = False
        for u in range(n):
            for v in range(u + 1, n):
                q = dist_sq(d.coords[u], d.coords[v])
                e_lo, e_hi = isqrt_scaled(q.numerator, q.denominator, bits)
                if e_lo == 0:
                    failed = True
                    break
                if dlo[u][v] * best_lo[1] > best_lo[0] * e_hi:
                    best_lo = (dlo[u][v], e_hi)
                if dhi[u][v] * best_hi[1] > best_hi[0] * e_lo:
                    best_hi = (dhi[u][v], e_lo)
            if failed:
                break
        if not failed:
            lo = max(Fraction(*best_lo), Fraction(1))
            hi = max(Fraction(*best_hi), lo)
            if hi / lo - 1 <= rel_tol:
                return Interval(lo, hi)
        bits *= 2
        if bits > _MAX_BITS:
            raise RuntimeError("precision escalation exhausted in spanning_ratio_bruteforce")


def edge_length_ratio(d: Drawing, rel_tol: Fraction = DEFAULT_REL_TOL) -> Interval:
    """Certified enclosure of (longest edge)/(shortest edge)."""
    edges = d.graph.edges()
    if not edges:
        raise NoEdgesError("edge-length ratio undefined: no edges")
    sqs = [dist_sq(d.coords[u], d.coords[v]) for u, v in edges]
    mx = max(sqs)
    mn = min(sqs)
    if mn == 0:
        return INFINITE_RATIO
    ratio_sq = mx / mn
    bits = _START_BITS
    while True:
        lo, hi = isqrt_scaled(ratio_sq.numerator, ratio_sq.denominator, bits)
        if lo > 0:
            ivl = Interval(Fraction(lo, 1 << bits), Fraction(hi, 1 << bits))
            if ivl.hi / ivl.lo - 1 <= rel_tol:
                return ivl
        bits *= 2
        if bits > _MAX_BITS:
            raise RuntimeError("precision escalation exhausted in edge_length_ratio")


def is_planar_drawing(d: Drawing) -> bool:
    """Exact: no two edges share a point except a common endpoint.

    Edge pairs are pruned with an x-interval sweep before the exact predicate.
    """
    segs = []
    for u, v in d.graph.edges():
        a, b = d.coords[u], d.coords[v]
        if a == b:
            return False
        xmin, xmax = (a[0], b[0]) if a[0] <= b[0] else (b[0], a[0])
        segs.append((xmin, xmax, a, b))
    segs.sort(key=lambda s: s[0])
    active: list[tuple] = []
    for s in segs:
        still = []
        for t in active:
            if t[1] < s[0]:
                continue
            still.append(t)
            ymin_s = min(s[2][1], s[3][1])
            ymax_s = max(s[2][1], s[3][1])
            ymin_t = min(t[2][1], t[3][1])
            ymax_t = max(t[2][1], t[3][1])
            if ymax_t < ymin_s or ymax_s < ymin_t:
                continue
            if segments_cross_improperly(s[2], s[3], t[2], t[3]):
                return False
        still.append(s)
        active = still
    return True


def is_proper_drawing(d: Drawing) -> bool:
    """Exact: all vertex points distinct and no vertex interior to an edge segment."""
    if has_coincident_vertices(d):
        return False
    for u, v in d.graph.edges():
        a, b = d.coords[u], d.coords[v]
        xmin, xmax = min(a[0], b[0]), max(a[0], b[0])
        ymin, ymax = min(a[1], b[1]), max(a[1], b[1])
        for w in range(d.graph.n):
            if w == u or w == v:
                continue
            p = d.coords[w]
            if not (xmin <= p[0] <= xmax and ymin <= p[1] <= ymax):
                continue
            if in_segment_interior(a, b, p):
                return False
    return True


def no_three_collinear(d: Drawing) -> bool:
    """Exact verdict over all vertex triples."""
    return not any_three_collinear(d.coords)


def bounding_box(d: Drawing) -> tuple[Fraction, Fraction, tuple]:
    """(width, height, ((xmin, ymin), (xmax, ymax))) of the smallest enclosing axis-parallel box."""
    if d.graph.n < 1:
        raise ValueError("bounding box needs at least one vertex")
    xs = [p[0] for p in d.coords]
    ys = [p[1] for p in d.coords]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    return (xmax - xmin, ymax - ymin, ((xmin, ymin), (xmax, ymax)))


def min_pairwise_distance_sq(d: Drawing) -> Fraction:
    if d.graph.n < 2:
        raise ValueError("needs at least 2 vertices")
    pts = sorted(d.coords)
    best = None
    # Sorted-by-x scan with the classic divide-free pruning: only compare
    # against predecessors whose squared x-gap is below the current best.
    for i, p in enumerate(pts):
        j = i - 1
        while j >= 0:
            dx = p[0] - pts[j][0]
            if best is not None and dx * dx >= best:
                break
            q = dist_sq(p, pts[j])
            if best is None or q < best:
                best = q
            j -= 1
    assert best is not None
    return best


def compute_metrics(d: Drawing, rel_tol: Fraction = DEFAULT_REL_TOL) -> MetricReport:
    """Full report; spanning ratio omitted (None) when undefined by disconnection."""
    g = d.graph
    width, height, _ = bounding_box(d) if g.n >= 1 else (Fraction(0), Fraction(0), None)
    proper = is_proper_drawing(d)
    sr: Optional[Interval] = None
    sr_inf = False
    if g.n >= 2 and is_connected(g):
        sr = spanning_ratio(d, rel_tol)
        sr_inf = sr == INFINITE_RATIO
    elr: Optional[Interval] = None
    if g.m >= 1:
        elr = edge_length_ratio(d, rel_tol)
    return MetricReport(
        spanning_ratio=sr,
        edge_length_ratio=elr,
        width=width,
        height=height,
        planar=is_planar_drawing(d),
        proper=proper,
        no_three_collinear=no_three_collinear(d),
        min_pairwise_distance_sq=min_pairwise_distance_sq(d) if g.n >= 2 else None,
        spanning_ratio_infinite=sr_inf,
    )
