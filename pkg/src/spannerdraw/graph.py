"""Undirected simple graphs, rooted trees, orderings, and small exact oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DegreeTargetMissed, InstanceTooLarge, NotATreeError, NotConnectedError

HAMILTONIAN_DP_LIMIT = 24
TOUGHNESS_LIMIT = 12


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in adj))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by `vertices`, relabeled to 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph.from_edges(len(vertices), edges)

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and is_connected(self)


@dataclass
class RootedTree:
    """A tree with a root, parent pointers, and ordered child lists."""

    graph: Graph
    root: int
    parent: list[Optional[int]] = field(default_factory=list)
    children: list[list[int]] = field(default_factory=list)

    @staticmethod
    def from_graph(g: Graph, root: int = 0) -> "RootedTree":
        if not g.is_tree():
            raise NotATreeError(f"graph with n={g.n}, m={g.m} is not a tree")
        parent: list[Optional[int]] = [None] * g.n
        children: list[list[int]] = [[] for _ in range(g.n)]
        seen = [False] * g.n
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    children[u].append(v)
                    stack.append(v)
        return RootedTree(g, root, parent, children)

    @property
    def n(self) -> int:
        return self.graph.n

    def subtree_sizes(self) -> list[int]:
        size = [1] * self.n
        for v in reversed(self._preorder()):
            p = self.parent[v]
            if p is not None:
                size[p] += size[v]
        return size

    def _preorder(self) -> list[int]:
        out = []
        stack = [self.root]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(reversed(self.children[u]))
        return out

    def rerooted(self, new_root: int) -> "RootedTree":
        return RootedTree.from_graph(self.graph, new_root)


@dataclass(frozen=True)
class VertexOrder:
    """A permutation of 0..n-1."""

    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("not a permutation")

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


def is_connected(g: Graph) -> bool:
    """True iff g has a single connected component (vacuously true for n=0)."""
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.n


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comps.append(comp)
    return comps


def connected_prefix_order(t: RootedTree) -> VertexOrder:
    """Order starting at the root in which every prefix induces a connected subtree.

    BFS order from the root; children are visited in stored child order.
    """
    order = []
    queue = [t.root]
    i = 0
    while i < len(queue):
        u = queue[i]
        i += 1
        order.append(u)
        queue.extend(t.children[u])
    return VertexOrder(tuple(order))


def hamiltonian_path_exists(g: Graph, limit: int = HAMILTONIAN_DP_LIMIT) -> bool:
    """Exact Hamiltonian-path decision by subset dynamic programming."""
    return hamiltonian_path(g, limit) is not None


def hamiltonian_path(g: Graph, limit: int = HAMILTONIAN_DP_LIMIT) -> Optional[list[int]]:
    """A Hamiltonian path as a vertex list, or None. Subset DP over 2^n states."""
    n = g.n
    if n > limit:
        raise InstanceTooLarge(n, limit)
    if n == 0:
        return []
    if n == 1:
        return [0]
    if not is_connected(g):
        return None
    masks = [0] * n
    for u in range(n):
        for v in g.adj[u]:
            masks[u] |= 1 << v
    full = (1 << n) - 1
    # reach[mask] = bitset of possible path endpoints using exactly `mask`
    reach: dict[int, int] = {1 << v: 1 << v for v in range(n)}
    frontier = list(reach)
    for _ in range(n - 1):
        nxt: dict[int, int] = {}
        for mask in frontier:
            ends = reach[mask]
            e = ends
            while e:
                u_bit = e & -e
                e ^= u_bit
                u = u_bit.bit_length() - 1
                cand = masks[u] & ~mask
                while cand:
                    v_bit = cand & -cand
                    cand ^= v_bit
                    nm = mask | v_bit
                    nxt[nm] = nxt.get(nm, 0) | v_bit
        reach = nxt
        frontier = list(reach)
        if not frontier:
            return None
    if full not in reach:
        return None
    # Reconstruct one path backwards.
    path = []
    mask = full
    end = (reach[full] & -reach[full]).bit_length() - 1
    path.append(end)
    while mask != (1 << end):
        pmask = mask ^ (1 << end)
        found = False
        for u in g.adj[end]:
            if pmask & (1 << u) and _subset_path_ends_at(g, pmask, u, masks):
                path.append(u)
                mask = pmask
                end = u
                found = True
                break
        assert found, "DP reconstruction failed"
    path.reverse()
    return path


def _subset_path_ends_at(g: Graph, mask: int, u: int, masks: list[int]) -> bool:
    """True iff the vertices of `mask` admit a Hamiltonian path of the induced subgraph ending at u."""
    memo: dict[tuple[int, int], bool] = {}

    def rec(m: int, end: int) -> bool:
        if m == (1 << end):
            return True
        key = (m, end)
        if key in memo:
            return memo[key]
        pm = m ^ (1 << end)
        ok = any(pm & (1 << w) and rec(pm, w) for w in g.adj[end] if masks[end] & (1 << w))
        memo[key] = ok
        return ok

    return rec(mask, u)


def edge_separator(t: RootedTree, d: int) -> tuple[int, int]:
    """Tree edge (u, v), u on the root side, splitting t into parts of size <= ceil((d-1)/d * n).

    Among valid edges the one minimizing the larger part is chosen, ties broken
    by smallest (u, v).
    """
    n = t.n
    if n < 2:
        raise ValueError("edge_separator needs at least 2 vertices")
    if t.graph.max_degree() > d:
        raise ValueError(f"tree max degree {t.graph.max_degree()} exceeds d={d}")
    size = t.subtree_sizes()
    best: Optional[tuple[int, int, int]] = None  # (larger part, u, v)
    for v in range(n):
        p = t.parent[v]
        if p is None:
            continue
        larger = max(size[v], n - size[v])
        key = (larger, p, v)
        if best is None or key < best:
            best = key
    assert best is not None
    larger, u, v = best
    bound = -((-(d - 1) * n) // d)  # ceil((d-1)/d * n)
    assert larger <= bound, f"separator bound violated: {larger} > {bound}"
    return (u, v)


def split_at_edge(t: RootedTree, u: int, v: int) -> tuple[list[int], list[int]]:
    """Vertex sets of the two components of t minus edge (u, v); first contains the root."""
    assert t.parent[v] == u
    sub = []
    stack = [v]
    while stack:
        w = stack.pop()
        sub.append(w)
        stack.extend(t.children[w])
    sub_set = set(sub)
    rest = [w for w in range(t.n) if w not in sub_set]
    return rest, sub


def degree_bounded_spanning_tree(g: Graph, d_target: int) -> RootedTree:
    """Spanning tree with small maximum degree via local edge swaps.

    Starts from a BFS tree and repeatedly swaps a non-tree edge for a tree edge
    to relieve maximum-degree vertices. Raises DegreeTargetMissed (carrying the
    best tree found) if the search stalls above d_target.
    """
    if not is_connected(g):
        raise NotConnectedError("graph must be connected")
    n = g.n
    if n == 0:
        raise ValueError("empty graph")
    tree_adj: list[set[int]] = [set() for _ in range(n)]
    seen = [False] * n
    seen[0] = True
    queue = [0]
    i = 0
    while i < len(queue):
        u = queue[i]
        i += 1
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                tree_adj[u].add(v)
                tree_adj[v].add(u)
                queue.append(v)

    def max_deg() -> int:
        return max((len(a) for a in tree_adj), default=0)

    non_tree = [(u, v) for u in range(n) for v in g.adj[u] if u < v and v not in tree_adj[u]]
    improved = True
    while max_deg() > d_target and improved:
        improved = False
        k = max_deg()
        hot = {w for w in range(n) if len(tree_adj[w]) == k}
        for u, v in non_tree:
            if len(tree_adj[u]) >= k - 1 or len(tree_adj[v]) >= k - 1:
                continue
            cycle = _tree_path(tree_adj, u, v)
            swap = next(
                (
                    (cycle[i], cycle[i + 1])
                    for i in range(len(cycle) - 1)
                    if cycle[i] in hot or cycle[i + 1] in hot
                ),
                None,
            )
            if swap is None:
                continue
            a, b = swap
            tree_adj[a].discard(b)
            tree_adj[b].discard(a)
            tree_adj[u].add(v)
            tree_adj[v].add(u)
            non_tree.remove((u, v))
            non_tree.append((min(a, b), max(a, b)))
            improved = True
            break

    tree = Graph(n, tuple(tuple(sorted(a)) for a in tree_adj))
    rooted = RootedTree.from_graph(tree, 0)
    achieved = max_deg()
    if achieved > d_target:
        raise DegreeTargetMissed(achieved, d_target, rooted)
    return rooted


def _tree_path(tree_adj: list[set[int]], s: int, t: int) -> list[int]:
    prev: dict[int, int] = {s: s}
    stack = [s]
    while stack:
        u = stack.pop()
        if u == t:
            break
        for v in tree_adj[u]:
            if v not in prev:
                prev[v] = u
                stack.append(v)
    path = [t]
    while path[-1] != s:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def toughness_bruteforce(g: Graph, limit: int = TOUGHNESS_LIMIT):
    """Exact toughness: min over cut sets S of |S| / (#components of G-S).

    Returns a Fraction, or math.inf for graphs no vertex removal splits
    (complete graphs and graphs with n <= 2).
    """
    n = g.n
    if n > limit:
        raise InstanceTooLarge(n, limit)
    best: Optional[Fraction] = None
    for mask in range(1, 1 << n):
        removed = [v for v in range(n) if mask & (1 << v)]
        if len(removed) == n:
            continue
        kept = [v for v in range(n) if not (mask & (1 << v))]
        sub = g.induced(kept)
        k = len(connected_components(sub))
        if k >= 2:
            val = Fraction(len(removed), k)
            if best is None or val < best:
                best = val
    return best if best is not None else math.inf
